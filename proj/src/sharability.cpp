#include "qmarg/sharability.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qmarg/kernels.hpp"
#include "qmarg/perm_rep.hpp"
#include "qmarg/states.hpp"
#include "qmarg/tensor_ops.hpp"

namespace qmarg::sharability {

namespace {

constexpr double kTol = 1e-12;

std::size_t pow_cap(int d, int n, std::size_t cap, const char* who) {
    std::size_t dim = 1;
    for (int k = 0; k < n; ++k) {
        dim *= static_cast<std::size_t>(d);
        if (dim > cap) throw CapExceeded(std::string(who) + ": dimension exceeds cap");
    }
    return dim;
}

}  // namespace

SharingHamiltonian::SharingHamiltonian(int d, int m, int n) : d(d), m(m), n(n) {
    if (d < 2 || m < 1 || n < 1)
        throw std::invalid_argument("SharingHamiltonian: need d >= 2, m, n >= 1");
    pow_cap(d, m + n, matfree_cap, "SharingHamiltonian");
}

std::size_t SharingHamiltonian::dim() const {
    std::size_t dd = 1;
    for (int k = 0; k < m + n; ++k) dd *= static_cast<std::size_t>(d);
    return dd;
}

void SharingHamiltonian::apply(const std::vector<cplx>& in,
                               std::vector<cplx>& out) const {
    const std::size_t dd = dim();
    if (in.size() != dd)
        throw std::invalid_argument("SharingHamiltonian::apply: length mismatch");
    out.assign(dd, cplx{0.0, 0.0});
    const cplx coeff{-1.0 / (static_cast<double>(m) * n), 0.0};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            kernels::add_swapped(in.data(), out.data(), coeff, d, m + n, i, m + j);
}

ComplexMatrix SharingHamiltonian::dense() const {
    const std::size_t dd = pow_cap(d, m + n, dense_cap, "SharingHamiltonian::dense");
    ComplexMatrix h(dd, dd);
    std::vector<cplx> e(dd, cplx{0.0, 0.0}), col;
    for (std::size_t c = 0; c < dd; ++c) {
        e[c] = cplx{1.0, 0.0};
        apply(e, col);
        for (std::size_t r = 0; r < dd; ++r) h(r, c) = col[r];
        e[c] = cplx{0.0, 0.0};
    }
    return h;
}

bool sharable_1n_werner(int d, int n, double psi_minus) {
    if (d < 2 || n < 1)
        throw std::invalid_argument("sharable_1n_werner: need d >= 2, n >= 1");
    return psi_minus >= -(static_cast<double>(d) - 1.0) / n - kTol;
}

bool sharable_1n_iso(int d, int n, double phi_plus) {
    if (d < 2 || n < 1)
        throw std::invalid_argument("sharable_1n_iso: need d >= 2, n >= 1");
    return phi_plus <= 1.0 + (static_cast<double>(d) - 1.0) / n + kTol;
}

Rational max_h_eigenvalue_young(int d, int m, int n) {
    if (d < 2 || m < 1 || n < 1)
        throw std::invalid_argument("max_h_eigenvalue_young: need d >= 2, m, n >= 1");
    bool first = true;
    Rational best;
    const auto lefts = enumerate_diagrams(m, d);
    const auto rights = enumerate_diagrams(n, d);
    for (const YoungDiagram& yl : lefts) {
        const std::int64_t al = yl.sum_sq_columns(), bl = yl.sum_sq_rows();
        for (const YoungDiagram& yr : rights) {
            const std::int64_t ar = yr.sum_sq_columns(), br = yr.sum_sq_rows();
            for (const YoungDiagram& glued : lr_decompose(yl, yr, d)) {
                const Rational eig(glued.sum_sq_columns() - al - ar -
                                       glued.sum_sq_rows() + bl + br,
                                   2 * static_cast<std::int64_t>(m) * n);
                if (first || best < eig) {
                    best = eig;
                    first = false;
                }
            }
        }
    }
    return best;
}

double max_h_eigenvalue_bruteforce(int d, int m, int n, double tol, int max_iter) {
    const SharingHamiltonian h(d, m, n);
    return max_eig_matfree(
        [&](const std::vector<cplx>& in, std::vector<cplx>& out) { h.apply(in, out); },
        h.dim(), tol, max_iter);
}

bool sharable_mn_werner(int d, int m, int n, double psi_minus) {
    const double threshold = max_h_eigenvalue_young(d, m, n).to_double();
    return psi_minus >= std::max(-1.0, -threshold) - kTol;
}

DensityMatrix sharing_state(int d, int m, int n) {
    const SharingHamiltonian h(d, m, n);
    const ComplexMatrix dense = h.dense();
    const EigResult eig = hermitian_eig(dense);
    const double top = eig.values.back();
    const std::size_t dd = dense.rows();
    ComplexMatrix proj(dd, dd);
    double rank = 0.0;
    for (std::size_t k = 0; k < dd; ++k) {
        if (eig.values[k] < top - 1e-8) continue;
        rank += 1.0;
        for (std::size_t r = 0; r < dd; ++r)
            for (std::size_t c = 0; c < dd; ++c)
                proj(r, c) += eig.vectors(r, k) * std::conj(eig.vectors(c, k));
    }
    proj *= cplx{1.0 / rank, 0.0};
    ComplexMatrix herm = cplx{0.5, 0.0} * (proj + proj.dagger());
    return DensityMatrix(TensorSpace::qudits(d, m + n), std::move(herm));
}

DensityMatrix sharing_state_1n(int d, int n) { return sharing_state(d, 1, n); }

DensityMatrix share_separable(const std::vector<SeparableComponent>& components,
                              int m, int n) {
    if (components.empty())
        throw std::invalid_argument("share_separable: no components");
    double total = 0.0;
    for (const auto& comp : components) {
        if (comp.weight < -kTol)
            throw std::invalid_argument("share_separable: negative weight");
        total += comp.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("share_separable: weights do not sum to one");

    const std::size_t dl = components.front().left.rows();
    const std::size_t dr = components.front().right.rows();
    std::size_t dim = 1;
    for (int k = 0; k < m; ++k) {
        dim *= dl;
        if (dim > dense_cap) throw CapExceeded("share_separable: dimension exceeds cap");
    }
    for (int k = 0; k < n; ++k) {
        dim *= dr;
        if (dim > dense_cap) throw CapExceeded("share_separable: dimension exceeds cap");
    }

    ComplexMatrix w(dim, dim);
    for (const auto& comp : components) {
        if (comp.left.rows() != dl || comp.right.rows() != dr)
            throw std::invalid_argument("share_separable: component dims differ");
        ComplexMatrix term = ComplexMatrix::identity(1);
        for (int k = 0; k < m; ++k) term = kron(term, comp.left);
        for (int k = 0; k < n; ++k) term = kron(term, comp.right);
        w += cplx{comp.weight, 0.0} * term;
    }

    std::vector<int> dims;
    for (int k = 0; k < m; ++k) dims.push_back(static_cast<int>(dl));
    for (int k = 0; k < n; ++k) dims.push_back(static_cast<int>(dr));
    return DensityMatrix(TensorSpace(std::move(dims)), std::move(w));
}

namespace {

std::optional<long> werner_bound(int d, double psi) {
    if (psi >= 0.0) return std::nullopt;
    return static_cast<long>(std::floor((d - 1.0) / (-psi) + 1e-9));
}

std::optional<long> iso_bound(int d, double phi) {
    if (phi <= 1.0) return std::nullopt;
    return static_cast<long>(std::floor((d - 1.0) / (phi - 1.0) + 1e-9));
}

std::optional<long> tighter(std::optional<long> a, std::optional<long> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace

TwirlBounds twirl_sharability_bounds(const DensityMatrix& rho,
                                     int num_random_unitaries, unsigned seed) {
    const TensorSpace& space = rho.space();
    if (space.num_subsystems() != 2 || space.dim(0) != space.dim(1))
        throw std::invalid_argument(
            "twirl_sharability_bounds: expects a bipartite equal-dimension state");
    const int d = space.dim(0);
    const ComplexMatrix v = swap_operator(d);
    const ComplexMatrix vta = partial_transpose(v, space, 0);

    auto params = [&](const ComplexMatrix& m) {
        return std::pair<double, double>{matmul(v, m).trace().real(),
                                         matmul(vta, m).trace().real()};
    };

    const auto [psi, phi] = params(rho.mat());
    TwirlBounds out;
    out.psi_minus = psi;
    out.phi_plus = phi;
    out.werner_n = werner_bound(d, psi);
    out.iso_n = iso_bound(d, phi);

    std::mt19937 rng(seed);
    for (int k = 0; k < num_random_unitaries; ++k) {
        const ComplexMatrix u = random_unitary(d, rng);
        const ComplexMatrix lift = kron(ComplexMatrix::identity(static_cast<std::size_t>(d)), u);
        const ComplexMatrix rotated = matmul(matmul(lift, rho.mat()), lift.dagger());
        const auto [psi_u, phi_u] = params(rotated);
        out.werner_n = tighter(out.werner_n, werner_bound(d, psi_u));
        out.iso_n = tighter(out.iso_n, iso_bound(d, phi_u));
    }
    return out;
}

std::optional<Rational> reference_threshold(int d, int m, int n) {
    struct Cell {
        int num, den;
    };
    // Rows indexed by n = 1..5, columns by m = 1..5; {0, 0} marks cells
    // without a reference value.
    static constexpr Cell kD2[5][5] = {
        {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}},
        {{1, 2}, {1, 2}, {1, 3}, {1, 4}, {1, 5}},
        {{1, 3}, {1, 3}, {1, 3}, {1, 4}, {1, 5}},
        {{1, 4}, {1, 4}, {1, 4}, {1, 4}, {1, 5}},
        {{1, 5}, {1, 5}, {1, 5}, {1, 5}, {1, 5}},
    };
    static constexpr Cell kD3[5][5] = {
        {{1, 1}, {1, 1}, {2, 3}, {1, 2}, {2, 5}},
        {{1, 1}, {1, 2}, {1, 2}, {1, 2}, {2, 5}},
        {{2, 3}, {1, 2}, {1, 3}, {1, 3}, {1, 3}},
        {{1, 2}, {1, 2}, {1, 3}, {1, 4}, {1, 4}},
        {{2, 5}, {1, 3}, {1, 3}, {1, 4}, {0, 0}},
    };
    static constexpr Cell kD4[5][5] = {
        {{1, 1}, {1, 1}, {1, 1}, {3, 4}, {3, 5}},
        {{1, 1}, {1, 1}, {2, 3}, {1, 2}, {1, 2}},
        {{1, 1}, {2, 3}, {5, 9}, {1, 2}, {0, 0}},
        {{3, 4}, {1, 2}, {1, 2}, {0, 0}, {0, 0}},
        {{3, 5}, {1, 2}, {0, 0}, {0, 0}, {0, 0}},
    };
    if (m < 1 || m > 5 || n < 1 || n > 5) return std::nullopt;
    const Cell* row = nullptr;
    if (d == 2) row = kD2[n - 1];
    else if (d == 3) row = kD3[n - 1];
    else if (d == 4) row = kD4[n - 1];
    else return std::nullopt;
    const Cell cell = row[m - 1];
    if (cell.den == 0) return std::nullopt;
    return Rational(cell.num, cell.den);
}

}  // namespace qmarg::sharability
