#include "qmarg/perm_rep.hpp"

#include <cmath>
#include <stdexcept>

#include "qmarg/tensor_ops.hpp"

namespace qmarg {

namespace {

std::size_t pow_check(int d, int n, std::size_t cap, const char* who) {
    std::size_t dim = 1;
    for (int k = 0; k < n; ++k) {
        dim *= static_cast<std::size_t>(d);
        if (dim > cap) throw CapExceeded(std::string(who) + ": d^N exceeds cap");
    }
    return dim;
}

}  // namespace

ComplexMatrix perm_operator(const Permutation& p, int d) {
    const int n = p.size();
    const std::size_t dim = pow_check(d, n, dense_cap, "perm_operator");
    TensorSpace space = TensorSpace::qudits(d, n);
    ComplexMatrix v(dim, dim);
    std::vector<int> digits, image(static_cast<std::size_t>(n));
    for (std::size_t col = 0; col < dim; ++col) {
        space.decompose(col, digits);
        for (int k = 0; k < n; ++k)
            image[static_cast<std::size_t>(p(k))] = digits[static_cast<std::size_t>(k)];
        v(space.compose(image), col) = cplx{1.0, 0.0};
    }
    return v;
}

void apply_perm_operator(const Permutation& p, int d,
                         const std::vector<cplx>& in, std::vector<cplx>& out) {
    const int n = p.size();
    const std::size_t dim = pow_check(d, n, matfree_cap, "apply_perm_operator");
    if (in.size() != dim)
        throw std::invalid_argument("apply_perm_operator: vector length mismatch");
    out.resize(dim);
    kernels::apply_subsystem_perm(in.data(), out.data(), d, p.images().data(), n);
}

namespace {

struct S3Ops {
    ComplexMatrix id, ab, bc, ca, abc, cba;
};

S3Ops s3_operators(int d) {
    S3Ops v;
    v.id = perm_operator(Permutation::identity(3), d);
    v.ab = perm_operator(Permutation::transposition(3, 0, 1), d);
    v.bc = perm_operator(Permutation::transposition(3, 1, 2), d);
    v.ca = perm_operator(Permutation::transposition(3, 2, 0), d);
    v.abc = perm_operator(Permutation::cycle(3, {0, 1, 2}), d);
    v.cba = perm_operator(Permutation::cycle(3, {2, 1, 0}), d);
    return v;
}

}  // namespace

SymmetrizerBasisWerner build_werner_basis(int d) {
    if (d < 2) throw std::invalid_argument("build_werner_basis: d < 2");
    const S3Ops v = s3_operators(d);
    SymmetrizerBasisWerner b;
    b.d = d;
    const cplx sixth{1.0 / 6.0, 0.0}, third{1.0 / 3.0, 0.0};
    b.ops[kPlus] = sixth * (v.id + v.ab + v.bc + v.ca + v.abc + v.cba);
    b.ops[kMinus] = sixth * (v.id - v.ab - v.bc - v.ca + v.abc + v.cba);
    b.ops[k0] = third * (cplx{2.0, 0.0} * v.id - v.abc - v.cba);
    b.ops[k1] = third * (cplx{2.0, 0.0} * v.bc - v.ca - v.ab);
    b.ops[k2] = cplx{1.0 / std::sqrt(3.0), 0.0} * (v.ab - v.ca);
    b.ops[k3] = cplx{0.0, 1.0 / std::sqrt(3.0)} * (v.abc - v.cba);
    return b;
}

SymmetrizerBasisIso build_iso_basis(int d) {
    if (d < 2) throw std::invalid_argument("build_iso_basis: d < 2");
    const S3Ops v = s3_operators(d);
    const TensorSpace space = TensorSpace::qudits(d, 3);
    const ComplexMatrix ab = partial_transpose(v.ab, space, 0);
    const ComplexMatrix ca = partial_transpose(v.ca, space, 0);
    const ComplexMatrix abc = partial_transpose(v.abc, space, 0);
    const ComplexMatrix cba = partial_transpose(v.cba, space, 0);
    const ComplexMatrix& bc = v.bc;  // leaves subsystem 0 alone
    const double dd = d;

    SymmetrizerBasisIso b;
    b.d = d;
    b.ops[kPlus] = cplx{0.5, 0.0} *
                   (v.id + bc - cplx{1.0 / (dd + 1.0), 0.0} * (ab + ca + abc + cba));
    b.ops[kMinus] = cplx{0.5, 0.0} *
                    (v.id - bc + cplx{1.0 / (dd - 1.0), 0.0} * (abc + cba - ab - ca));
    b.ops[k0] = cplx{1.0 / (dd * dd - 1.0), 0.0} *
                (cplx{dd, 0.0} * (ab + ca) - (abc + cba));
    b.ops[k1] = cplx{1.0 / (dd * dd - 1.0), 0.0} *
                (cplx{dd, 0.0} * (abc + cba) - (ab + ca));
    b.ops[k2] = cplx{1.0 / std::sqrt(dd * dd - 1.0), 0.0} * (ab - ca);
    b.ops[k3] = cplx{0.0, 1.0 / std::sqrt(dd * dd - 1.0)} * (abc - cba);
    return b;
}

namespace {

// Pseudo-inverse solve of the Gram system G c = m, eigenvalue cutoff 1e-9.
std::vector<cplx> gram_solve(const std::vector<Permutation>& perms, int d,
                             const std::vector<cplx>& moments) {
    const std::size_t n = perms.size();
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Permutation rel = perms[i].inverse().compose(perms[j]);
            g(i, j) = cplx{std::pow(static_cast<double>(d), rel.num_cycles()), 0.0};
        }
    const EigResult eig = hermitian_eig(g, 1e-9);
    const double cutoff = 1e-9 * std::abs(eig.values.back());
    std::vector<cplx> c(n, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(eig.values[k]) <= cutoff) continue;
        cplx proj{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i)
            proj += std::conj(eig.vectors(i, k)) * moments[i];
        proj /= eig.values[k];
        for (std::size_t i = 0; i < n; ++i) c[i] += eig.vectors(i, k) * proj;
    }
    return c;
}

}  // namespace

DensityMatrix twirl_werner(const DensityMatrix& rho) {
    const TensorSpace& space = rho.space();
    const int n = space.num_subsystems();
    const int d = space.dim(0);
    for (int k = 1; k < n; ++k)
        if (space.dim(k) != d)
            throw std::invalid_argument("twirl_werner: subsystem dimensions differ");
    pow_check(d, n, dense_cap, "twirl_werner");

    const std::vector<Permutation> perms = Permutation::all(n);
    std::vector<ComplexMatrix> vops;
    vops.reserve(perms.size());
    for (const Permutation& p : perms) vops.push_back(perm_operator(p, d));

    std::vector<cplx> moments(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i)
        moments[i] = matmul(vops[i].dagger(), rho.mat()).trace();

    const std::vector<cplx> coeff = gram_solve(perms, d, moments);
    ComplexMatrix out(space.total_dim(), space.total_dim());
    for (std::size_t i = 0; i < perms.size(); ++i) out += coeff[i] * vops[i];

    // The projection is exact up to roundoff; re-hermitize before validating.
    ComplexMatrix herm = cplx{0.5, 0.0} * (out + out.dagger());
    return DensityMatrix(space, std::move(herm));
}

DensityMatrix twirl_iso(const DensityMatrix& rho) {
    const TensorSpace& space = rho.space();
    const ComplexMatrix flipped = partial_transpose(rho.mat(), space, 0);
    // The partial transpose of a state need not be a state; run the Gram
    // projection on the raw matrix and transpose back.
    const int n = space.num_subsystems();
    const int d = space.dim(0);
    for (int k = 1; k < n; ++k)
        if (space.dim(k) != d)
            throw std::invalid_argument("twirl_iso: subsystem dimensions differ");
    pow_check(d, n, dense_cap, "twirl_iso");

    const std::vector<Permutation> perms = Permutation::all(n);
    std::vector<ComplexMatrix> vops;
    vops.reserve(perms.size());
    for (const Permutation& p : perms) vops.push_back(perm_operator(p, d));

    std::vector<cplx> moments(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i)
        moments[i] = matmul(vops[i].dagger(), flipped).trace();

    const std::vector<cplx> coeff = gram_solve(perms, d, moments);
    ComplexMatrix proj(space.total_dim(), space.total_dim());
    for (std::size_t i = 0; i < perms.size(); ++i) proj += coeff[i] * vops[i];

    ComplexMatrix out = partial_transpose(proj, space, 0);
    ComplexMatrix herm = cplx{0.5, 0.0} * (out + out.dagger());
    return DensityMatrix(space, std::move(herm));
}

}  // namespace qmarg
