#include "qmarg/states.hpp"

#include <cmath>
#include <stdexcept>

#include "qmarg/perm_rep.hpp"
#include "qmarg/permutation.hpp"
#include "qmarg/tensor_ops.hpp"

namespace qmarg {

namespace {

constexpr double kParamSlack = 1e-12;

}  // namespace

WernerParam::WernerParam(int d, double psi_minus) : d(d), psi_minus(psi_minus) {
    if (d < 2) throw std::invalid_argument("WernerParam: d < 2");
    if (psi_minus < -1.0 - kParamSlack || psi_minus > 1.0 + kParamSlack)
        throw std::invalid_argument("WernerParam: psi_minus outside [-1, 1]");
}

IsotropicParam::IsotropicParam(int d, double phi_plus) : d(d), phi_plus(phi_plus) {
    if (d < 2) throw std::invalid_argument("IsotropicParam: d < 2");
    if (phi_plus < -kParamSlack || phi_plus > d + kParamSlack)
        throw std::invalid_argument("IsotropicParam: phi_plus outside [0, d]");
}

WernerParam werner_from_alpha(int d, double alpha) {
    return WernerParam(d, alpha * (d + 1.0) - 1.0);
}

IsotropicParam iso_from_alpha(int d, double alpha) {
    return IsotropicParam(d, alpha * (d + 1.0) - 1.0);
}

ComplexMatrix swap_operator(int d) {
    return perm_operator(Permutation::transposition(2, 0, 1), d);
}

std::vector<cplx> max_entangled_vector(int d) {
    std::vector<cplx> psi(static_cast<std::size_t>(d) * d, cplx{0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i)
        psi[static_cast<std::size_t>(i) * d + i] = cplx{a, 0.0};
    return psi;
}

ComplexMatrix max_entangled_projector(int d) {
    return outer(max_entangled_vector(d));
}

DensityMatrix werner_state(const WernerParam& p) {
    const double d = p.d;
    const double psi = p.psi_minus;
    const std::size_t dim = static_cast<std::size_t>(p.d) * p.d;
    const double pref = d / (d * d - 1.0);
    ComplexMatrix m = swap_operator(p.d);
    m *= cplx{pref * (psi - 1.0 / d) / d, 0.0};
    const double diag = pref * (d - psi) / (d * d);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) += diag;
    return DensityMatrix(TensorSpace::qudits(p.d, 2), std::move(m));
}

DensityMatrix isotropic_state(const IsotropicParam& p) {
    const double d = p.d;
    const double phi = p.phi_plus;
    const std::size_t dim = static_cast<std::size_t>(p.d) * p.d;
    const double pref = d / (d * d - 1.0);
    ComplexMatrix m = max_entangled_projector(p.d);
    m *= cplx{pref * (phi - 1.0 / d), 0.0};
    const double diag = pref * (d - phi) / (d * d);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) += diag;
    return DensityMatrix(TensorSpace::qudits(p.d, 2), std::move(m));
}

double concurrence_werner(const WernerParam& p) {
    return p.psi_minus <= 0.0 ? -p.psi_minus : 0.0;
}

double concurrence_iso(const IsotropicParam& p) {
    if (p.phi_plus <= 1.0) return 0.0;
    return std::sqrt(2.0 / (static_cast<double>(p.d) * (p.d - 1.0))) * (p.phi_plus - 1.0);
}

ComplexMatrix random_unitary(int d, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix u(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (std::size_t r = 0; r < u.rows(); ++r)
        for (std::size_t c = 0; c < u.cols(); ++c)
            u(r, c) = cplx{gauss(rng), gauss(rng)};
    for (std::size_t c = 0; c < u.cols(); ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx overlap{0.0, 0.0};
            for (std::size_t r = 0; r < u.rows(); ++r)
                overlap += std::conj(u(r, prev)) * u(r, c);
            for (std::size_t r = 0; r < u.rows(); ++r)
                u(r, c) -= overlap * u(r, prev);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < u.rows(); ++r) norm += std::norm(u(r, c));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < u.rows(); ++r) u(r, c) /= norm;
    }
    return u;
}

std::vector<cplx> antisymmetric_state(int d) {
    if (d < 2) throw std::invalid_argument("antisymmetric_state: d < 2");
    if (d > 6) throw CapExceeded("antisymmetric_state: d > 6");
    const TensorSpace space = TensorSpace::qudits(d, d);
    std::vector<cplx> psi(space.total_dim(), cplx{0.0, 0.0});
    const double a = 1.0 / std::sqrt(std::tgamma(d + 1.0));
    std::vector<int> digits(static_cast<std::size_t>(d));
    for (const Permutation& pi : Permutation::all(d)) {
        // Slot k holds basis label pi(k) of |0 1 ... d-1>.
        for (int k = 0; k < d; ++k) digits[static_cast<std::size_t>(k)] = pi(k);
        psi[space.compose(digits)] += cplx{pi.sign() * a, 0.0};
    }
    return psi;
}

}  // namespace qmarg
