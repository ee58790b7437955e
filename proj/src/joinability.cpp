#include "qmarg/joinability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmarg/tensor_ops.hpp"

namespace qmarg::joinability {

namespace {

constexpr double kBoxSlack = 1e-9;

double clamp(double v, double lo, double hi) { return std::max(lo, std::min(hi, v)); }

// Minimum of a convex function on [lo, hi] by ternary search.
struct MinResult {
    double arg;
    double value;
};

template <typename F>
MinResult minimize_convex(F f, double lo, double hi) {
    for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (f(m1) <= f(m2))
            hi = m2;
        else
            lo = m1;
    }
    const double mid = 0.5 * (lo + hi);
    return {mid, f(mid)};
}

}  // namespace

WernerTriple::WernerTriple(int d, double psi_ab, double psi_ac, double psi_bc)
    : d(d), psi_ab(psi_ab), psi_ac(psi_ac), psi_bc(psi_bc) {
    if (d < 2) throw std::invalid_argument("WernerTriple: d < 2");
    for (double v : {psi_ab, psi_ac, psi_bc})
        if (v < -1.0 - kBoxSlack || v > 1.0 + kBoxSlack)
            throw std::invalid_argument("WernerTriple: parameter outside [-1, 1]");
}

cplx WernerTriple::z() const {
    const cplx omega = std::polar(1.0, 2.0 * M_PI / 3.0);
    return cplx{psi_bc, 0.0} + omega * psi_ac + omega * omega * psi_ab;
}

IsoTriple::IsoTriple(int d, double phi_ab, double phi_ac, double psi_bc)
    : d(d), phi_ab(phi_ab), phi_ac(phi_ac), psi_bc(psi_bc) {
    if (d < 2) throw std::invalid_argument("IsoTriple: d < 2");
    for (double v : {phi_ab, phi_ac})
        if (v < -kBoxSlack || v > d + kBoxSlack)
            throw std::invalid_argument("IsoTriple: phi outside [0, d]");
    if (psi_bc < -1.0 - kBoxSlack || psi_bc > 1.0 + kBoxSlack)
        throw std::invalid_argument("IsoTriple: psi_bc outside [-1, 1]");
}

cplx IsoTriple::exp_i_theta() const {
    const double dd = d;
    return cplx{std::sqrt((dd - 1.0) / (2.0 * dd)), std::sqrt((dd + 1.0) / (2.0 * dd))};
}

bool RCoords::is_valid(double tol) const {
    if (r_plus < -tol || r_minus < -tol || r0 < -tol) return false;
    if (std::abs(r_plus + r_minus + r0 - 1.0) > 1e-12 + tol) return false;
    return r1 * r1 + r2 * r2 + r3 * r3 <= r0 * r0 + tol;
}

bool SCoords::is_valid(double tol) const {
    if (s_plus < -tol || s_minus < -tol || s0 < -tol) return false;
    if (std::abs(s_plus + s_minus + s0 - 1.0) > 1e-12 + tol) return false;
    return s1 * s1 + s2 * s2 + s3 * s3 <= s0 * s0 + tol;
}

// ------------------------------------------------------------- predicates

bool werner_triple_joinable(const WernerTriple& t) {
    const double bar = t.psi_bar();
    const double r = (2.0 / 3.0) * std::abs(t.z());
    if (t.d == 2) return bar >= -boundary_tol && 1.0 - bar >= r - boundary_tol;
    return 1.0 - bar >= r - boundary_tol && 1.0 + bar >= r - boundary_tol;
}

namespace {

// The hybrid cone in the six-coordinate picture: with targets
// (x, y, psi) = (phi_ab, phi_ac, psi_bc), the coordinates of a candidate
// joining state are affine in the one remaining degree of freedom
// sigma = Tr[w (V_abc^Ta + V_cba^Ta)], and the constraints collapse to
//   sigma^2 <= 4 x y            (ball constraint s1^2+s2^2 <= s0^2)
//   sigma <= (1+psi)(d+1)-(x+y) (s+ >= 0)
//   sigma >= (x+y)-(1-psi)(d-1) (s- >= 0; equality forced at d = 2)
struct IsoWindow {
    double sigma0;   // s- = 0 choice
    double quad;     // 2 sqrt(x y)
    double s_plus;   // upper bound from s+ >= 0
};

IsoWindow iso_window(const IsoTriple& t) {
    const double x = std::max(0.0, t.phi_ab);
    const double y = std::max(0.0, t.phi_ac);
    const double f = x + y;
    IsoWindow w;
    w.sigma0 = f - (1.0 - t.psi_bc) * (t.d - 1.0);
    w.quad = 2.0 * std::sqrt(x * y);
    w.s_plus = (1.0 + t.psi_bc) * (t.d + 1.0) - f;
    return w;
}

}  // namespace

bool iso_triple_joinable(const IsoTriple& t) {
    const IsoWindow w = iso_window(t);
    const double hi = std::min(w.quad, w.s_plus);
    if (t.d == 2) return std::abs(w.sigma0) <= w.quad + boundary_tol &&
                         w.sigma0 <= w.s_plus + boundary_tol;
    const double lo = std::max(-w.quad, w.sigma0);
    return lo <= hi + boundary_tol;
}

bool werner_pair_joinable(int d, double psi_ab, double psi_ac) {
    if (d < 2) throw std::invalid_argument("werner_pair_joinable: d < 2");
    if (psi_ab >= -0.5 - boundary_tol && psi_ac >= -0.5 - boundary_tol) return true;
    if (d >= 3 && psi_ab <= 0.5 + boundary_tol && psi_ac <= 0.5 + boundary_tol)
        return true;
    const double sum = psi_ab + psi_ac, dif = psi_ab - psi_ac;
    return sum * sum + dif * dif / 3.0 <= 1.0 + boundary_tol;
}

bool iso_pair_joinable(int d, double phi_ab, double phi_ac) {
    if (d < 2) throw std::invalid_argument("iso_pair_joinable: d < 2");
    const double s = phi_ab + phi_ac, v = phi_ab - phi_ac;
    if (s <= boundary_tol) return true;  // the joinable point (0, 0)
    // Member of the hull of the ellipse and the origin iff some scaled-up
    // copy u*(x, y), u >= 1, lies inside the ellipse
    // (s - d)^2 + v^2/(d^2-1) <= 1.
    const double vquad = v * v / (static_cast<double>(d) * d - 1.0);
    auto q = [&](double u) { return (s * u - d) * (s * u - d) + vquad * u * u; };
    const double ustar = s * d / (s * s + vquad);
    return q(std::max(1.0, ustar)) <= 1.0 + boundary_tol;
}

namespace {

// Signed infeasibility margin of the full d >= 3 region (or the forced
// s- = 0 slice at d = 2); convex in each coordinate of the triple.
double iso_margin(const IsoTriple& t) {
    const IsoWindow w = iso_window(t);
    if (t.d == 2)
        return std::max(std::abs(w.sigma0) - w.quad, w.sigma0 - w.s_plus);
    const double lo = std::max(-w.quad, w.sigma0);
    const double hi = std::min(w.quad, w.s_plus);
    return lo - hi;
}

}  // namespace

bool hybrid_pair_joinable(int d, double phi_ab, double psi_bc) {
    if (d < 2) throw std::invalid_argument("hybrid_pair_joinable: d < 2");
    const MinResult m = minimize_convex(
        [&](double c) { return iso_margin(IsoTriple(d, phi_ab, c, psi_bc)); }, 0.0,
        static_cast<double>(d));
    return m.value <= boundary_tol;
}

bool iso_1n_joinable(int d, const std::vector<double>& phis) {
    if (d < 2) throw std::invalid_argument("iso_1n_joinable: d < 2");
    if (phis.empty()) throw std::invalid_argument("iso_1n_joinable: empty list");
    double sum = 0.0, root_sum = 0.0;
    for (double phi : phis) {
        if (phi < -kBoxSlack || phi > d + kBoxSlack)
            throw std::invalid_argument("iso_1n_joinable: phi outside [0, d]");
        const double p = std::max(0.0, phi);
        sum += p;
        root_sum += std::sqrt(p);
    }
    const double n = static_cast<double>(phis.size());
    return sum <= (d - 1.0) + root_sum * root_sum / (n + d - 1.0) + boundary_tol;
}

// ------------------------------------------------------------ coordinates

RCoords coords_from_triple(const WernerTriple& t, double r_minus) {
    if (r_minus < 0.0)
        throw std::invalid_argument("coords_from_triple: r_minus < 0");
    if (t.d == 2 && r_minus != 0.0)
        throw std::invalid_argument("coords_from_triple: r_minus must vanish at d = 2");
    const cplx z = t.z();
    RCoords rc;
    rc.r_minus = r_minus;
    rc.r0 = 1.0 - 2.0 * r_minus - t.psi_bar();
    rc.r_plus = t.psi_bar() + r_minus;
    rc.r1 = (2.0 / 3.0) * z.real();
    rc.r2 = -(2.0 / 3.0) * z.imag();
    rc.r3 = 0.0;
    return rc;
}

SCoords coords_from_triple(const IsoTriple& t) {
    const IsoWindow w = iso_window(t);
    const double x = std::max(0.0, t.phi_ab), y = std::max(0.0, t.phi_ac);
    const double f = x + y;
    const double dd = t.d;
    // s- = 0 wherever allowed, pushed into the window otherwise.
    const double sigma = (t.d == 2)
                             ? w.sigma0
                             : clamp(w.sigma0, -w.quad, std::min(w.quad, w.s_plus));
    SCoords sc;
    sc.s2 = (x - y) / std::sqrt(dd * dd - 1.0);
    sc.s0 = (dd * f - sigma) / (dd * dd - 1.0);
    sc.s1 = (dd * sigma - f) / (dd * dd - 1.0);
    sc.s_minus = 0.5 * (1.0 - t.psi_bc + (sigma - f) / (dd - 1.0));
    sc.s_plus = 0.5 * (1.0 + t.psi_bc - (f + sigma) / (dd + 1.0));
    sc.s3 = 0.0;
    return sc;
}

// --------------------------------------------------------------- assembly

DensityMatrix assemble_w_werner(const RCoords& rc, int d) {
    if (!rc.is_valid())
        throw std::invalid_argument("assemble_w_werner: coordinates violate constraints");
    const SymmetrizerBasisWerner b = build_werner_basis(d);
    const double dd = d;
    ComplexMatrix w = cplx{6.0 * rc.r_plus / (dd * (dd + 1.0) * (dd + 2.0)), 0.0} *
                      b[kPlus];
    if (d >= 3)
        w += cplx{6.0 * rc.r_minus / (dd * (dd - 1.0) * (dd - 2.0)), 0.0} * b[kMinus];
    else if (std::abs(rc.r_minus) > boundary_tol)
        throw std::invalid_argument("assemble_w_werner: r_minus nonzero at d = 2");
    const double c = 3.0 / (2.0 * dd * (dd * dd - 1.0));
    w += cplx{c * rc.r0, 0.0} * b[k0];
    w += cplx{c * rc.r1, 0.0} * b[k1];
    w += cplx{c * rc.r2, 0.0} * b[k2];
    w += cplx{c * rc.r3, 0.0} * b[k3];
    return DensityMatrix(TensorSpace::qudits(d, 3), std::move(w));
}

DensityMatrix assemble_w_iso(const SCoords& sc, int d) {
    if (!sc.is_valid())
        throw std::invalid_argument("assemble_w_iso: coordinates violate constraints");
    const SymmetrizerBasisIso b = build_iso_basis(d);
    const double dd = d;
    ComplexMatrix w = cplx{2.0 * sc.s_plus / (dd * (dd + 2.0) * (dd - 1.0)), 0.0} *
                      b[kPlus];
    if (d >= 3)
        w += cplx{2.0 * sc.s_minus / (dd * (dd - 2.0) * (dd + 1.0)), 0.0} * b[kMinus];
    else if (std::abs(sc.s_minus) > boundary_tol)
        throw std::invalid_argument("assemble_w_iso: s_minus nonzero at d = 2");
    const double c = 1.0 / (2.0 * dd);
    w += cplx{c * sc.s0, 0.0} * b[k0];
    w += cplx{c * sc.s1, 0.0} * b[k1];
    w += cplx{c * sc.s2, 0.0} * b[k2];
    w += cplx{c * sc.s3, 0.0} * b[k3];
    return DensityMatrix(TensorSpace::qudits(d, 3), std::move(w));
}

// ------------------------------------------------------------ construction

std::optional<DensityMatrix> construct_joining_state(const WernerTriple& t) {
    if (!werner_triple_joinable(t)) return std::nullopt;
    const double r_minus = (t.d >= 3) ? std::max(0.0, -t.psi_bar()) : 0.0;
    RCoords rc = coords_from_triple(t, r_minus);
    // Joinable by the predicate; shave boundary roundoff so assembly accepts.
    const double ball = std::sqrt(rc.r1 * rc.r1 + rc.r2 * rc.r2);
    if (ball > 0.0 && ball * ball > rc.r0 * rc.r0) {
        const double scale = std::max(0.0, rc.r0) / ball;
        rc.r1 *= scale;
        rc.r2 *= scale;
    }
    return assemble_w_werner(rc, t.d);
}

std::optional<DensityMatrix> construct_joining_state(const IsoTriple& t) {
    if (!iso_triple_joinable(t)) return std::nullopt;
    SCoords sc = coords_from_triple(t);
    const double ball = std::sqrt(sc.s1 * sc.s1 + sc.s2 * sc.s2);
    if (ball > 0.0 && ball * ball > sc.s0 * sc.s0) {
        const double scale = std::max(0.0, sc.s0) / ball;
        sc.s1 *= scale;
        sc.s2 *= scale;
    }
    if (sc.s_minus < 0.0 && sc.s_minus > -boundary_tol) sc.s_minus = 0.0;
    if (sc.s_plus < 0.0 && sc.s_plus > -boundary_tol) sc.s_plus = 0.0;
    return assemble_w_iso(sc, t.d);
}

// ---------------------------------------------------- completing a third leg

std::optional<double> completing_psi_bc(int d, double psi_ab, double psi_ac) {
    auto margin = [&](double psi) {
        const WernerTriple t(d, psi_ab, psi_ac, psi);
        const double bar = t.psi_bar();
        const double r = (2.0 / 3.0) * std::abs(t.z());
        double m = r - (1.0 - bar);
        if (d == 2)
            m = std::max(m, -bar);
        else
            m = std::max(m, r - (1.0 + bar));
        return m;
    };
    const MinResult m = minimize_convex(margin, -1.0, 1.0);
    if (m.value > boundary_tol) return std::nullopt;
    return m.arg;
}

std::optional<double> completing_phi_ac(int d, double phi_ab, double psi_bc) {
    const MinResult m = minimize_convex(
        [&](double c) { return iso_margin(IsoTriple(d, phi_ab, c, psi_bc)); }, 0.0,
        static_cast<double>(d));
    if (m.value > boundary_tol) return std::nullopt;
    return m.arg;
}

std::optional<double> completing_psi_bc_iso(int d, double phi_ab, double phi_ac) {
    const MinResult m = minimize_convex(
        [&](double psi) { return iso_margin(IsoTriple(d, phi_ab, phi_ac, psi)); },
        -1.0, 1.0);
    if (m.value > boundary_tol) return std::nullopt;
    return m.arg;
}

bool weak_ckw_holds(double c_ab, double c_ac) {
    return c_ab * c_ab + c_ac * c_ac <= 1.0 + boundary_tol;
}

}  // namespace qmarg::joinability
