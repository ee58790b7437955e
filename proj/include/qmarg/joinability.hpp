#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "qmarg/perm_rep.hpp"
#include "qmarg/tensor_space.hpp"

namespace qmarg::joinability {

using qmarg::cplx;

// Boundary points count as joinable (the feasible sets are closed); every
// inequality below carries this much slack.
inline constexpr double boundary_tol = 1e-9;

// Targets for a three-party Werner joining problem: pair expectations of
// the swap operator on AB, AC, BC.
struct WernerTriple {
    int d;
    double psi_ab, psi_ac, psi_bc;

    WernerTriple(int d, double psi_ab, double psi_ac, double psi_bc);

    double psi_bar() const { return (psi_ab + psi_ac + psi_bc) / 3.0; }
    // z = psi_bc + w psi_ac + w^2 psi_ab with w = exp(2 pi i / 3).
    cplx z() const;
};

// Targets for the hybrid joining problem: isotropic AB and AC, Werner BC.
struct IsoTriple {
    int d;
    double phi_ab, phi_ac;
    double psi_bc;

    IsoTriple(int d, double phi_ab, double phi_ac, double psi_bc);

    // Cone phase: e^{+-i theta} = +-i sqrt((d+1)/(2d)) + sqrt((d-1)/(2d)).
    cplx exp_i_theta() const;
};

// Coordinates of a candidate joining state in the six-operator bases.
// Valid states have the projector weights non-negative, summing to one,
// and the Pauli-like part inside the ball of radius r0 (resp. s0).
struct RCoords {
    double r_plus = 0, r_minus = 0, r0 = 0, r1 = 0, r2 = 0, r3 = 0;
    bool is_valid(double tol = boundary_tol) const;
};

struct SCoords {
    double s_plus = 0, s_minus = 0, s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    bool is_valid(double tol = boundary_tol) const;
};

// Exact joinability predicates.
//
// Werner: inside the bi-cone 1 +- psi_bar >= (2/3)|z| (both signs) for
// d >= 3; for d = 2 only the minus sign together with psi_bar >= 0.
bool werner_triple_joinable(const WernerTriple& t);

// Isotropic/hybrid: the cone
//   phi_ab + phi_ac - psi_bc <= d,
//   1 + phi_ab + phi_ac - psi_bc >=
//       | d(psi_bc - 1) + sqrt(2d/(d-1)) (e^{i theta} phi_ab + e^{-i theta} phi_ac) |,
// extended for d >= 3 by the convex hull with the point (0, 0, -1).
bool iso_triple_joinable(const IsoTriple& t);

// Pair projections.
bool werner_pair_joinable(int d, double psi_ab, double psi_ac);
bool iso_pair_joinable(int d, double phi_ab, double phi_ac);
bool hybrid_pair_joinable(int d, double phi_ab, double psi_bc);

// 1-n isotropic joining:
// sum phi_j <= (d-1) + (sum sqrt(phi_j))^2 / (n+d-1).
bool iso_1n_joinable(int d, const std::vector<double>& phis);

// Coordinates of the joining state the constructive proofs pick: r3 = 0,
// r1 + i r2 from the complex combination z, r0 = 1 - 2 r_minus - psi_bar.
RCoords coords_from_triple(const WernerTriple& t, double r_minus);
SCoords coords_from_triple(const IsoTriple& t);

// w from coordinates; throws std::invalid_argument when the coordinates
// violate the non-negativity constraints.
DensityMatrix assemble_w_werner(const RCoords& rc, int d);
DensityMatrix assemble_w_iso(const SCoords& sc, int d);

// Joining state when the predicate holds, nullopt otherwise.
std::optional<DensityMatrix> construct_joining_state(const WernerTriple& t);
std::optional<DensityMatrix> construct_joining_state(const IsoTriple& t);

// Third coordinates completing a pair to a joinable triple (used to build
// pair witnesses); nullopt when the pair is not joinable.
std::optional<double> completing_psi_bc(int d, double psi_ab, double psi_ac);
std::optional<double> completing_phi_ac(int d, double phi_ab, double psi_bc);
std::optional<double> completing_psi_bc_iso(int d, double phi_ab, double phi_ac);

// Necessary condition from entanglement monogamy alone: the squared
// concurrences of two pairs sharing a party sum to at most one.
bool weak_ckw_holds(double c_ab, double c_ac);

}  // namespace qmarg::joinability
