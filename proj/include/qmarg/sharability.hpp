#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qmarg/rational.hpp"
#include "qmarg/tensor_space.hpp"
#include "qmarg/young.hpp"

namespace qmarg::sharability {

// Matrix-free pair-swap Hamiltonian on m left and n right qudits,
// H = (1/mn) sum_{i in L, j in R} (-V_ij). Hermitian with spectrum in
// [-1, 1]; its largest eigenvalue is the concurrence of the most entangled
// m-n sharable Werner state.
struct SharingHamiltonian {
    int d, m, n;

    SharingHamiltonian(int d, int m, int n);
    std::size_t dim() const;
    void apply(const std::vector<cplx>& in, std::vector<cplx>& out) const;
    ComplexMatrix dense() const;  // dims within the dense cap only
};

// Closed-form 1-n criteria.
bool sharable_1n_werner(int d, int n, double psi_minus);
bool sharable_1n_iso(int d, int n, double phi_plus);

// Exact m-n threshold: the maximum of the Casimir eigenvalue combination
// (A_lr - A_l - A_r - B_lr + B_l + B_r) / (2mn) over all left diagrams of m
// boxes, right diagrams of n boxes, and glued shapes in their
// Littlewood-Richardson support at height <= d.
Rational max_h_eigenvalue_young(int d, int m, int n);

// Independent numeric oracle: shifted power iteration on the matrix-free
// Hamiltonian. Requires d^(m+n) within the matrix-free cap.
double max_h_eigenvalue_bruteforce(int d, int m, int n, double tol = 1e-9,
                                   int max_iter = 200000);

// m-n sharability test for a Werner parameter against the exact threshold
// (capped at the intrinsic floor psi_minus >= -1).
bool sharable_mn_werner(int d, int m, int n, double psi_minus);

// Normalized projector onto the top eigenspace of H_{m,n}; every
// left-right pair reduction is Werner at the threshold parameter.
DensityMatrix sharing_state(int d, int m, int n);
DensityMatrix sharing_state_1n(int d, int n);

// Sharing state for a separable mixture: sum_i lambda_i rho_L^(x m) (x)
// rho_R^(x n).
struct SeparableComponent {
    double weight;
    ComplexMatrix left;   // state on C^dL
    ComplexMatrix right;  // state on C^dR
};
DensityMatrix share_separable(const std::vector<SeparableComponent>& components,
                              int m, int n);

// Sharability ceilings for an arbitrary bipartite state from its twirled
// Werner and isotropic parameters Tr[V rho], Tr[V^Ta rho]; nullopt means
// unconstrained. With num_random_unitaries > 0, also scans I (x) U
// conjugations (best found, not optimal) and keeps the tightest bounds.
struct TwirlBounds {
    std::optional<long> werner_n;
    std::optional<long> iso_n;
    double psi_minus;  // at the reporting choice of local unitary
    double phi_plus;
};
TwirlBounds twirl_sharability_bounds(const DensityMatrix& rho,
                                     int num_random_unitaries = 0,
                                     unsigned seed = 2024);

// Published reference thresholds for small tables (d <= 4, m, n <= 5);
// nullopt where no reference value exists.
std::optional<Rational> reference_threshold(int d, int m, int n);

}  // namespace qmarg::sharability
