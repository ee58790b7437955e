#pragma once

#include <array>
#include <vector>

#include "qmarg/complex_matrix.hpp"
#include "qmarg/permutation.hpp"
#include "qmarg/tensor_space.hpp"

namespace qmarg {

// Caps on d^N for building permutation representations.
inline constexpr std::size_t dense_cap = 4096;
inline constexpr std::size_t matfree_cap = std::size_t{1} << 20;

// V_p on (C^d)^(x N), defined by moving the factor in slot k to slot p(k).
// Satisfies V_p V_q = V_{p.compose(q)}.
ComplexMatrix perm_operator(const Permutation& p, int d);

// Matrix-free action of V_p on a state vector of length d^N.
void apply_perm_operator(const Permutation& p, int d,
                         const std::vector<cplx>& in, std::vector<cplx>& out);

// Index names for the six-operator bases below.
enum BasisIndex { kPlus = 0, kMinus = 1, k0 = 2, k1 = 3, k2 = 4, k3 = 5 };

// Young-symmetrizer basis on (C^d)^(x 3) adapted to collectively
// unitary-invariant (Werner-reduction) operators: three orthogonal
// projectors R+, R-, R0 summing to identity plus a Pauli-like triple
// R1, R2, R3 on the support of R0. R- vanishes at d = 2.
struct SymmetrizerBasisWerner {
    int d;
    std::array<ComplexMatrix, 6> ops;
    const ComplexMatrix& operator[](BasisIndex k) const {
        return ops[static_cast<std::size_t>(k)];
    }
};

// Partial-transpose counterpart adapted to U* x U x U invariance
// (isotropic reductions on the first two pairs). S- vanishes at d = 2.
struct SymmetrizerBasisIso {
    int d;
    std::array<ComplexMatrix, 6> ops;
    const ComplexMatrix& operator[](BasisIndex k) const {
        return ops[static_cast<std::size_t>(k)];
    }
};

SymmetrizerBasisWerner build_werner_basis(int d);
SymmetrizerBasisIso build_iso_basis(int d);

// Orthogonal projection onto span{V_pi} (the commutant of collective
// unitaries), done through the Gram matrix Tr[V_pi^dag V_sigma] =
// d^{#cycles(pi^-1 sigma)} with an eigenvalue pseudo-inverse. Equals the
// collective-unitary group average without any Haar integration, and
// handles the d = 2, N = 3 linear dependence of the V_pi.
DensityMatrix twirl_werner(const DensityMatrix& rho);

// Conjugated variant: partial transpose on subsystem 0, Werner twirl,
// partial transpose back.
DensityMatrix twirl_iso(const DensityMatrix& rho);

}  // namespace qmarg
