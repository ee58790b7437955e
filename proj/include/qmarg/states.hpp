#pragma once

#include <random>
#include <vector>

#include "qmarg/complex_matrix.hpp"
#include "qmarg/tensor_space.hpp"

namespace qmarg {

// Bipartite qudit Werner state parameters: psi_minus is the expectation of
// the swap operator, in [-1, 1]. The agreement view alpha_w = (psi_minus+1)/(d+1)
// is the probability that a collective projective measurement returns equal
// outcomes on both sides.
struct WernerParam {
    int d;
    double psi_minus;

    WernerParam(int d, double psi_minus);
    double alpha() const { return (psi_minus + 1.0) / (d + 1.0); }
};

// Isotropic state parameters: phi_plus is the expectation of the partially
// transposed swap, in [0, d]; phi_plus / d is the singlet fraction.
struct IsotropicParam {
    int d;
    double phi_plus;

    IsotropicParam(int d, double phi_plus);
    double alpha() const { return (phi_plus + 1.0) / (d + 1.0); }
    double singlet_fraction() const { return phi_plus / d; }
};

WernerParam werner_from_alpha(int d, double alpha);
IsotropicParam iso_from_alpha(int d, double alpha);

// The swap operator V on (C^d)^(x 2) and its partial transpose, which is
// d times the maximally entangled projector.
ComplexMatrix swap_operator(int d);
ComplexMatrix max_entangled_projector(int d);
std::vector<cplx> max_entangled_vector(int d);

DensityMatrix werner_state(const WernerParam& p);
DensityMatrix isotropic_state(const IsotropicParam& p);

// Concurrence; clamped to zero on the separable side (psi_minus > 0,
// phi_plus <= 1).
double concurrence_werner(const WernerParam& p);
double concurrence_iso(const IsotropicParam& p);

// Normalized d-partite fully antisymmetric state on (C^d)^(x d), built as
// the signed sum over all d! subsystem orders. Capped at d <= 6.
std::vector<cplx> antisymmetric_state(int d);

// Haar-ish unitary from Gram-Schmidt on a complex Gaussian matrix; the rng
// is caller-seeded so sweeps stay deterministic.
ComplexMatrix random_unitary(int d, std::mt19937& rng);

}  // namespace qmarg
