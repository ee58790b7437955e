#pragma once

#include <optional>
#include <vector>

#include "qmarg/complex_matrix.hpp"
#include "qmarg/tensor_space.hpp"

namespace qmarg::feasibility {

// Marginal constraint: the reduction onto `subsystems` (strictly
// increasing indices) must equal `target`.
struct Constraint {
    std::vector<int> subsystems;
    ComplexMatrix target;
};

// Small marginal problem: find a state on `space` reducing to every
// constraint target. Construction checks that targets are trace-one
// Hermitian and mutually consistent on overlapping subsystems (1e-10).
class FeasibilityProblem {
public:
    FeasibilityProblem(TensorSpace space, std::vector<Constraint> constraints);

    const TensorSpace& space() const { return space_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }

private:
    TensorSpace space_;
    std::vector<Constraint> constraints_;
};

enum class Verdict { Feasible, Infeasible, Undecided };

struct FeasibilityReport {
    Verdict verdict;
    double residual;
    int iterations;
    std::optional<ComplexMatrix> witness;  // set on Feasible only
};

// Trace-one Hermitian extension of two operators with a common first
// subsystem: the unique extension whose coefficients on every basis
// operator not pinned by the reductions vanish. Always exists when the
// overlapping reductions agree; positivity is not promised.
ComplexMatrix hermitian_join(const ComplexMatrix& q_ab, const ComplexMatrix& q_ac,
                             int d_a, int d_b, int d_c);

struct SolverOptions {
    double tol = 1e-9;
    int max_iter = 20000;
    // A residual that moves by less than this relative amount across a
    // 200-iteration window counts as a plateau.
    double plateau_rel = 1e-10;
    int plateau_window = 200;
};

// Dykstra-corrected alternating projections between the affine set of all
// trace-one Hermitian operators with the prescribed reductions and the PSD
// cone. Residual below tol -> Feasible with the PSD iterate as witness;
// plateau above 100*tol -> Infeasible (heuristic: no certificate);
// anything else -> Undecided.
FeasibilityReport alternating_projection(const FeasibilityProblem& problem,
                                         const SolverOptions& opts = {});

// Largest violation of the problem constraints by a candidate state plus
// its negative-eigenvalue deficit; used to re-verify witnesses.
double verify_witness(const FeasibilityProblem& problem, const ComplexMatrix& w);

}  // namespace qmarg::feasibility
