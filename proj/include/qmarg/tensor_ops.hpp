#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "qmarg/complex_matrix.hpp"
#include "qmarg/tensor_space.hpp"

namespace qmarg {

struct NonConvergence : std::runtime_error {
    NonConvergence(const std::string& what, int iterations)
        : std::runtime_error(what), iterations(iterations) {}
    int iterations;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace over the subsystems in `traced`; the result lives on the remaining
// subsystems in their original order.
ComplexMatrix partial_trace(const ComplexMatrix& m, const TensorSpace& space,
                            const std::vector<int>& traced);

// Transpose applied to one tensor factor only. Involution.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const TensorSpace& space,
                                int subsystem);

// Places an operator acting on the ordered subsystem subset `support` into
// the full space, tensoring identity on the rest.
ComplexMatrix embed_op(const ComplexMatrix& op, const TensorSpace& space,
                       const std::vector<int>& support);

struct EigResult {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

// Cyclic Jacobi rotations; off-diagonal norm threshold 1e-13 relative to the
// Frobenius scale of the input.
EigResult hermitian_eig(const ComplexMatrix& m, double tol = 1e-10);

// Largest eigenvalue of a Hermitian operator given only its action on
// vectors. Power iteration on (H + sigma*I) with sigma = 2, which keeps the
// shifted spectrum positive for any operator with norm <= 1 (all uses here).
// Stops once the Rayleigh quotient moves by less than 1e-12 over 10
// consecutive steps; throws NonConvergence after max_iter.
using ApplyFn = std::function<void(const std::vector<cplx>&, std::vector<cplx>&)>;
double max_eig_matfree(const ApplyFn& apply, std::size_t dim, double tol,
                       int max_iter, unsigned seed = 12345);

}  // namespace qmarg
