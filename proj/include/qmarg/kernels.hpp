#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Data-parallel inner loops used throughout the library. Every kernel comes
// in a _serial reference version and an OpenMP _parallel version; the
// unsuffixed wrappers dispatch on problem size and the configured thread
// count. The serial versions are the ground truth the parallel ones are
// tested against (see tests/test_kernels.cpp and bench/).

namespace qmarg::kernels {

using cplx = std::complex<double>;

// Worker cap: QMARGINAL_THREADS if set (>=1), otherwise the OpenMP default.
int thread_count();

// Smallest element count for which parallel dispatch pays off.
inline constexpr std::size_t parallel_threshold = 1u << 12;

// y = M x for a row-major n x n (or rows x cols) matrix.
void matvec_serial(const cplx* m, const cplx* x, cplx* y,
                   std::size_t rows, std::size_t cols);
void matvec_parallel(const cplx* m, const cplx* x, cplx* y,
                     std::size_t rows, std::size_t cols);
void matvec(const cplx* m, const cplx* x, cplx* y,
            std::size_t rows, std::size_t cols);

// C = A B, row-major dense.
void matmul_serial(const cplx* a, const cplx* b, cplx* c,
                   std::size_t n, std::size_t k, std::size_t m);
void matmul_parallel(const cplx* a, const cplx* b, cplx* c,
                     std::size_t n, std::size_t k, std::size_t m);
void matmul(const cplx* a, const cplx* b, cplx* c,
            std::size_t n, std::size_t k, std::size_t m);

// out = a (x) b (Kronecker product), a: ra x ca, b: rb x cb.
void kron_serial(const cplx* a, std::size_t ra, std::size_t ca,
                 const cplx* b, std::size_t rb, std::size_t cb, cplx* out);
void kron_parallel(const cplx* a, std::size_t ra, std::size_t ca,
                   const cplx* b, std::size_t rb, std::size_t cb, cplx* out);
void kron(const cplx* a, std::size_t ra, std::size_t ca,
          const cplx* b, std::size_t rb, std::size_t cb, cplx* out);

// Applies the subsystem-relabeling unitary of a permutation to a state
// vector on N equal-dimension-d factors: out digit perm[k] = in digit k.
// `perm` has length nsub; dim = d^nsub.
void apply_subsystem_perm_serial(const cplx* in, cplx* out, int d,
                                 const int* perm, int nsub);
void apply_subsystem_perm_parallel(const cplx* in, cplx* out, int d,
                                   const int* perm, int nsub);
void apply_subsystem_perm(const cplx* in, cplx* out, int d,
                          const int* perm, int nsub);

// out[x] += coeff * in[x with digits i and j swapped], digits base d,
// nsub digits total. Used by the matrix-free pair-swap Hamiltonian.
void add_swapped_serial(const cplx* in, cplx* out, cplx coeff, int d,
                        int nsub, int i, int j);
void add_swapped_parallel(const cplx* in, cplx* out, cplx coeff, int d,
                          int nsub, int i, int j);
void add_swapped(const cplx* in, cplx* out, cplx coeff, int d,
                 int nsub, int i, int j);

}  // namespace qmarg::kernels
