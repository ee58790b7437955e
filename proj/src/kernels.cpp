#include "qmarg/kernels.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace qmarg::kernels {

int thread_count() {
    static const int cached = [] {
        if (const char* env = std::getenv("QMARGINAL_THREADS")) {
            const int n = std::atoi(env);
            if (n >= 1) return n;
        }
        return omp_get_max_threads();
    }();
    return cached;
}

static bool go_parallel(std::size_t work) {
    return thread_count() > 1 && work >= parallel_threshold;
}

// ---------------------------------------------------------------- matvec

void matvec_serial(const cplx* m, const cplx* x, cplx* y,
                   std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        cplx acc{0.0, 0.0};
        const cplx* row = m + r * cols;
        for (std::size_t c = 0; c < cols; ++c) acc += row[c] * x[c];
        y[r] = acc;
    }
}

void matvec_parallel(const cplx* m, const cplx* x, cplx* y,
                     std::size_t rows, std::size_t cols) {
    const int nt = thread_count();
#pragma omp parallel for num_threads(nt) schedule(static)
    for (std::size_t r = 0; r < rows; ++r) {
        cplx acc{0.0, 0.0};
        const cplx* row = m + r * cols;
        for (std::size_t c = 0; c < cols; ++c) acc += row[c] * x[c];
        y[r] = acc;
    }
}

void matvec(const cplx* m, const cplx* x, cplx* y,
            std::size_t rows, std::size_t cols) {
    if (go_parallel(rows * cols))
        matvec_parallel(m, x, y, rows, cols);
    else
        matvec_serial(m, x, y, rows, cols);
}

// ---------------------------------------------------------------- matmul

void matmul_serial(const cplx* a, const cplx* b, cplx* c,
                   std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n * m; ++i) c[i] = cplx{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const cplx ail = a[i * k + l];
            if (ail == cplx{0.0, 0.0}) continue;
            const cplx* brow = b + l * m;
            cplx* crow = c + i * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += ail * brow[j];
        }
    }
}

void matmul_parallel(const cplx* a, const cplx* b, cplx* c,
                     std::size_t n, std::size_t k, std::size_t m) {
    const int nt = thread_count();
#pragma omp parallel for num_threads(nt) schedule(static)
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = c + i * m;
        for (std::size_t j = 0; j < m; ++j) crow[j] = cplx{0.0, 0.0};
        for (std::size_t l = 0; l < k; ++l) {
            const cplx ail = a[i * k + l];
            if (ail == cplx{0.0, 0.0}) continue;
            const cplx* brow = b + l * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += ail * brow[j];
        }
    }
}

void matmul(const cplx* a, const cplx* b, cplx* c,
            std::size_t n, std::size_t k, std::size_t m) {
    if (go_parallel(n * k * m))
        matmul_parallel(a, b, c, n, k, m);
    else
        matmul_serial(a, b, c, n, k, m);
}

// ------------------------------------------------------------------ kron

void kron_serial(const cplx* a, std::size_t ra, std::size_t ca,
                 const cplx* b, std::size_t rb, std::size_t cb, cplx* out) {
    const std::size_t cols = ca * cb;
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < rb; ++j) {
            cplx* dst = out + (i * rb + j) * cols;
            const cplx* brow = b + j * cb;
            for (std::size_t k = 0; k < ca; ++k) {
                const cplx aik = a[i * ca + k];
                for (std::size_t l = 0; l < cb; ++l)
                    dst[k * cb + l] = aik * brow[l];
            }
        }
}

void kron_parallel(const cplx* a, std::size_t ra, std::size_t ca,
                   const cplx* b, std::size_t rb, std::size_t cb, cplx* out) {
    const std::size_t cols = ca * cb;
    const int nt = thread_count();
#pragma omp parallel for num_threads(nt) schedule(static) collapse(2)
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < rb; ++j) {
            cplx* dst = out + (i * rb + j) * cols;
            const cplx* brow = b + j * cb;
            for (std::size_t k = 0; k < ca; ++k) {
                const cplx aik = a[i * ca + k];
                for (std::size_t l = 0; l < cb; ++l)
                    dst[k * cb + l] = aik * brow[l];
            }
        }
}

void kron(const cplx* a, std::size_t ra, std::size_t ca,
          const cplx* b, std::size_t rb, std::size_t cb, cplx* out) {
    if (go_parallel(ra * ca * rb * cb))
        kron_parallel(a, ra, ca, b, rb, cb, out);
    else
        kron_serial(a, ra, ca, b, rb, cb, out);
}

// ------------------------------------------------- subsystem permutation

namespace {

// Strides s[k] = d^(nsub-1-k); digit k of an index x is (x / s[k]) % d.
void fill_strides(int d, int nsub, std::size_t* s) {
    s[nsub - 1] = 1;
    for (int k = nsub - 2; k >= 0; --k)
        s[k] = s[k + 1] * static_cast<std::size_t>(d);
}

inline std::size_t perm_source_index(std::size_t x, int d, const int* perm,
                                     int nsub, const std::size_t* s) {
    // out digit perm[k] = in digit k  =>  in digit k = out digit perm[k].
    std::size_t y = 0;
    for (int k = 0; k < nsub; ++k) {
        const std::size_t digit = (x / s[perm[k]]) % static_cast<std::size_t>(d);
        y += digit * s[k];
    }
    return y;
}

}  // namespace

void apply_subsystem_perm_serial(const cplx* in, cplx* out, int d,
                                 const int* perm, int nsub) {
    std::size_t s[32];
    fill_strides(d, nsub, s);
    std::size_t dim = 1;
    for (int k = 0; k < nsub; ++k) dim *= static_cast<std::size_t>(d);
    for (std::size_t x = 0; x < dim; ++x)
        out[x] = in[perm_source_index(x, d, perm, nsub, s)];
}

void apply_subsystem_perm_parallel(const cplx* in, cplx* out, int d,
                                   const int* perm, int nsub) {
    std::size_t s[32];
    fill_strides(d, nsub, s);
    std::size_t dim = 1;
    for (int k = 0; k < nsub; ++k) dim *= static_cast<std::size_t>(d);
    const int nt = thread_count();
#pragma omp parallel for num_threads(nt) schedule(static)
    for (std::size_t x = 0; x < dim; ++x)
        out[x] = in[perm_source_index(x, d, perm, nsub, s)];
}

void apply_subsystem_perm(const cplx* in, cplx* out, int d,
                          const int* perm, int nsub) {
    std::size_t dim = 1;
    for (int k = 0; k < nsub; ++k) dim *= static_cast<std::size_t>(d);
    if (go_parallel(dim))
        apply_subsystem_perm_parallel(in, out, d, perm, nsub);
    else
        apply_subsystem_perm_serial(in, out, d, perm, nsub);
}

// ------------------------------------------------------------ add_swapped

void add_swapped_serial(const cplx* in, cplx* out, cplx coeff, int d,
                        int nsub, int i, int j) {
    std::size_t s[32];
    fill_strides(d, nsub, s);
    std::size_t dim = 1;
    for (int k = 0; k < nsub; ++k) dim *= static_cast<std::size_t>(d);
    const std::size_t si = s[i], sj = s[j];
    const std::size_t dd = static_cast<std::size_t>(d);
    for (std::size_t x = 0; x < dim; ++x) {
        const std::size_t di = (x / si) % dd;
        const std::size_t dj = (x / sj) % dd;
        const std::size_t y = x + (dj - di) * si + (di - dj) * sj;
        out[x] += coeff * in[y];
    }
}

void add_swapped_parallel(const cplx* in, cplx* out, cplx coeff, int d,
                          int nsub, int i, int j) {
    std::size_t s[32];
    fill_strides(d, nsub, s);
    std::size_t dim = 1;
    for (int k = 0; k < nsub; ++k) dim *= static_cast<std::size_t>(d);
    const std::size_t si = s[i], sj = s[j];
    const std::size_t dd = static_cast<std::size_t>(d);
    const int nt = thread_count();
#pragma omp parallel for num_threads(nt) schedule(static)
    for (std::size_t x = 0; x < dim; ++x) {
        const std::size_t di = (x / si) % dd;
        const std::size_t dj = (x / sj) % dd;
        const std::size_t y = x + (dj - di) * si + (di - dj) * sj;
        out[x] += coeff * in[y];
    }
}

void add_swapped(const cplx* in, cplx* out, cplx coeff, int d,
                 int nsub, int i, int j) {
    std::size_t dim = 1;
    for (int k = 0; k < nsub; ++k) dim *= static_cast<std::size_t>(d);
    if (go_parallel(dim))
        add_swapped_parallel(in, out, coeff, d, nsub, i, j);
    else
        add_swapped_serial(in, out, coeff, d, nsub, i, j);
}

}  // namespace qmarg::kernels
