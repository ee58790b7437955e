#include "qmarg/tensor_ops.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qmarg/kernels.hpp"

namespace qmarg {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    kernels::kron(a.data(), a.rows(), a.cols(), b.data(), b.rows(), b.cols(),
                  out.data());
    return out;
}

namespace {

// Composite-index offsets for every value of a sub-collection of digits.
std::vector<std::size_t> subset_offsets(const TensorSpace& space,
                                        const std::vector<int>& subs) {
    std::size_t count = 1;
    for (int k : subs) count *= static_cast<std::size_t>(space.dim(k));
    std::vector<std::size_t> off(count, 0);
    std::size_t repeat = 1;
    for (int pos = static_cast<int>(subs.size()) - 1; pos >= 0; --pos) {
        const int k = subs[static_cast<std::size_t>(pos)];
        const std::size_t d = static_cast<std::size_t>(space.dim(k));
        const std::size_t stride = space.strides()[static_cast<std::size_t>(k)];
        for (std::size_t x = 0; x < count; ++x)
            off[x] += ((x / repeat) % d) * stride;
        repeat *= d;
    }
    return off;
}

std::vector<int> complement(const TensorSpace& space, const std::vector<int>& subs) {
    std::vector<bool> in(static_cast<std::size_t>(space.num_subsystems()), false);
    for (int k : subs) {
        if (k < 0 || k >= space.num_subsystems())
            throw std::out_of_range("subsystem index out of range");
        if (in[static_cast<std::size_t>(k)])
            throw std::invalid_argument("duplicate subsystem index");
        in[static_cast<std::size_t>(k)] = true;
    }
    std::vector<int> rest;
    for (int k = 0; k < space.num_subsystems(); ++k)
        if (!in[static_cast<std::size_t>(k)]) rest.push_back(k);
    return rest;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, const TensorSpace& space,
                            const std::vector<int>& traced) {
    if (!m.is_square() || m.rows() != space.total_dim())
        throw std::invalid_argument("partial_trace: matrix does not match space");
    std::vector<int> tr = traced;
    std::sort(tr.begin(), tr.end());
    const std::vector<int> kept = complement(space, tr);
    if (kept.empty())
        throw std::invalid_argument("partial_trace: cannot trace all subsystems");

    const auto kept_off = subset_offsets(space, kept);
    const auto tr_off = subset_offsets(space, tr);
    const std::size_t dk = kept_off.size();
    const std::size_t full = space.total_dim();

    ComplexMatrix out(dk, dk);
    const cplx* src = m.data();
    cplx* dst = out.data();
    const int nt = kernels::thread_count();
#pragma omp parallel for num_threads(nt) schedule(static) if (dk * dk * tr_off.size() >= kernels::parallel_threshold && nt > 1)
    for (std::size_t r = 0; r < dk; ++r) {
        for (std::size_t c = 0; c < dk; ++c) {
            cplx acc{0.0, 0.0};
            for (std::size_t t : tr_off)
                acc += src[(kept_off[r] + t) * full + kept_off[c] + t];
            dst[r * dk + c] = acc;
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const TensorSpace& space,
                                int subsystem) {
    if (!m.is_square() || m.rows() != space.total_dim())
        throw std::invalid_argument("partial_transpose: matrix does not match space");
    if (subsystem < 0 || subsystem >= space.num_subsystems())
        throw std::out_of_range("partial_transpose: subsystem index out of range");

    const std::size_t d = static_cast<std::size_t>(space.dim(subsystem));
    const std::size_t stride = space.strides()[static_cast<std::size_t>(subsystem)];
    const std::size_t full = space.total_dim();

    ComplexMatrix out(full, full);
    const cplx* src = m.data();
    cplx* dst = out.data();
    const int nt = kernels::thread_count();
#pragma omp parallel for num_threads(nt) schedule(static) if (full * full >= kernels::parallel_threshold && nt > 1)
    for (std::size_t r = 0; r < full; ++r) {
        const std::size_t dr = (r / stride) % d;
        for (std::size_t c = 0; c < full; ++c) {
            const std::size_t dc = (c / stride) % d;
            const std::size_t r2 = r + (dc - dr) * stride;
            const std::size_t c2 = c + (dr - dc) * stride;
            dst[r * full + c] = src[r2 * full + c2];
        }
    }
    return out;
}

ComplexMatrix embed_op(const ComplexMatrix& op, const TensorSpace& space,
                       const std::vector<int>& support) {
    for (std::size_t i = 1; i < support.size(); ++i)
        if (support[i] <= support[i - 1])
            throw std::invalid_argument("embed_op: support must be strictly increasing");
    const std::vector<int> rest = complement(space, support);
    const auto sup_off = subset_offsets(space, support);
    const auto rest_off = subset_offsets(space, rest);
    if (!op.is_square() || op.rows() != sup_off.size())
        throw std::invalid_argument("embed_op: operator does not match support dims");

    const std::size_t full = space.total_dim();
    ComplexMatrix out(full, full);
    for (std::size_t rs = 0; rs < sup_off.size(); ++rs)
        for (std::size_t cs = 0; cs < sup_off.size(); ++cs) {
            const cplx v = op(rs, cs);
            if (v == cplx{0.0, 0.0}) continue;
            for (std::size_t t : rest_off)
                out(sup_off[rs] + t, sup_off[cs] + t) = v;
        }
    return out;
}

// ------------------------------------------------------------ hermitian_eig

EigResult hermitian_eig(const ComplexMatrix& m, double tol) {
    if (!m.is_square()) throw std::invalid_argument("hermitian_eig: matrix not square");
    if (!m.is_hermitian(tol))
        throw std::invalid_argument("hermitian_eig: matrix not Hermitian within tolerance");

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, a.frobenius_norm());
    const double threshold = 1e-13 * scale;

    auto offdiag = [&]() {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) s += 2.0 * std::norm(a(r, c));
        return std::sqrt(s);
    };

    const int max_sweeps = 100;
    int sweep = 0;
    const int nt = kernels::thread_count();
    const bool par = n >= 192 && nt > 1;
    while (offdiag() > threshold) {
        if (++sweep > max_sweeps)
            throw NonConvergence("hermitian_eig: Jacobi sweeps exhausted", sweep);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                // Phase makes the pivot real, then a real Jacobi rotation
                // zeroes it: J e_p = c e_p - s e^{i phi} e_q,
                //            J e_q = s e_p + c e^{i phi} e_q.
                const cplx phase = std::conj(apq) / mag;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sp = s * phase;
                const cplx spc = std::conj(sp);

#pragma omp parallel for num_threads(nt) schedule(static) if (par)
                for (std::size_t r = 0; r < n; ++r) {
                    // Column update: A <- A J, and accumulate V <- V J.
                    const cplx arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp - sp * arq;
                    a(r, q) = s * arp + phase * (c * arq);
                    const cplx vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = c * vrp - sp * vrq;
                    v(r, q) = s * vrp + phase * (c * vrq);
                }
#pragma omp parallel for num_threads(nt) schedule(static) if (par)
                for (std::size_t r = 0; r < n; ++r) {
                    // Row update: A <- J^dag A.
                    const cplx apr = a(p, r), aqr = a(q, r);
                    a(p, r) = c * apr - spc * aqr;
                    a(q, r) = s * apr + std::conj(phase) * (c * aqr);
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigResult res;
    res.values.resize(n);
    res.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        res.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) res.vectors(r, k) = v(r, order[k]);
    }
    return res;
}

// ---------------------------------------------------------- max_eig_matfree

double max_eig_matfree(const ApplyFn& apply, std::size_t dim, double tol,
                       int max_iter, unsigned seed) {
    constexpr double shift = 2.0;
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> v(dim), w(dim);
    for (cplx& x : v) x = cplx{gauss(rng), gauss(rng)};
    double norm = std::sqrt(std::real(inner(v, v)));
    for (cplx& x : v) x /= norm;

    const double plateau = std::min(1e-12, tol);
    double prev = 0.0;
    int stable = 0;
    for (int it = 1; it <= max_iter; ++it) {
        apply(v, w);
        for (std::size_t i = 0; i < dim; ++i) w[i] += shift * v[i];
        const double rq = std::real(inner(v, w));
        norm = std::sqrt(std::real(inner(w, w)));
        if (norm == 0.0)
            throw NonConvergence("max_eig_matfree: zero iterate", it);
        for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / norm;
        if (it > 1 && std::abs(rq - prev) < plateau) {
            if (++stable >= 10) return rq - shift;
        } else {
            stable = 0;
        }
        prev = rq;
    }
    throw NonConvergence("max_eig_matfree: no convergence within max_iter", max_iter);
}

}  // namespace qmarg
