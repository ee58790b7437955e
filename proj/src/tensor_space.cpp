#include "qmarg/tensor_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qmarg/tensor_ops.hpp"

namespace qmarg {

TensorSpace::TensorSpace(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("TensorSpace: no subsystems");
    for (int d : dims_)
        if (d < 2) throw std::invalid_argument("TensorSpace: subsystem dimension < 2");
    strides_.assign(dims_.size(), 1);
    for (int k = static_cast<int>(dims_.size()) - 2; k >= 0; --k)
        strides_[k] = strides_[k + 1] * static_cast<std::size_t>(dims_[k + 1]);
    total_ = strides_[0] * static_cast<std::size_t>(dims_[0]);
}

TensorSpace TensorSpace::qudits(int d, int n) {
    return TensorSpace(std::vector<int>(static_cast<std::size_t>(n), d));
}

std::size_t TensorSpace::compose(const std::vector<int>& digits) const {
    std::size_t x = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k)
        x += static_cast<std::size_t>(digits[k]) * strides_[k];
    return x;
}

void TensorSpace::decompose(std::size_t index, std::vector<int>& digits) const {
    digits.resize(dims_.size());
    for (std::size_t k = 0; k < dims_.size(); ++k)
        digits[k] = static_cast<int>((index / strides_[k]) % static_cast<std::size_t>(dims_[k]));
}

double min_eigenvalue_bound(const ComplexMatrix& m) {
    const std::size_t n = m.rows();
    if (n <= 512) {
        return hermitian_eig(m, 1e-8).values.front();
    }
    // Gershgorin shift makes c*I - M positive, then power-iterate it.
    double c = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        double s = 0.0;
        for (std::size_t col = 0; col < n; ++col) s += std::abs(m(r, col));
        c = std::max(c, s);
    }
    auto apply = [&](const std::vector<cplx>& x, std::vector<cplx>& y) {
        y = matvec(m, x);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = c * x[i] - y[i];
    };
    const double top = max_eig_matfree(apply, n, 1e-10, 100000);
    return c - top;
}

DensityMatrix::DensityMatrix(TensorSpace space, ComplexMatrix mat)
    : space_(std::move(space)), mat_(std::move(mat)) {
    if (!mat_.is_square() || mat_.rows() != space_.total_dim())
        throw std::invalid_argument("DensityMatrix: matrix does not match space dimension");
    if (std::abs(mat_.trace() - cplx{1.0, 0.0}) > trace_tol)
        throw std::invalid_argument("DensityMatrix: trace differs from one by more than " +
                                    std::to_string(trace_tol));
    if (!mat_.is_hermitian(hermitian_tol))
        throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
    if (min_eigenvalue_bound(mat_) < psd_tol)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue below tolerance");
}

}  // namespace qmarg
