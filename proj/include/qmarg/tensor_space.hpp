#pragma once

#include <cstddef>
#include <vector>

#include "qmarg/complex_matrix.hpp"

namespace qmarg {

// Ordered list of subsystem dimensions of a multi-qudit space.
class TensorSpace {
public:
    explicit TensorSpace(std::vector<int> dims);

    static TensorSpace qudits(int d, int n);

    int num_subsystems() const { return static_cast<int>(dims_.size()); }
    int dim(int k) const { return dims_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& dims() const { return dims_; }
    std::size_t total_dim() const { return total_; }

    // strides()[k] = product of dims after k; digit k of a composite index
    // x is (x / strides()[k]) % dim(k).
    const std::vector<std::size_t>& strides() const { return strides_; }

    std::size_t compose(const std::vector<int>& digits) const;
    void decompose(std::size_t index, std::vector<int>& digits) const;

    bool operator==(const TensorSpace& o) const { return dims_ == o.dims_; }

private:
    std::vector<int> dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 1;
};

// Trace-one PSD matrix on a tensor space. The checked constructor enforces
// trace within 1e-12 of one, hermiticity within 1e-12, and minimum
// eigenvalue >= -1e-9 (accumulated floating error at dims up to 4096).
class DensityMatrix {
public:
    DensityMatrix(TensorSpace space, ComplexMatrix mat);

    const TensorSpace& space() const { return space_; }
    const ComplexMatrix& mat() const { return mat_; }

    static constexpr double trace_tol = 1e-12;
    static constexpr double hermitian_tol = 1e-12;
    static constexpr double psd_tol = -1e-9;

private:
    TensorSpace space_;
    ComplexMatrix mat_;
};

// Lower bound on the minimum eigenvalue of a Hermitian matrix (dense solve
// for small dims, shifted power iteration above that).
double min_eigenvalue_bound(const ComplexMatrix& m);

}  // namespace qmarg
