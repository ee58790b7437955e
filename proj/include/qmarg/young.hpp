#pragma once

#include <vector>

#include "qmarg/rational.hpp"

namespace qmarg {

// Weakly decreasing partition drawn as rows of boxes.
class YoungDiagram {
public:
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    std::vector<int> columns() const;  // conjugate partition
    int boxes() const;
    int height() const { return static_cast<int>(rows_.size()); }
    int width() const { return rows_.empty() ? 0 : rows_.front(); }

    // Row/column second moments entering the Casimir eigenvalue.
    std::int64_t sum_sq_columns() const;  // A_Y
    std::int64_t sum_sq_rows() const;     // B_Y

    bool operator==(const YoungDiagram& o) const { return rows_ == o.rows_; }
    bool operator<(const YoungDiagram& o) const { return rows_ < o.rows_; }

private:
    std::vector<int> rows_;
};

// All partitions of `boxes` with at most max_height parts, largest part
// first within each partition, listed in decreasing lexicographic order.
std::vector<YoungDiagram> enumerate_diagrams(int boxes, int max_height);

// Quadratic Casimir eigenvalue of the irreducible subspace labeled by y in
// the N-fold defining representation: C_Y = N(d - N/d) + B_Y - A_Y.
// Exact; denominator divides d. Throws when the diagram is too tall for d.
Rational casimir_eigenvalue(const YoungDiagram& y, int d);

// Support of the tensor decomposition yl (x) yr restricted to heights <= d:
// exactly the shapes with a positive Littlewood-Richardson coefficient,
// computed via skew semistandard fillings with the reverse-reading-word
// lattice condition. Multiplicities are not counted.
std::vector<YoungDiagram> lr_decompose(const YoungDiagram& yl,
                                       const YoungDiagram& yr, int d);

}  // namespace qmarg
