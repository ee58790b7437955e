#include "qmarg/young.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmarg {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("YoungDiagram: empty partition");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0)
            throw std::invalid_argument("YoungDiagram: nonpositive row length");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("YoungDiagram: rows not weakly decreasing");
    }
}

std::vector<int> YoungDiagram::columns() const {
    std::vector<int> cols(static_cast<std::size_t>(width()), 0);
    for (int len : rows_)
        for (int c = 0; c < len; ++c) ++cols[static_cast<std::size_t>(c)];
    return cols;
}

int YoungDiagram::boxes() const {
    int n = 0;
    for (int len : rows_) n += len;
    return n;
}

std::int64_t YoungDiagram::sum_sq_columns() const {
    std::int64_t a = 0;
    for (int h : columns()) a += static_cast<std::int64_t>(h) * h;
    return a;
}

std::int64_t YoungDiagram::sum_sq_rows() const {
    std::int64_t b = 0;
    for (int len : rows_) b += static_cast<std::int64_t>(len) * len;
    return b;
}

namespace {

void gen_partitions(int n, int max_part, int slots, std::vector<int>& prefix,
                    std::vector<YoungDiagram>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (slots == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        gen_partitions(n - p, p, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> enumerate_diagrams(int boxes, int max_height) {
    if (boxes < 1) throw std::invalid_argument("enumerate_diagrams: boxes < 1");
    if (max_height < 1) throw std::invalid_argument("enumerate_diagrams: max_height < 1");
    std::vector<YoungDiagram> out;
    std::vector<int> prefix;
    gen_partitions(boxes, boxes, max_height, prefix, out);
    return out;
}

Rational casimir_eigenvalue(const YoungDiagram& y, int d) {
    if (y.height() > d)
        throw std::invalid_argument("casimir_eigenvalue: diagram taller than d");
    const std::int64_t n = y.boxes();
    return Rational(n * d * d - n * n, d) +
           Rational(y.sum_sq_rows() - y.sum_sq_columns());
}

namespace {

// Does the skew shape outer/inner admit a semistandard filling with content
// `content` whose reverse reading word is a lattice word? Backtracking over
// cells in reverse reading order (each row right to left, top to bottom).
struct LrSearch {
    const std::vector<int>& outer;
    const std::vector<int>& inner;  // padded to outer height
    const std::vector<int>& content;
    std::vector<std::vector<int>> label;  // 0 = unfilled
    std::vector<int> count;
    std::vector<std::pair<int, int>> order;

    bool feasible(std::size_t next) {
        if (next == order.size()) return true;
        const auto [r, c] = order[next];
        const int k = static_cast<int>(content.size());
        for (int v = 1; v <= k; ++v) {
            if (count[static_cast<std::size_t>(v)] >= content[static_cast<std::size_t>(v - 1)])
                continue;
            // Lattice condition: prefix counts stay weakly decreasing in v.
            if (v >= 2 && count[static_cast<std::size_t>(v)] + 1 >
                              count[static_cast<std::size_t>(v - 1)])
                continue;
            // Row weakly increases left to right.
            if (c + 1 < outer[static_cast<std::size_t>(r)] &&
                v > label[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)])
                continue;
            // Column strictly increases downward (only versus filled cells).
            if (r > 0 && c < outer[static_cast<std::size_t>(r - 1)] &&
                c >= inner[static_cast<std::size_t>(r - 1)] &&
                v <= label[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)])
                continue;
            label[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++count[static_cast<std::size_t>(v)];
            if (feasible(next + 1)) return true;
            --count[static_cast<std::size_t>(v)];
            label[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
        return false;
    }
};

bool lr_coefficient_positive(const YoungDiagram& outer, const YoungDiagram& yl,
                             const YoungDiagram& yr) {
    std::vector<int> inner(static_cast<std::size_t>(outer.height()), 0);
    for (int r = 0; r < yl.height(); ++r) {
        if (r >= outer.height()) return false;
        inner[static_cast<std::size_t>(r)] = yl.rows()[static_cast<std::size_t>(r)];
    }
    for (int r = 0; r < outer.height(); ++r)
        if (inner[static_cast<std::size_t>(r)] > outer.rows()[static_cast<std::size_t>(r)])
            return false;

    LrSearch s{outer.rows(), inner, yr.rows(), {}, {}, {}};
    s.label.assign(static_cast<std::size_t>(outer.height()), {});
    for (int r = 0; r < outer.height(); ++r)
        s.label[static_cast<std::size_t>(r)].assign(
            static_cast<std::size_t>(outer.rows()[static_cast<std::size_t>(r)]), 0);
    s.count.assign(yr.rows().size() + 1, 0);
    for (int r = 0; r < outer.height(); ++r)
        for (int c = outer.rows()[static_cast<std::size_t>(r)] - 1;
             c >= inner[static_cast<std::size_t>(r)]; --c)
            s.order.emplace_back(r, c);
    return s.feasible(0);
}

}  // namespace

std::vector<YoungDiagram> lr_decompose(const YoungDiagram& yl,
                                       const YoungDiagram& yr, int d) {
    if (yl.height() > d || yr.height() > d)
        throw std::invalid_argument("lr_decompose: input diagram taller than d");
    std::vector<YoungDiagram> out;
    for (const YoungDiagram& cand : enumerate_diagrams(yl.boxes() + yr.boxes(), d))
        if (lr_coefficient_positive(cand, yl, yr)) out.push_back(cand);
    return out;
}

}  // namespace qmarg
