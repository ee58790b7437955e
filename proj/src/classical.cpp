#include "qmarg/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace qmarg::classical {

namespace {

constexpr double kTol = 1e-9;

TripartiteDist zero_dist(int d) {
    TripartiteDist t;
    t.d = d;
    t.p.assign(static_cast<std::size_t>(d) * d * d, 0.0);
    return t;
}

}  // namespace

AgreementDist::AgreementDist(int d, double alpha) : d(d), alpha(alpha) {
    if (d < 2) throw std::invalid_argument("AgreementDist: d < 2");
    if (alpha < -kTol || alpha > 1.0 + kTol)
        throw std::invalid_argument("AgreementDist: alpha outside [0, 1]");
}

std::vector<double> AgreementDist::joint() const {
    std::vector<double> p(static_cast<std::size_t>(d) * d);
    const double agree = alpha / d;
    const double disagree = (1.0 - alpha) / (static_cast<double>(d) * (d - 1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            p[static_cast<std::size_t>(i * d + j)] = (i == j) ? agree : disagree;
    return p;
}

std::vector<double> TripartiteDist::marginal_ab() const {
    std::vector<double> m(static_cast<std::size_t>(d) * d, 0.0);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                m[static_cast<std::size_t>(a * d + b)] += at(a, b, c);
    return m;
}

std::vector<double> TripartiteDist::marginal_ac() const {
    std::vector<double> m(static_cast<std::size_t>(d) * d, 0.0);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                m[static_cast<std::size_t>(a * d + c)] += at(a, b, c);
    return m;
}

std::vector<double> TripartiteDist::marginal_bc() const {
    std::vector<double> m(static_cast<std::size_t>(d) * d, 0.0);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                m[static_cast<std::size_t>(b * d + c)] += at(a, b, c);
    return m;
}

double TripartiteDist::agreement_ab() const {
    double s = 0.0;
    for (int i = 0; i < d; ++i)
        for (int c = 0; c < d; ++c) s += at(i, i, c);
    return s;
}

double TripartiteDist::agreement_ac() const {
    double s = 0.0;
    for (int i = 0; i < d; ++i)
        for (int b = 0; b < d; ++b) s += at(i, b, i);
    return s;
}

double TripartiteDist::agreement_bc() const {
    double s = 0.0;
    for (int a = 0; a < d; ++a)
        for (int i = 0; i < d; ++i) s += at(a, i, i);
    return s;
}

double TripartiteDist::entropy() const {
    double h = 0.0;
    for (double v : p)
        if (v > 0.0) h -= v * std::log(v);
    return h;
}

TripartiteDist classical_join_two(const std::vector<double>& p_ab,
                                  const std::vector<double>& p_ac, int d) {
    const std::size_t dim = static_cast<std::size_t>(d) * d;
    if (p_ab.size() != dim || p_ac.size() != dim)
        throw std::invalid_argument("classical_join_two: distribution size mismatch");
    std::vector<double> pa(static_cast<std::size_t>(d), 0.0);
    std::vector<double> pa2(static_cast<std::size_t>(d), 0.0);
    for (int a = 0; a < d; ++a)
        for (int x = 0; x < d; ++x) {
            pa[static_cast<std::size_t>(a)] += p_ab[static_cast<std::size_t>(a * d + x)];
            pa2[static_cast<std::size_t>(a)] += p_ac[static_cast<std::size_t>(a * d + x)];
        }
    for (int a = 0; a < d; ++a)
        if (std::abs(pa[static_cast<std::size_t>(a)] - pa2[static_cast<std::size_t>(a)]) > 1e-12)
            throw std::invalid_argument("classical_join_two: A-marginals disagree");

    TripartiteDist w = zero_dist(d);
    for (int a = 0; a < d; ++a) {
        const double marg = pa[static_cast<std::size_t>(a)];
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                const double num = p_ab[static_cast<std::size_t>(a * d + b)] *
                                   p_ac[static_cast<std::size_t>(a * d + c)];
                if (marg < 1e-15) {
                    if (num > 1e-24)
                        throw std::invalid_argument(
                            "classical_join_two: nonzero numerator over zero marginal");
                    continue;
                }
                w.at(a, b, c) = num / marg;
            }
    }
    return w;
}

TripartiteDist vertex_all_agree(int d) {
    TripartiteDist t = zero_dist(d);
    for (int i = 0; i < d; ++i) t.at(i, i, i) = 1.0 / d;
    return t;
}

TripartiteDist vertex_ab_agree(int d) {
    TripartiteDist t = zero_dist(d);
    const double v = 1.0 / (static_cast<double>(d) * (d - 1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j) t.at(i, i, j) = v;
    return t;
}

TripartiteDist vertex_ac_agree(int d) {
    TripartiteDist t = zero_dist(d);
    const double v = 1.0 / (static_cast<double>(d) * (d - 1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j) t.at(i, j, i) = v;
    return t;
}

TripartiteDist vertex_bc_agree(int d) {
    TripartiteDist t = zero_dist(d);
    const double v = 1.0 / (static_cast<double>(d) * (d - 1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j) t.at(j, i, i) = v;
    return t;
}

TripartiteDist vertex_all_disagree(int d) {
    if (d < 3)
        throw std::invalid_argument("vertex_all_disagree: requires d >= 3");
    TripartiteDist t = zero_dist(d);
    const double v = 1.0 / (static_cast<double>(d) * (d - 1) * (d - 2));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (i != j && j != k && i != k) t.at(i, j, k) = v;
    return t;
}

bool triple_joinable_inequalities(int d, double a_ab, double a_ac, double a_bc) {
    if (-a_ab + a_ac + a_bc > 1.0 + kTol) return false;
    if (a_ab - a_ac + a_bc > 1.0 + kTol) return false;
    if (a_ab + a_ac - a_bc > 1.0 + kTol) return false;
    if (d == 2) return a_ab + a_ac + a_bc >= 1.0 - kTol;
    return a_ab >= -kTol && a_ac >= -kTol && a_bc >= -kTol;
}

std::optional<TripartiteDist> classical_triple_joinable(int d, double a_ab,
                                                        double a_ac, double a_bc) {
    // Barycentric coordinates over {all-agree, AB, AC, BC}: the all-agree
    // weight is (sum - 1)/2 and the pair weights are the residuals.
    const double sum = a_ab + a_ac + a_bc;
    double l0 = (sum - 1.0) / 2.0;
    double l1 = a_ab - l0, l2 = a_ac - l0, l3 = a_bc - l0;
    bool in_upper = l0 >= -kTol && l1 >= -kTol && l2 >= -kTol && l3 >= -kTol &&
                    l0 + l1 + l2 + l3 <= 1.0 + kTol;
    if (in_upper) {
        TripartiteDist w = zero_dist(d);
        const TripartiteDist vs[4] = {vertex_all_agree(d), vertex_ab_agree(d),
                                      vertex_ac_agree(d), vertex_bc_agree(d)};
        const double ls[4] = {l0, l1, l2, l3};
        double total = 0.0;
        for (int k = 0; k < 4; ++k) total += std::max(0.0, ls[k]);
        for (int k = 0; k < 4; ++k) {
            const double lk = std::max(0.0, ls[k]) / total;
            for (std::size_t i = 0; i < w.p.size(); ++i) w.p[i] += lk * vs[k].p[i];
        }
        return w;
    }
    if (d >= 3) {
        // Lower tetrahedron over {AB, AC, BC, all-disagree}.
        const double l4 = 1.0 - sum;
        if (a_ab >= -kTol && a_ac >= -kTol && a_bc >= -kTol && l4 >= -kTol) {
            TripartiteDist w = zero_dist(d);
            const TripartiteDist vs[4] = {vertex_ab_agree(d), vertex_ac_agree(d),
                                          vertex_bc_agree(d), vertex_all_disagree(d)};
            const double ls[4] = {a_ab, a_ac, a_bc, l4};
            double total = 0.0;
            for (int k = 0; k < 4; ++k) total += std::max(0.0, ls[k]);
            for (int k = 0; k < 4; ++k) {
                const double lk = std::max(0.0, ls[k]) / total;
                for (std::size_t i = 0; i < w.p.size(); ++i) w.p[i] += lk * vs[k].p[i];
            }
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace qmarg::classical
