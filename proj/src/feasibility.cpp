#include "qmarg/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "qmarg/tensor_ops.hpp"

namespace qmarg::feasibility {

namespace {

constexpr double kConsistencyTol = 1e-10;

std::vector<int> complement_of(const TensorSpace& space, const std::vector<int>& subs) {
    std::vector<bool> in(static_cast<std::size_t>(space.num_subsystems()), false);
    for (int k : subs) in[static_cast<std::size_t>(k)] = true;
    std::vector<int> rest;
    for (int k = 0; k < space.num_subsystems(); ++k)
        if (!in[static_cast<std::size_t>(k)]) rest.push_back(k);
    return rest;
}

std::size_t subset_dim(const TensorSpace& space, const std::vector<int>& subs) {
    std::size_t d = 1;
    for (int k : subs) d *= static_cast<std::size_t>(space.dim(k));
    return d;
}

// Orthogonal projection of X onto operators supported in S (identity
// elsewhere): embed(Tr_{S complement} X, S) / dim(S complement).
ComplexMatrix support_component(const ComplexMatrix& x, const TensorSpace& space,
                                const std::vector<int>& s) {
    const std::vector<int> rest = complement_of(space, s);
    if (rest.empty()) return x;
    const double scale = 1.0 / static_cast<double>(subset_dim(space, rest));
    if (s.empty()) {
        ComplexMatrix out = ComplexMatrix::identity(space.total_dim());
        out *= x.trace() * scale;
        return out;
    }
    return embed_op(partial_trace(x, space, rest), space, s) * cplx{scale, 0.0};
}

std::vector<std::vector<int>> all_subsets(const std::vector<int>& s) {
    std::vector<std::vector<int>> out;
    const std::size_t n = s.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> sub;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (std::size_t{1} << b)) sub.push_back(s[b]);
        out.push_back(std::move(sub));
    }
    return out;
}

}  // namespace

FeasibilityProblem::FeasibilityProblem(TensorSpace space,
                                       std::vector<Constraint> constraints)
    : space_(std::move(space)), constraints_(std::move(constraints)) {
    if (constraints_.empty())
        throw std::invalid_argument("FeasibilityProblem: no constraints");
    for (const Constraint& c : constraints_) {
        if (c.subsystems.empty())
            throw std::invalid_argument("FeasibilityProblem: empty neighborhood");
        for (std::size_t i = 0; i < c.subsystems.size(); ++i) {
            if (c.subsystems[i] < 0 || c.subsystems[i] >= space_.num_subsystems())
                throw std::out_of_range("FeasibilityProblem: subsystem out of range");
            if (i > 0 && c.subsystems[i] <= c.subsystems[i - 1])
                throw std::invalid_argument(
                    "FeasibilityProblem: neighborhood indices must increase");
        }
        if (!c.target.is_square() || c.target.rows() != subset_dim(space_, c.subsystems))
            throw std::invalid_argument("FeasibilityProblem: target dimension mismatch");
        if (!c.target.is_hermitian(kConsistencyTol))
            throw std::invalid_argument("FeasibilityProblem: target not Hermitian");
        if (std::abs(c.target.trace() - cplx{1.0, 0.0}) > kConsistencyTol)
            throw std::invalid_argument("FeasibilityProblem: target trace differs from one");
    }
    // Overlapping targets must agree on their common reduction.
    for (std::size_t i = 0; i < constraints_.size(); ++i)
        for (std::size_t j = i + 1; j < constraints_.size(); ++j) {
            const auto& a = constraints_[i];
            const auto& b = constraints_[j];
            std::vector<int> common;
            std::set_intersection(a.subsystems.begin(), a.subsystems.end(),
                                  b.subsystems.begin(), b.subsystems.end(),
                                  std::back_inserter(common));
            if (common.empty()) continue;
            auto reduce_to_common = [&](const Constraint& c) {
                TensorSpace local = [&] {
                    std::vector<int> dims;
                    for (int k : c.subsystems) dims.push_back(space_.dim(k));
                    return TensorSpace(std::move(dims));
                }();
                std::vector<int> local_traced;
                for (std::size_t pos = 0; pos < c.subsystems.size(); ++pos)
                    if (!std::binary_search(common.begin(), common.end(),
                                            c.subsystems[pos]))
                        local_traced.push_back(static_cast<int>(pos));
                if (local_traced.empty()) return c.target;
                return partial_trace(c.target, local, local_traced);
            };
            if (max_abs_diff(reduce_to_common(a), reduce_to_common(b)) > kConsistencyTol)
                throw std::invalid_argument(
                    "FeasibilityProblem: overlapping targets disagree");
        }
}

ComplexMatrix hermitian_join(const ComplexMatrix& q_ab, const ComplexMatrix& q_ac,
                             int d_a, int d_b, int d_c) {
    const TensorSpace ab({d_a, d_b}), ac({d_a, d_c});
    TensorSpace abc({d_a, d_b, d_c});
    if (q_ab.rows() != ab.total_dim() || q_ac.rows() != ac.total_dim())
        throw std::invalid_argument("hermitian_join: operator dimensions mismatch");
    const ComplexMatrix marg_ab = partial_trace(q_ab, ab, {1});
    const ComplexMatrix marg_ac = partial_trace(q_ac, ac, {1});
    if (max_abs_diff(marg_ab, marg_ac) > kConsistencyTol)
        throw std::invalid_argument("hermitian_join: A-reductions disagree");

    ComplexMatrix q = embed_op(q_ab, abc, {0, 1}) * cplx{1.0 / d_c, 0.0};
    q += embed_op(q_ac, abc, {0, 2}) * cplx{1.0 / d_b, 0.0};
    q -= embed_op(marg_ab, abc, {0}) * cplx{1.0 / (static_cast<double>(d_b) * d_c), 0.0};
    return q;
}

namespace {

// Affine projector onto the marginal constraint set, done by exchanging the
// exact-support components the constraints pin. The exact-support-T
// component is the Mobius alternation of the support projections over the
// subsets of T; components for distinct T are mutually orthogonal.
class AffineProjector {
public:
    AffineProjector(const FeasibilityProblem& p) : space_(p.space()) {
        for (const Constraint& c : p.constraints())
            for (auto& t : all_subsets(c.subsystems)) {
                if (std::find(pinned_.begin(), pinned_.end(), t) != pinned_.end())
                    continue;
                pinned_.push_back(t);
                sources_.push_back(&c);
            }
        // Pinned component of the target data, one exact-support piece per
        // pinned subset, taken from any constraint containing it.
        pinned_target_ = ComplexMatrix(space_.total_dim(), space_.total_dim());
        for (std::size_t i = 0; i < pinned_.size(); ++i) {
            const Constraint& c = *sources_[i];
            const ComplexMatrix lifted =
                embed_op(c.target, space_, c.subsystems) *
                cplx{1.0 / static_cast<double>(
                          subset_dim(space_, complement_of(space_, c.subsystems))),
                      0.0};
            pinned_target_ += exact_component(lifted, pinned_[i]);
        }
    }

    ComplexMatrix project(const ComplexMatrix& x) const {
        ComplexMatrix out = x;
        for (const auto& t : pinned_) out -= exact_component(x, t);
        out += pinned_target_;
        return out;
    }

private:
    ComplexMatrix exact_component(const ComplexMatrix& x,
                                  const std::vector<int>& t) const {
        ComplexMatrix acc(space_.total_dim(), space_.total_dim());
        for (const auto& sub : all_subsets(t)) {
            const ComplexMatrix comp = support_component(x, space_, sub);
            if ((t.size() - sub.size()) % 2 == 0)
                acc += comp;
            else
                acc -= comp;
        }
        return acc;
    }

    TensorSpace space_;
    std::vector<std::vector<int>> pinned_;
    std::vector<const Constraint*> sources_;
    ComplexMatrix pinned_target_;
};

// Exact metric projection onto {X >= 0, Tr X = 1}: eigenvalues projected
// onto the probability simplex (clip after a uniform water-filling shift).
ComplexMatrix project_density(const ComplexMatrix& x) {
    const ComplexMatrix herm = cplx{0.5, 0.0} * (x + x.dagger());
    const EigResult eig = hermitian_eig(herm, 1e-6);
    const std::size_t n = eig.values.size();
    std::vector<double> sorted(eig.values);  // ascending
    double cumulative = 0.0;
    double tau = 0.0;
    int support = 0;
    for (std::size_t k = n; k-- > 0;) {
        cumulative += sorted[k];
        const int count = static_cast<int>(n - k);
        const double candidate = (cumulative - 1.0) / count;
        if (candidate <= sorted[k]) {
            tau = candidate;
            support = count;
        }
    }
    (void)support;
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = std::max(0.0, eig.values[k] - tau);
        if (lam == 0.0) continue;
        for (std::size_t r = 0; r < n; ++r) {
            const cplx vr = eig.vectors(r, k) * lam;
            for (std::size_t c = 0; c < n; ++c)
                out(r, c) += vr * std::conj(eig.vectors(c, k));
        }
    }
    return out;
}

}  // namespace

FeasibilityReport alternating_projection(const FeasibilityProblem& problem,
                                         const SolverOptions& opts) {
    const std::size_t dim = problem.space().total_dim();
    if (dim > 4096)
        throw CapExceeded("alternating_projection: total dimension exceeds 4096");
    const AffineProjector affine(problem);

    ComplexMatrix x = ComplexMatrix::identity(dim);
    x *= cplx{1.0 / static_cast<double>(dim), 0.0};
    ComplexMatrix correction(dim, dim);

    std::deque<double> window;
    for (int it = 1; it <= opts.max_iter; ++it) {
        const ComplexMatrix a = affine.project(x);
        const ComplexMatrix z = a + correction;
        const ComplexMatrix c = project_density(z);
        correction = z - c;
        x = c;

        const double residual = max_abs_diff(a, c);
        if (residual < opts.tol) {
            ComplexMatrix witness = c;
            const cplx tr = witness.trace();
            if (std::abs(tr) > 0.0) witness *= cplx{1.0, 0.0} / tr;
            return {Verdict::Feasible, residual, it, std::move(witness)};
        }
        window.push_back(residual);
        if (static_cast<int>(window.size()) > opts.plateau_window) window.pop_front();
        if (static_cast<int>(window.size()) == opts.plateau_window) {
            const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
            if (*hi - *lo <= opts.plateau_rel * (*hi)) {
                if (residual > 100.0 * opts.tol)
                    return {Verdict::Infeasible, residual, it, std::nullopt};
                return {Verdict::Undecided, residual, it, std::nullopt};
            }
        }
    }
    return {Verdict::Undecided, window.empty() ? 0.0 : window.back(), opts.max_iter,
            std::nullopt};
}

double verify_witness(const FeasibilityProblem& problem, const ComplexMatrix& w) {
    double worst = std::abs(w.trace() - cplx{1.0, 0.0});
    for (const Constraint& c : problem.constraints()) {
        const ComplexMatrix red = partial_trace(
            w, problem.space(), complement_of(problem.space(), c.subsystems));
        worst = std::max(worst, max_abs_diff(red, c.target));
    }
    worst = std::max(worst, std::max(0.0, -min_eigenvalue_bound(w)));
    return worst;
}

}  // namespace qmarg::feasibility
