#pragma once

#include <optional>
#include <vector>

namespace qmarg::classical {

// Pairwise distribution on {0..d-1}^2 with uniform marginals, interpolating
// between even agreement (alpha = 1) and even disagreement (alpha = 0):
// p(i,j) = (alpha/d) delta_ij + (1-alpha)/(d(d-1)) (1-delta_ij).
struct AgreementDist {
    int d;
    double alpha;

    AgreementDist(int d, double alpha);
    std::vector<double> joint() const;  // row-major d x d
};

// Distribution on {0..d-1}^3, index (a,b,c) -> a*d*d + b*d + c.
struct TripartiteDist {
    int d;
    std::vector<double> p;

    double at(int a, int b, int c) const {
        return p[static_cast<std::size_t>((a * d + b) * d + c)];
    }
    double& at(int a, int b, int c) {
        return p[static_cast<std::size_t>((a * d + b) * d + c)];
    }
    std::vector<double> marginal_ab() const;
    std::vector<double> marginal_ac() const;
    std::vector<double> marginal_bc() const;
    double agreement_ab() const;
    double agreement_ac() const;
    double agreement_bc() const;
    double entropy() const;  // Shannon, nats
};

// Maximum-entropy joining of two pair distributions with a common first
// marginal: w(a,b,c) = p(a,b) p(a,c) / p(a).
TripartiteDist classical_join_two(const std::vector<double>& p_ab,
                                  const std::vector<double>& p_ac, int d);

// The extremal three-party distributions whose pair marginals are agreement
// distributions: all-agree, one pair agrees (three ways), and, for d >= 3,
// all-disagree.
TripartiteDist vertex_all_agree(int d);
TripartiteDist vertex_ab_agree(int d);
TripartiteDist vertex_ac_agree(int d);
TripartiteDist vertex_bc_agree(int d);
TripartiteDist vertex_all_disagree(int d);  // d >= 3 only

// Facet test of the joinable polytope in agreement coordinates:
//   a_AB + a_AC + a_BC >= 1  (d = 2 only; replaced by a >= 0 for d >= 3)
//   each pairwise sum minus the third <= 1.
bool triple_joinable_inequalities(int d, double a_ab, double a_ac, double a_bc);

// Vertex-hull membership with an explicit convex-combination witness;
// solves the barycentric system over the vertex list above.
std::optional<TripartiteDist> classical_triple_joinable(int d, double a_ab,
                                                        double a_ac, double a_bc);

}  // namespace qmarg::classical
