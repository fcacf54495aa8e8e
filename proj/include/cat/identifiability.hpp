#ifndef CAT_IDENTIFIABILITY_HPP
#define CAT_IDENTIFIABILITY_HPP

#include <optional>
#include <span>
#include <vector>

#include "cat/arborescence.hpp"
#include "cat/dataset.hpp"
#include "cat/scoring.hpp"

namespace cat {

struct ReversalBounds {
    double gauss_bound;
    double logconcave_bound;
    bool logconcave_nontrivial;
};

// Lower bounds on the edge-reversal gap of X -> Y with Y = f(X) + N in terms of
// r = Var f(X) / Var N:
//   Gaussian noise:     0.5 * log(1 + r)
//   log-concave noise:  0.5 * log(2/(pi e) + 2/(pi e) * r), informative once r > pi e / 2 - 1
// Throws InvalidArgument unless both variances are positive.
ReversalBounds gaussian_reversal_bounds(double var_fx, double var_ny);

// I(x - E[x | y]; y) with the conditional mean fitted by regressing x on y:
// the entropy-score loss of reversing a causal edge x -> y.
double edge_reversal_gap(std::span<const double> x, std::span<const double> y, const RegressionConfig& reg = {},
                         const EntropyConfig& ent = {});

struct EdgeEstimate {
    double value;
    Edge edge;
};

// Smallest edge-reversal gap over the tree's edges (ties keep the first edge in sorted order).
EdgeEstimate min_edge_reversal(const Dataset& d, const DirectedTree& t, const ScoreOptions& opts = {});

struct Triple {
    Node w;
    Node l;
    Node o;

    auto operator<=>(const Triple&) const = default;
};

// (w, l, o) for every edge w -> l and every o among the other children and the parent of w.
std::vector<Triple> pi_w_triples(const DirectedTree& t);

struct TripleEstimate {
    double value;
    Triple triple;
};

// Minimum of I(X_w; X_l | X_o) over pi_w_triples(t); throws NoTriplesError when there are none.
TripleEstimate piW_min_cmi(const Dataset& d, const DirectedTree& t, const ScoreOptions& opts = {});

struct GapReport {
    DirectedTree best_tree;
    double best_score = 0.0;
    DirectedTree second_tree;
    double second_score = 0.0;
    double gap = 0.0;
    std::optional<EdgeEstimate> min_reversal;
    std::optional<TripleEstimate> piw;
};

// Best and runner-up trees for a weight matrix.
GapReport score_gap(const WeightMatrix& w);

// Weights from opts, their score gap, and the minimum edge reversal on the best
// tree. The conditional-MI term is added when `with_piw` is set and the best
// tree has triples.
GapReport estimate_identifiability_gap(const Dataset& d, const ScoreOptions& opts = {}, bool with_piw = false);

}  // namespace cat

#endif  // CAT_IDENTIFIABILITY_HPP
