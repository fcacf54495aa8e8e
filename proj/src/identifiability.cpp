#include "cat/identifiability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cat/entropy.hpp"
#include "cat/error.hpp"
#include "cat/parallel.hpp"
#include "cat/regression.hpp"
#include "cat/rng.hpp"

namespace cat {

ReversalBounds gaussian_reversal_bounds(double var_fx, double var_ny) {
    if (!(var_fx > 0.0) || !(var_ny > 0.0)) throw InvalidArgument("variances must be positive");
    const double ratio = var_fx / var_ny;
    const double c = 2.0 / (std::numbers::pi * std::numbers::e);
    const double threshold = std::numbers::pi * std::numbers::e / 2.0 - 1.0;
    return {0.5 * std::log1p(ratio), 0.5 * std::log(c + c * ratio), ratio > threshold};
}

double edge_reversal_gap(std::span<const double> x, std::span<const double> y, const RegressionConfig& reg,
                         const EntropyConfig& ent) {
    if (x.size() != y.size()) throw LengthMismatch("x and y lengths differ");
    const Predictor f = fit(y, x, reg);
    std::vector<double> r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[k] - f(y[k]);
    return mutual_information(r, y, ent);
}

EdgeEstimate min_edge_reversal(const Dataset& d, const DirectedTree& t, const ScoreOptions& opts) {
    if (t.size() != d.p()) throw DimensionMismatchError("tree and dataset sizes differ");
    const std::vector<Edge> edges = t.edges();
    if (edges.empty()) throw InvalidArgument("tree has no edges");
    std::vector<double> values(edges.size());
    parallel_for(edges.size(), opts.threads, [&](std::size_t k) {
        EntropyConfig ent = opts.entropy;
        ent.seed = splitmix64(opts.entropy.seed ^ splitmix64(k));
        values[k] = edge_reversal_gap(d.column(static_cast<std::size_t>(edges[k].from)),
                                      d.column(static_cast<std::size_t>(edges[k].to)), opts.regression, ent);
    });
    EdgeEstimate best{values[0], edges[0]};
    for (std::size_t k = 1; k < edges.size(); ++k) {
        if (values[k] < best.value) best = {values[k], edges[k]};
    }
    return best;
}

std::vector<Triple> pi_w_triples(const DirectedTree& t) {
    const auto children = t.children();
    std::vector<Triple> out;
    for (const Edge& e : t.edges()) {
        for (Node o : children[static_cast<std::size_t>(e.from)]) {
            if (o != e.to) out.push_back({e.from, e.to, o});
        }
        const Node parent = t.parent(e.from);
        if (parent != DirectedTree::kNoParent) out.push_back({e.from, e.to, parent});
    }
    std::sort(out.begin(), out.end());
    return out;
}

TripleEstimate piW_min_cmi(const Dataset& d, const DirectedTree& t, const ScoreOptions& opts) {
    if (t.size() != d.p()) throw DimensionMismatchError("tree and dataset sizes differ");
    const std::vector<Triple> triples = pi_w_triples(t);
    if (triples.empty()) throw NoTriplesError("the tree has no (w, l, o) triples");
    std::vector<double> values(triples.size());
    parallel_for(triples.size(), opts.threads, [&](std::size_t k) {
        EntropyConfig ent = opts.entropy;
        ent.seed = splitmix64(opts.entropy.seed ^ splitmix64(k + 0x100));
        const Triple& tr = triples[k];
        values[k] = conditional_mutual_information(d.column(static_cast<std::size_t>(tr.w)),
                                                   d.column(static_cast<std::size_t>(tr.l)),
                                                   d.column(static_cast<std::size_t>(tr.o)), ent);
    });
    TripleEstimate best{values[0], triples[0]};
    for (std::size_t k = 1; k < triples.size(); ++k) {
        if (values[k] < best.value) best = {values[k], triples[k]};
    }
    return best;
}

GapReport score_gap(const WeightMatrix& w) {
    Arborescence best = solve(w);
    Arborescence second = second_best(w);
    GapReport out;
    out.best_score = best.score;
    out.second_score = second.score;
    out.gap = second.score - best.score;
    out.best_tree = std::move(best.tree);
    out.second_tree = std::move(second.tree);
    return out;
}

GapReport estimate_identifiability_gap(const Dataset& d, const ScoreOptions& opts, bool with_piw) {
    GapReport out = score_gap(edge_weights(d, opts));
    out.min_reversal = min_edge_reversal(d, out.best_tree, opts);
    if (with_piw && !pi_w_triples(out.best_tree).empty()) out.piw = piW_min_cmi(d, out.best_tree, opts);
    return out;
}

}  // namespace cat
