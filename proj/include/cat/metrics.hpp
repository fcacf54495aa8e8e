#ifndef CAT_METRICS_HPP
#define CAT_METRICS_HPP

#include <cstddef>
#include <span>

#include "cat/graph.hpp"

namespace cat {

struct AncestorMetrics {
    double tpr;
    double recall;
};

struct MetricReport {
    std::size_t shd = 0;
    std::size_t sid = 0;
    double ancestor_tpr = 1.0;
    double ancestor_recall = 1.0;
};

// Structural Hamming distance: every unordered node pair whose connection
// differs counts once, so a reversed edge costs 1.
std::size_t shd(const Dag& truth, const Dag& est);

// x and y d-separated by z in g (moralized ancestral graph test). x, y not in z.
bool d_separated(const Dag& g, Node x, Node y, std::span<const Node> z);

/// Structural intervention distance.
///
/// Counts ordered pairs (i, j), i != j, for which adjusting for the parents of
/// i in `est` does not give the interventional distribution of X_j under
/// do(X_i) in `truth`. When j is a parent of i in `est` the prediction is "no
/// effect", which is right exactly when j is not a descendant of i in `truth`.
/// Otherwise Z = PA_est(i) has to contain no descendant of any node other than
/// i on a directed i -> j path, and has to d-separate i and j once the first
/// edge of every such path is removed.
std::size_t sid(const Dag& truth, const Dag& est);

// Ancestor pairs implied by est compared with those of truth; 0/0 counts as 1.
AncestorMetrics ancestor_metrics(const Dag& truth, const DirectedTree& est);
AncestorMetrics ancestor_metrics(const Dag& truth, const Dag& est);

MetricReport compare(const Dag& truth, const Dag& est);

}  // namespace cat

#endif  // CAT_METRICS_HPP
