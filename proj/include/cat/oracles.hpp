#ifndef CAT_ORACLES_HPP
#define CAT_ORACLES_HPP

// Slow reference implementations used to cross-check the fast algorithms.

#include <cstddef>
#include <span>
#include <vector>

#include "cat/arborescence.hpp"
#include "cat/graph.hpp"

namespace cat::oracle {

struct RankedTrees {
    std::vector<DirectedTree> trees;
    std::vector<double> scores;
};

// Every feasible tree (satisfying r when given) sorted by score; stable on ties.
RankedTrees rank_trees(const WeightMatrix& w, std::span<const DirectedTree> all, const Substructure* r = nullptr);

// All labelled DAGs on p nodes (p <= 4 keeps this small).
std::vector<Dag> all_dags(std::size_t p);

// Simple undirected paths from x to y in the skeleton, as node sequences.
std::vector<std::vector<Node>> simple_paths(const Dag& g, Node x, Node y);

// A path is blocked when it has a non-collider in z or a collider with no
// descendant-or-self in z.
bool path_blocked(const Dag& g, std::span<const Node> path, std::span<const Node> z);

bool d_separated_by_paths(const Dag& g, Node x, Node y, std::span<const Node> z);

// Adjustment criterion checked path by path: no member of z lies on or below a
// non-initial node of a directed x -> y path, and every other path is blocked.
bool valid_adjustment(const Dag& g, Node x, Node y, std::span<const Node> z);

std::size_t sid_by_adjustment(const Dag& truth, const Dag& est);

std::size_t shd_by_adjacency(const Dag& a, const Dag& b);

}  // namespace cat::oracle

#endif  // CAT_ORACLES_HPP
