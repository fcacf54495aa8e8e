#ifndef CAT_GRAPH_HPP
#define CAT_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace cat {

// Nodes are 0-indexed everywhere inside the library; the file formats in io.hpp
// shift to 1-indexed labels.
using Node = int;

struct Edge {
    Node from;
    Node to;

    auto operator<=>(const Edge&) const = default;
};

/// Rooted spanning tree on p labelled nodes, stored as a parent array.
///
/// Instances can only be obtained through `validate_tree` (or the tree
/// enumerator), so every DirectedTree satisfies: exactly one root, every other
/// node has exactly one parent, and every node is reachable from the root.
class DirectedTree {
public:
    static constexpr Node kNoParent = -1;

    DirectedTree() = default;

    std::size_t size() const { return m_parent.size(); }
    Node root() const { return m_root; }
    Node parent(Node i) const;
    std::span<const Node> parents() const { return m_parent; }
    bool has_edge(Node from, Node to) const;

    // p-1 edges sorted lexicographically on (from, to)
    std::vector<Edge> edges() const;
    std::vector<std::vector<Node>> children() const;

    bool operator==(const DirectedTree&) const = default;

private:
    friend DirectedTree validate_tree(std::size_t p, std::span<const Edge> edges);
    friend DirectedTree tree_from_parents(std::vector<Node> parent);
    friend void for_each_tree(std::size_t p, const std::function<void(const DirectedTree&)>& visit);

    DirectedTree(std::vector<Node> parent, Node root) : m_parent(std::move(parent)), m_root(root) {}

    std::vector<Node> m_parent;
    Node m_root = kNoParent;
};

// Throws CycleError, MultipleParentsError, MultipleRootsError (a
// DisconnectedError) or InvalidArgument for out-of-range endpoints and self-loops.
DirectedTree validate_tree(std::size_t p, std::span<const Edge> edges);
DirectedTree validate_tree(std::size_t p, std::initializer_list<Edge> edges);
// parent[i] == DirectedTree::kNoParent marks the root
DirectedTree tree_from_parents(std::vector<Node> parent);

/// Directed acyclic graph with a sorted, duplicate-free edge list.
class Dag {
public:
    Dag() = default;
    // Throws CycleError on a directed cycle, InvalidArgument on self-loops or bad indices.
    Dag(std::size_t p, std::vector<Edge> edges);
    static Dag from_tree(const DirectedTree& tree);

    std::size_t size() const { return m_p; }
    const std::vector<Edge>& edges() const { return m_edges; }
    bool has_edge(Node from, Node to) const;
    const std::vector<Node>& parents(Node i) const;
    const std::vector<Node>& children(Node i) const;
    std::vector<Node> topological_order() const;

    bool operator==(const Dag& other) const { return m_p == other.m_p && m_edges == other.m_edges; }

private:
    std::size_t m_p = 0;
    std::vector<Edge> m_edges;
    std::vector<std::vector<Node>> m_parents;
    std::vector<std::vector<Node>> m_children;
};

/// Constraint set (required edges, forbidden edges, optional root) used for
/// constrained arborescence search and substructure tests.
struct Substructure {
    std::vector<Edge> required;
    std::vector<Edge> forbidden;
    std::optional<Node> root;

    // Throws InvalidSubstructureError when a required edge is also forbidden,
    // two required edges share a head, a required edge points into the root,
    // or any edge is a self-loop.
    static Substructure make(std::vector<Edge> required, std::vector<Edge> forbidden = {},
                             std::optional<Node> root = std::nullopt);

    bool empty() const { return required.empty() && forbidden.empty() && !root; }
    // every index must lie in [0, p)
    void check_nodes(std::size_t p) const;
    bool satisfied_by(const DirectedTree& tree) const;
};

// sorted node lists, the query node excluded
std::vector<Node> ancestors(const DirectedTree& tree, Node i);
std::vector<Node> descendants(const DirectedTree& tree, Node i);
std::vector<Node> ancestors(const Dag& dag, Node i);
std::vector<Node> descendants(const Dag& dag, Node i);

// Directed trees have no v-structures, so equivalence is skeleton equality.
bool is_markov_equivalent(const DirectedTree& a, const DirectedTree& b);

// Path c_1 -> ... -> c_r in `a` from root(a) to root(b); exactly these edges
// are reversed in `b` and every other edge is shared.
std::vector<Node> reversed_path(const DirectedTree& a, const DirectedTree& b);

// Reverse the edges of `path` inside `tree` (path must be a directed path in tree).
DirectedTree reverse_path(const DirectedTree& tree, std::span<const Node> path);

constexpr std::size_t kMaxEnumerationNodes = 8;

// Visits all p^(p-1) labelled directed spanning trees, grouped by root.
void for_each_tree(std::size_t p, const std::function<void(const DirectedTree&)>& visit);
std::vector<DirectedTree> enumerate_trees(std::size_t p);

}  // namespace cat

#endif  // CAT_GRAPH_HPP
