#include "cat/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cat/error.hpp"

namespace cat {

namespace {

void check_node(std::size_t p, Node i) {
    if (i < 0 || static_cast<std::size_t>(i) >= p) {
        throw InvalidArgument("node index " + std::to_string(i) + " out of range for p=" + std::to_string(p));
    }
}

// Follows parent pointers from every node; returns true if some walk revisits a node.
bool has_parent_cycle(std::span<const Node> parent) {
    const std::size_t p = parent.size();
    // 0 = unvisited, 1 = on the current walk, 2 = known to reach a root
    std::vector<char> state(p, 0);
    std::vector<Node> walk;
    for (std::size_t start = 0; start < p; ++start) {
        walk.clear();
        Node v = static_cast<Node>(start);
        while (v != DirectedTree::kNoParent && state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = parent[v];
        }
        if (v != DirectedTree::kNoParent && state[v] == 1) return true;
        for (Node u : walk) state[u] = 2;
    }
    return false;
}

std::vector<std::pair<Node, Node>> skeleton(const DirectedTree& t) {
    std::vector<std::pair<Node, Node>> out;
    for (const Edge& e : t.edges()) out.emplace_back(std::min(e.from, e.to), std::max(e.from, e.to));
    std::sort(out.begin(), out.end());
    return out;
}

template <typename Neighbours>
std::vector<Node> reach(std::size_t p, Node start, Neighbours next) {
    std::vector<char> seen(p, 0);
    std::vector<Node> stack = {start};
    std::vector<Node> out;
    while (!stack.empty()) {
        const Node v = stack.back();
        stack.pop_back();
        for (Node u : next(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                out.push_back(u);
                stack.push_back(u);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Node DirectedTree::parent(Node i) const {
    check_node(size(), i);
    return m_parent[i];
}

bool DirectedTree::has_edge(Node from, Node to) const {
    check_node(size(), from);
    check_node(size(), to);
    return m_parent[to] == from;
}

std::vector<Edge> DirectedTree::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (m_parent[i] != kNoParent) out.push_back({m_parent[i], static_cast<Node>(i)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Node>> DirectedTree::children() const {
    std::vector<std::vector<Node>> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (m_parent[i] != kNoParent) out[m_parent[i]].push_back(static_cast<Node>(i));
    }
    return out;
}

DirectedTree validate_tree(std::size_t p, std::span<const Edge> edges) {
    if (p == 0) throw InvalidArgument("a tree needs at least one node");
    std::vector<Node> parent(p, DirectedTree::kNoParent);
    for (const Edge& e : edges) {
        check_node(p, e.from);
        check_node(p, e.to);
        if (e.from == e.to) throw InvalidArgument("self-loop on node " + std::to_string(e.from));
        if (parent[e.to] != DirectedTree::kNoParent) {
            throw MultipleParentsError("node " + std::to_string(e.to) + " has more than one parent");
        }
        parent[e.to] = e.from;
    }
    if (has_parent_cycle(parent)) throw CycleError("edge set contains a directed cycle");
    Node root = DirectedTree::kNoParent;
    std::size_t roots = 0;
    for (std::size_t i = 0; i < p; ++i) {
        if (parent[i] == DirectedTree::kNoParent) {
            ++roots;
            if (root == DirectedTree::kNoParent) root = static_cast<Node>(i);
        }
    }
    // unique parents plus no cycle leave at least one root
    if (roots > 1) throw MultipleRootsError(std::to_string(roots) + " nodes without parent; graph is not connected");
    return DirectedTree(std::move(parent), root);
}

DirectedTree validate_tree(std::size_t p, std::initializer_list<Edge> edges) {
    return validate_tree(p, std::span<const Edge>(edges.begin(), edges.size()));
}

DirectedTree tree_from_parents(std::vector<Node> parent) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parent.size(); ++i) {
        if (parent[i] != DirectedTree::kNoParent) edges.push_back({parent[i], static_cast<Node>(i)});
    }
    return validate_tree(parent.size(), edges);
}

Dag::Dag(std::size_t p, std::vector<Edge> edges) : m_p(p), m_parents(p), m_children(p) {
    for (const Edge& e : edges) {
        check_node(p, e.from);
        check_node(p, e.to);
        if (e.from == e.to) throw InvalidArgument("self-loop on node " + std::to_string(e.from));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    m_edges = std::move(edges);
    for (const Edge& e : m_edges) {
        m_parents[e.to].push_back(e.from);
        m_children[e.from].push_back(e.to);
    }
    if (topological_order().size() != p) throw CycleError("graph contains a directed cycle");
}

Dag Dag::from_tree(const DirectedTree& tree) {
    return Dag(tree.size(), tree.edges());
}

bool Dag::has_edge(Node from, Node to) const {
    return std::binary_search(m_edges.begin(), m_edges.end(), Edge{from, to});
}

const std::vector<Node>& Dag::parents(Node i) const {
    check_node(m_p, i);
    return m_parents[i];
}

const std::vector<Node>& Dag::children(Node i) const {
    check_node(m_p, i);
    return m_children[i];
}

std::vector<Node> Dag::topological_order() const {
    // Kahn's algorithm; smallest available index first
    std::vector<std::size_t> indegree(m_p);
    for (std::size_t i = 0; i < m_p; ++i) indegree[i] = m_parents[i].size();
    std::set<Node> ready;
    for (std::size_t i = 0; i < m_p; ++i) {
        if (indegree[i] == 0) ready.insert(static_cast<Node>(i));
    }
    std::vector<Node> order;
    order.reserve(m_p);
    while (!ready.empty()) {
        const Node v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (Node c : m_children[v]) {
            if (--indegree[c] == 0) ready.insert(c);
        }
    }
    return order;
}

Substructure Substructure::make(std::vector<Edge> required, std::vector<Edge> forbidden, std::optional<Node> root) {
    auto normalise = [](std::vector<Edge>& edges) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    };
    normalise(required);
    normalise(forbidden);
    for (const auto* list : {&required, &forbidden}) {
        for (const Edge& e : *list) {
            if (e.from == e.to) throw InvalidSubstructureError("self-loop in constraint");
        }
    }
    for (const Edge& e : required) {
        if (std::binary_search(forbidden.begin(), forbidden.end(), e)) {
            throw InvalidSubstructureError("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                                           " is both required and forbidden");
        }
        if (root && e.to == *root) throw InvalidSubstructureError("required edge points into the declared root");
    }
    for (std::size_t a = 0; a < required.size(); ++a) {
        for (std::size_t b = a + 1; b < required.size(); ++b) {
            if (required[a].to == required[b].to) {
                throw InvalidSubstructureError("two required edges share head " + std::to_string(required[a].to));
            }
        }
    }
    return Substructure{std::move(required), std::move(forbidden), root};
}

void Substructure::check_nodes(std::size_t p) const {
    for (const auto* list : {&required, &forbidden}) {
        for (const Edge& e : *list) {
            check_node(p, e.from);
            check_node(p, e.to);
        }
    }
    if (root) check_node(p, *root);
}

bool Substructure::satisfied_by(const DirectedTree& tree) const {
    for (const Edge& e : required) {
        if (!tree.has_edge(e.from, e.to)) return false;
    }
    for (const Edge& e : forbidden) {
        if (tree.has_edge(e.from, e.to)) return false;
    }
    return !root || tree.root() == *root;
}

std::vector<Node> ancestors(const DirectedTree& tree, Node i) {
    check_node(tree.size(), i);
    std::vector<Node> out;
    for (Node v = tree.parent(i); v != DirectedTree::kNoParent; v = tree.parent(v)) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Node> descendants(const DirectedTree& tree, Node i) {
    check_node(tree.size(), i);
    const auto children = tree.children();
    return reach(tree.size(), i, [&](Node v) -> const std::vector<Node>& { return children[v]; });
}

std::vector<Node> ancestors(const Dag& dag, Node i) {
    check_node(dag.size(), i);
    return reach(dag.size(), i, [&](Node v) -> const std::vector<Node>& { return dag.parents(v); });
}

std::vector<Node> descendants(const Dag& dag, Node i) {
    check_node(dag.size(), i);
    return reach(dag.size(), i, [&](Node v) -> const std::vector<Node>& { return dag.children(v); });
}

bool is_markov_equivalent(const DirectedTree& a, const DirectedTree& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("trees have different node counts");
    return skeleton(a) == skeleton(b);
}

std::vector<Node> reversed_path(const DirectedTree& a, const DirectedTree& b) {
    if (!is_markov_equivalent(a, b)) throw NotEquivalentError("trees do not share a skeleton");
    if (a == b) throw EqualTreesError("trees are identical");
    std::vector<Node> path;
    for (Node v = b.root(); v != DirectedTree::kNoParent; v = a.parent(v)) path.push_back(v);
    std::reverse(path.begin(), path.end());
    // path runs root(a) -> ... -> root(b); check that it accounts for every difference
    if (reverse_path(a, path) != b) throw NotEquivalentError("trees differ by more than one reversed path");
    return path;
}

DirectedTree reverse_path(const DirectedTree& tree, std::span<const Node> path) {
    std::vector<Node> parent(tree.parents().begin(), tree.parents().end());
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        if (!tree.has_edge(path[k], path[k + 1])) throw InvalidArgument("path is not a directed path of the tree");
    }
    if (path.size() < 2) return tree;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) parent[path[k]] = path[k + 1];
    parent[path.back()] = DirectedTree::kNoParent;
    return tree_from_parents(std::move(parent));
}

void for_each_tree(std::size_t p, const std::function<void(const DirectedTree&)>& visit) {
    if (p == 0) throw InvalidArgument("p must be at least 1");
    if (p > kMaxEnumerationNodes) {
        throw InvalidArgument("tree enumeration is limited to p <= " + std::to_string(kMaxEnumerationNodes));
    }
    const Node np = static_cast<Node>(p);
    std::vector<Node> parent(p);
    for (Node root = 0; root < np; ++root) {
        // odometer over parent choices of the non-root nodes; each digit skips itself
        std::vector<Node> others;
        for (Node v = 0; v < np; ++v) {
            if (v != root) others.push_back(v);
        }
        std::fill(parent.begin(), parent.end(), 0);
        parent[root] = DirectedTree::kNoParent;
        for (Node v : others) parent[v] = (v == 0) ? 1 : 0;
        if (p == 1) {
            visit(DirectedTree(parent, root));
            continue;
        }
        while (true) {
            if (!has_parent_cycle(parent)) visit(DirectedTree(parent, root));
            std::size_t digit = 0;
            for (; digit < others.size(); ++digit) {
                const Node v = others[digit];
                Node next = parent[v] + 1;
                if (next == v) ++next;
                if (next < np) {
                    parent[v] = next;
                    break;
                }
                parent[v] = (v == 0) ? 1 : 0;
            }
            if (digit == others.size()) break;
        }
    }
}

std::vector<DirectedTree> enumerate_trees(std::size_t p) {
    std::vector<DirectedTree> out;
    for_each_tree(p, [&](const DirectedTree& t) { out.push_back(t); });
    return out;
}

}  // namespace cat
