#include "cat/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "cat/error.hpp"

namespace cat::oracle {

namespace {

bool adjacent(const Dag& g, Node a, Node b) {
    return g.has_edge(a, b) || g.has_edge(b, a);
}

void extend_paths(const Dag& g, Node y, std::vector<Node>& path, std::vector<bool>& on_path,
                  std::vector<std::vector<Node>>& out) {
    const Node v = path.back();
    if (v == y) {
        out.push_back(path);
        return;
    }
    for (std::size_t u = 0; u < g.size(); ++u) {
        const auto w = static_cast<Node>(u);
        if (on_path[u] || !adjacent(g, v, w)) continue;
        on_path[u] = true;
        path.push_back(w);
        extend_paths(g, y, path, on_path, out);
        path.pop_back();
        on_path[u] = false;
    }
}

bool contains(std::span<const Node> z, Node v) {
    return std::find(z.begin(), z.end(), v) != z.end();
}

bool directed(const Dag& g, std::span<const Node> path) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        if (!g.has_edge(path[k], path[k + 1])) return false;
    }
    return true;
}

}  // namespace

RankedTrees rank_trees(const WeightMatrix& w, std::span<const DirectedTree> all, const Substructure* r) {
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t k = 0; k < all.size(); ++k) {
        const DirectedTree& t = all[k];
        if (r && !r->satisfied_by(t)) continue;
        double s = 0.0;
        bool ok = true;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const Node parent = t.parents()[i];
            if (parent == DirectedTree::kNoParent) continue;
            if (w.forbidden(parent, static_cast<Node>(i))) {
                ok = false;
                break;
            }
            s += w(parent, static_cast<Node>(i));
        }
        if (ok) order.emplace_back(s, k);
    }
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    RankedTrees out;
    for (const auto& [s, k] : order) {
        out.trees.push_back(all[k]);
        out.scores.push_back(s);
    }
    return out;
}

std::vector<Dag> all_dags(std::size_t p) {
    std::vector<std::pair<Node, Node>> pairs;
    for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = a + 1; b < p; ++b) pairs.emplace_back(static_cast<Node>(a), static_cast<Node>(b));
    }
    std::size_t total = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;
    std::vector<Dag> out;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<Edge> edges;
        std::size_t c = code;
        for (const auto& [a, b] : pairs) {
            const std::size_t state = c % 3;
            c /= 3;
            if (state == 1) edges.push_back({a, b});
            if (state == 2) edges.push_back({b, a});
        }
        try {
            out.emplace_back(p, edges);
        } catch (const CycleError&) {
        }
    }
    return out;
}

std::vector<std::vector<Node>> simple_paths(const Dag& g, Node x, Node y) {
    std::vector<std::vector<Node>> out;
    std::vector<Node> path{x};
    std::vector<bool> on_path(g.size(), false);
    on_path[x] = true;
    extend_paths(g, y, path, on_path, out);
    return out;
}

bool path_blocked(const Dag& g, std::span<const Node> path, std::span<const Node> z) {
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
        const Node v = path[k];
        const bool collider = g.has_edge(path[k - 1], v) && g.has_edge(path[k + 1], v);
        if (!collider) {
            if (contains(z, v)) return true;
            continue;
        }
        bool opened = contains(z, v);
        for (Node d : descendants(g, v)) opened = opened || contains(z, d);
        if (!opened) return true;
    }
    return false;
}

bool d_separated_by_paths(const Dag& g, Node x, Node y, std::span<const Node> z) {
    for (const auto& path : simple_paths(g, x, y)) {
        if (!path_blocked(g, path, z)) return false;
    }
    return true;
}

bool valid_adjustment(const Dag& g, Node x, Node y, std::span<const Node> z) {
    const auto paths = simple_paths(g, x, y);
    std::vector<bool> forbidden(g.size(), false);
    for (const auto& path : paths) {
        if (!directed(g, path)) continue;
        for (std::size_t k = 1; k < path.size(); ++k) {
            forbidden[path[k]] = true;
            for (Node d : descendants(g, path[k])) forbidden[d] = true;
        }
    }
    for (Node v : z) {
        if (v == x || forbidden[v]) return false;
    }
    for (const auto& path : paths) {
        if (directed(g, path)) continue;
        if (!path_blocked(g, path, z)) return false;
    }
    return true;
}

std::size_t sid_by_adjustment(const Dag& truth, const Dag& est) {
    if (truth.size() != est.size()) throw DimensionMismatchError("graphs differ in size");
    std::size_t errors = 0;
    for (std::size_t a = 0; a < truth.size(); ++a) {
        const auto i = static_cast<Node>(a);
        const std::vector<Node>& z = est.parents(i);
        const std::vector<Node> below = descendants(truth, i);
        for (std::size_t b = 0; b < truth.size(); ++b) {
            const auto j = static_cast<Node>(b);
            if (i == j) continue;
            if (contains(z, j)) {
                // the estimate implies no effect of i on j
                errors += std::find(below.begin(), below.end(), j) != below.end();
            } else {
                errors += !valid_adjustment(truth, i, j, z);
            }
        }
    }
    return errors;
}

std::size_t shd_by_adjacency(const Dag& a, const Dag& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("graphs differ in size");
    std::size_t d = 0;
    for (std::size_t u = 0; u < a.size(); ++u) {
        for (std::size_t v = u + 1; v < a.size(); ++v) {
            const auto x = static_cast<Node>(u), y = static_cast<Node>(v);
            d += a.has_edge(x, y) != b.has_edge(x, y) || a.has_edge(y, x) != b.has_edge(y, x);
        }
    }
    return d;
}

}  // namespace cat::oracle
