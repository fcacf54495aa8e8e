#include "cat/arborescence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cat/error.hpp"

namespace cat {

namespace {

constexpr double kInf = WeightMatrix::kForbidden;

bool present(double c) {
    return c != kInf;
}

Arborescence finish(const WeightMatrix& w, std::vector<Node> parent) {
    DirectedTree tree = tree_from_parents(std::move(parent));
    const double score = tree_score(w, tree);
    return {std::move(tree), score};
}

}  // namespace

WeightMatrix::WeightMatrix(std::size_t p, double fill) : m_p(p), m_w(p * p, fill) {
    if (p < 2) throw InvalidArgument("a weight matrix needs p >= 2");
    if (!std::isfinite(fill)) throw NonFiniteInput("fill value must be finite");
    for (std::size_t i = 0; i < p; ++i) m_w[i * p + i] = kForbidden;
}

std::size_t WeightMatrix::index(Node from, Node to) const {
    if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= m_p || static_cast<std::size_t>(to) >= m_p) {
        throw InvalidArgument("edge " + std::to_string(from) + "->" + std::to_string(to) + " out of range");
    }
    return static_cast<std::size_t>(from) * m_p + static_cast<std::size_t>(to);
}

double WeightMatrix::operator()(Node from, Node to) const {
    return m_w[index(from, to)];
}

bool WeightMatrix::forbidden(Node from, Node to) const {
    return m_w[index(from, to)] == kForbidden;
}

void WeightMatrix::set(Node from, Node to, double value) {
    const std::size_t k = index(from, to);
    if (from == to) throw InvalidArgument("diagonal entries cannot be set");
    if (!std::isfinite(value)) throw NonFiniteInput("edge weight must be finite");
    m_w[k] = value;
}

void WeightMatrix::forbid(Node from, Node to) {
    m_w[index(from, to)] = kForbidden;
}

double tree_score(const WeightMatrix& w, const DirectedTree& t) {
    if (t.size() != w.size()) throw DimensionMismatchError("tree and weight matrix sizes differ");
    double score = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Node parent = t.parents()[i];
        if (parent == DirectedTree::kNoParent) continue;
        const double v = w(parent, static_cast<Node>(i));
        if (!present(v)) {
            throw ForbiddenEdgeInTree("tree uses forbidden edge " + std::to_string(parent) + "->" + std::to_string(i));
        }
        score += v;
    }
    return score;
}

namespace detail {

std::optional<std::vector<Node>> min_arborescence_rooted(const std::vector<double>& cost, std::size_t n, Node root) {
    // cheapest incoming edge per node; strict '<' keeps the lowest tail on ties
    std::vector<Node> in(n, DirectedTree::kNoParent);
    for (std::size_t v = 0; v < n; ++v) {
        if (static_cast<Node>(v) == root) continue;
        double best = kInf;
        for (std::size_t u = 0; u < n; ++u) {
            if (u == v) continue;
            const double c = cost[u * n + v];
            if (present(c) && c < best) {
                best = c;
                in[v] = static_cast<Node>(u);
            }
        }
        if (in[v] == DirectedTree::kNoParent) return std::nullopt;
    }

    // label cycles of the in-edge graph
    std::vector<int> cycle_of(n, -1);
    std::vector<int> visited_by(n, -1);
    int cycles = 0;
    for (std::size_t start = 0; start < n; ++start) {
        Node v = static_cast<Node>(start);
        while (v != DirectedTree::kNoParent && visited_by[v] == -1 && cycle_of[v] == -1) {
            visited_by[v] = static_cast<int>(start);
            v = in[v];
        }
        if (v != DirectedTree::kNoParent && visited_by[v] == static_cast<int>(start) && cycle_of[v] == -1) {
            for (Node u = v;; u = in[u]) {
                cycle_of[u] = cycles;
                if (in[u] == v) break;
            }
            ++cycles;
        }
    }
    if (cycles == 0) return in;

    // contract: every cycle becomes one node, every other node keeps its own
    std::vector<int> comp(n);
    int next = cycles;
    for (std::size_t v = 0; v < n; ++v) comp[v] = cycle_of[v] >= 0 ? cycle_of[v] : next++;
    const auto m = static_cast<std::size_t>(next);

    std::vector<double> reduced(m * m, kInf);
    std::vector<Edge> origin(m * m, Edge{-1, -1});
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v || comp[u] == comp[v]) continue;
            const double c = cost[u * n + v];
            if (!present(c)) continue;
            const double adjusted = cycle_of[v] >= 0 ? c - cost[static_cast<std::size_t>(in[v]) * n + v] : c;
            const std::size_t k = static_cast<std::size_t>(comp[u]) * m + static_cast<std::size_t>(comp[v]);
            if (adjusted < reduced[k]) {
                reduced[k] = adjusted;
                origin[k] = {static_cast<Node>(u), static_cast<Node>(v)};
            }
        }
    }

    const Node sub_root = comp[root];
    auto sub = min_arborescence_rooted(reduced, m, sub_root);
    if (!sub) return std::nullopt;

    std::vector<Node> parent = in;
    for (std::size_t b = 0; b < m; ++b) {
        if (static_cast<Node>(b) == sub_root) continue;
        const Edge e = origin[static_cast<std::size_t>((*sub)[b]) * m + b];
        parent[e.to] = e.from;
    }
    parent[root] = DirectedTree::kNoParent;
    return parent;
}

std::optional<Arborescence> solve_per_root(const WeightMatrix& w, const std::vector<bool>& allowed_roots) {
    const std::size_t p = w.size();
    std::optional<Arborescence> best;
    for (std::size_t r = 0; r < p; ++r) {
        if (!allowed_roots.empty() && !allowed_roots[r]) continue;
        auto parent = min_arborescence_rooted(w.data(), p, static_cast<Node>(r));
        if (!parent) continue;
        Arborescence candidate = finish(w, std::move(*parent));
        if (!best || candidate.score < best->score) best = std::move(candidate);
    }
    return best;
}

std::optional<Arborescence> solve_super_root(const WeightMatrix& w, const std::vector<bool>& allowed_roots) {
    const std::size_t p = w.size();
    const std::size_t n = p + 1;
    double largest = 0.0;
    for (double c : w.data()) {
        if (present(c)) largest = std::max(largest, std::abs(c));
    }
    const double big = 2.0 * static_cast<double>(p) * largest + 1.0;
    std::vector<double> cost(n * n, kInf);
    for (std::size_t u = 0; u < p; ++u) {
        for (std::size_t v = 0; v < p; ++v) cost[u * n + v] = w.data()[u * p + v];
        if (allowed_roots.empty() || allowed_roots[u]) cost[p * n + u] = big;
    }
    auto parent = min_arborescence_rooted(cost, n, static_cast<Node>(p));
    if (!parent) return std::nullopt;
    std::vector<Node> tree_parent(p);
    std::size_t roots = 0;
    for (std::size_t v = 0; v < p; ++v) {
        if ((*parent)[v] == static_cast<Node>(p)) {
            tree_parent[v] = DirectedTree::kNoParent;
            ++roots;
        } else {
            tree_parent[v] = (*parent)[v];
        }
    }
    if (roots != 1) return std::nullopt;
    return finish(w, std::move(tree_parent));
}

std::optional<Arborescence> solve_rooted_subset(const WeightMatrix& w, const std::vector<bool>& allowed_roots) {
    return w.size() <= kPerRootLimit ? solve_per_root(w, allowed_roots) : solve_super_root(w, allowed_roots);
}

}  // namespace detail

Arborescence solve(const WeightMatrix& w) {
    auto result = detail::solve_rooted_subset(w, {});
    if (!result) throw InfeasibleError("no spanning arborescence avoids the forbidden edges");
    return std::move(*result);
}

WeightMatrix apply_constraints(const WeightMatrix& w, const Substructure& r) {
    const std::size_t p = w.size();
    r.check_nodes(p);
    WeightMatrix out = w;
    for (const Edge& e : r.required) {
        for (std::size_t u = 0; u < p; ++u) {
            if (static_cast<Node>(u) != e.from && static_cast<Node>(u) != e.to) out.forbid(static_cast<Node>(u), e.to);
        }
    }
    if (r.root) {
        for (std::size_t u = 0; u < p; ++u) {
            if (static_cast<Node>(u) != *r.root) out.forbid(static_cast<Node>(u), *r.root);
        }
    }
    for (const Edge& e : r.forbidden) out.forbid(e.from, e.to);
    return out;
}

Arborescence solve_constrained(const WeightMatrix& w, const Substructure& r) {
    const WeightMatrix restricted = apply_constraints(w, r);
    // required heads cannot be the root
    std::vector<bool> allowed(w.size(), true);
    for (const Edge& e : r.required) {
        if (restricted.forbidden(e.from, e.to)) throw InfeasibleError("required edge is forbidden in the weight matrix");
        allowed[e.to] = false;
    }
    if (r.root) {
        std::fill(allowed.begin(), allowed.end(), false);
        allowed[*r.root] = true;
    }
    auto out = detail::solve_rooted_subset(restricted, allowed);
    if (!out) throw InfeasibleError("no spanning arborescence satisfies the constraints");
    out->score = tree_score(w, out->tree);
    return std::move(*out);
}

Arborescence second_best(const WeightMatrix& w) {
    const Arborescence best = solve(w);
    std::optional<Arborescence> runner_up;
    for (const Edge& e : best.tree.edges()) {
        WeightMatrix reduced = w;
        reduced.forbid(e.from, e.to);
        try {
            Arborescence candidate = solve(reduced);
            if (!runner_up || candidate.score < runner_up->score) runner_up = std::move(candidate);
        } catch (const InfeasibleError&) {
        }
    }
    if (!runner_up) throw InfeasibleError("no second spanning arborescence exists");
    return std::move(*runner_up);
}

}  // namespace cat
