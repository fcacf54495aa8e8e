#include "cat/metrics.hpp"

#include <algorithm>
#include <vector>

#include "cat/error.hpp"

namespace cat {

namespace {

void same_size(const Dag& a, const Dag& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("graphs have different node counts");
}

std::vector<std::vector<bool>> reachability(const Dag& g) {
    const std::size_t p = g.size();
    std::vector<std::vector<bool>> reach(p, std::vector<bool>(p, false));
    const auto order = g.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        for (Node c : g.children(*it)) {
            const auto cc = static_cast<std::size_t>(c);
            reach[v][cc] = true;
            for (std::size_t w = 0; w < p; ++w) {
                if (reach[cc][w]) reach[v][w] = true;
            }
        }
    }
    return reach;
}

AncestorMetrics ancestor_scores(const std::vector<std::vector<bool>>& truth, const std::vector<std::vector<bool>>& pred) {
    std::size_t hits = 0, predicted = 0, actual = 0;
    for (std::size_t a = 0; a < truth.size(); ++a) {
        for (std::size_t b = 0; b < truth.size(); ++b) {
            predicted += pred[a][b];
            actual += truth[a][b];
            hits += pred[a][b] && truth[a][b];
        }
    }
    const double tpr = predicted == 0 ? 1.0 : static_cast<double>(hits) / static_cast<double>(predicted);
    const double recall = actual == 0 ? 1.0 : static_cast<double>(hits) / static_cast<double>(actual);
    return {tpr, recall};
}

bool d_separated_masked(const Dag& g, const std::vector<std::vector<bool>>& removed, Node x, Node y,
                        std::span<const Node> z) {
    const std::size_t p = g.size();
    std::vector<bool> in_z(p, false);
    for (Node v : z) in_z[static_cast<std::size_t>(v)] = true;

    // ancestral set of {x, y} and z under the masked edge set
    std::vector<bool> keep(p, false);
    std::vector<Node> stack = {x, y};
    stack.insert(stack.end(), z.begin(), z.end());
    while (!stack.empty()) {
        const Node v = stack.back();
        stack.pop_back();
        if (keep[static_cast<std::size_t>(v)]) continue;
        keep[static_cast<std::size_t>(v)] = true;
        for (Node u : g.parents(v)) {
            if (!removed[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) stack.push_back(u);
        }
    }

    std::vector<std::vector<bool>> adj(p, std::vector<bool>(p, false));
    for (std::size_t v = 0; v < p; ++v) {
        if (!keep[v]) continue;
        std::vector<Node> pa;
        for (Node u : g.parents(static_cast<Node>(v))) {
            if (!removed[static_cast<std::size_t>(u)][v]) pa.push_back(u);
        }
        for (std::size_t a = 0; a < pa.size(); ++a) {
            const auto ua = static_cast<std::size_t>(pa[a]);
            adj[ua][v] = adj[v][ua] = true;
            for (std::size_t b = a + 1; b < pa.size(); ++b) {
                const auto ub = static_cast<std::size_t>(pa[b]);
                adj[ua][ub] = adj[ub][ua] = true;
            }
        }
    }

    std::vector<bool> seen(p, false);
    stack = {x};
    seen[static_cast<std::size_t>(x)] = true;
    while (!stack.empty()) {
        const auto v = static_cast<std::size_t>(stack.back());
        stack.pop_back();
        if (static_cast<Node>(v) == y) return false;
        for (std::size_t w = 0; w < p; ++w) {
            if (adj[v][w] && keep[w] && !in_z[w] && !seen[w]) {
                seen[w] = true;
                stack.push_back(static_cast<Node>(w));
            }
        }
    }
    return true;
}

}  // namespace

std::size_t shd(const Dag& truth, const Dag& est) {
    same_size(truth, est);
    std::size_t count = 0;
    for (std::size_t a = 0; a < truth.size(); ++a) {
        for (std::size_t b = a + 1; b < truth.size(); ++b) {
            const auto u = static_cast<Node>(a), v = static_cast<Node>(b);
            if (truth.has_edge(u, v) != est.has_edge(u, v) || truth.has_edge(v, u) != est.has_edge(v, u)) ++count;
        }
    }
    return count;
}

bool d_separated(const Dag& g, Node x, Node y, std::span<const Node> z) {
    const std::size_t p = g.size();
    auto valid = [p](Node v) { return v >= 0 && static_cast<std::size_t>(v) < p; };
    if (!valid(x) || !valid(y) || x == y) throw InvalidArgument("d-separation needs two distinct valid nodes");
    for (Node v : z) {
        if (!valid(v) || v == x || v == y) throw InvalidArgument("conditioning set must exclude x and y");
    }
    const std::vector<std::vector<bool>> none(p, std::vector<bool>(p, false));
    return d_separated_masked(g, none, x, y, z);
}

std::size_t sid(const Dag& truth, const Dag& est) {
    same_size(truth, est);
    const std::size_t p = truth.size();
    const auto reach = reachability(truth);
    std::size_t errors = 0;
    for (std::size_t i = 0; i < p; ++i) {
        const auto ni = static_cast<Node>(i);
        const std::vector<Node>& z = est.parents(ni);
        for (std::size_t j = 0; j < p; ++j) {
            if (j == i) continue;
            const auto nj = static_cast<Node>(j);
            if (std::binary_search(z.begin(), z.end(), nj)) {
                if (reach[i][j]) ++errors;
                continue;
            }
            // nodes after i on directed i -> j paths
            std::vector<bool> on_path(p, false);
            for (std::size_t w = 0; w < p; ++w) on_path[w] = reach[i][w] && (w == j || reach[w][j]);
            bool valid = true;
            for (Node v : z) {
                const auto vv = static_cast<std::size_t>(v);
                for (std::size_t w = 0; w < p && valid; ++w) {
                    if (on_path[w] && (w == vv || reach[w][vv])) valid = false;
                }
            }
            if (valid) {
                std::vector<std::vector<bool>> removed(p, std::vector<bool>(p, false));
                for (Node c : truth.children(ni)) {
                    if (on_path[static_cast<std::size_t>(c)]) removed[i][static_cast<std::size_t>(c)] = true;
                }
                valid = d_separated_masked(truth, removed, ni, nj, z);
            }
            if (!valid) ++errors;
        }
    }
    return errors;
}

AncestorMetrics ancestor_metrics(const Dag& truth, const Dag& est) {
    same_size(truth, est);
    return ancestor_scores(reachability(truth), reachability(est));
}

AncestorMetrics ancestor_metrics(const Dag& truth, const DirectedTree& est) {
    return ancestor_metrics(truth, Dag::from_tree(est));
}

MetricReport compare(const Dag& truth, const Dag& est) {
    const AncestorMetrics a = ancestor_metrics(truth, est);
    return {shd(truth, est), sid(truth, est), a.tpr, a.recall};
}

}  // namespace cat
