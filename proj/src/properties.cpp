#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "cat/arborescence.hpp"
#include "cat/dataset.hpp"
#include "cat/entropy.hpp"
#include "cat/error.hpp"
#include "cat/experiments.hpp"
#include "cat/identifiability.hpp"
#include "cat/inference.hpp"
#include "cat/io.hpp"
#include "cat/learner.hpp"
#include "cat/metrics.hpp"
#include "cat/oracles.hpp"
#include "cat/regression.hpp"
#include "cat/rng.hpp"
#include "cat/scoring.hpp"
#include "cat/simgen.hpp"

namespace cat {

namespace {

constexpr std::size_t kCases = 100;

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

class Runner {
public:
    Runner(ExperimentResult& res, const ExperimentOptions& opts) : m_res(res), m_opts(opts) {}

    void run(const std::string& name, std::size_t cases, const std::function<bool(std::size_t, Rng&)>& body) {
        std::size_t failures = 0;
        std::string first;
        Rng base(m_opts.seed, splitmix64(fnv1a(name)));
        for (std::size_t c = 0; c < cases; ++c) {
            Rng rng = base.split(c);
            bool ok = false;
            try {
                ok = body(c, rng);
            } catch (const std::exception& e) {
                if (first.empty()) first = e.what();
            }
            if (!ok) {
                ++failures;
                if (first.empty()) first = "case " + std::to_string(c);
            }
        }
        m_res.table.add({name, std::to_string(cases), std::to_string(failures)});
        m_res.checks.push_back({name, failures == 0 && cases > 0, failures == 0 ? "" : first});
        if (m_opts.log) *m_opts.log << "property " << name << ": " << failures << " failures of " << cases << std::endl;
    }

    std::size_t cases(std::size_t fallback = kCases) const {
        return m_opts.replicates > 0 ? std::max(m_opts.replicates, fallback) : fallback;
    }

private:
    ExperimentResult& m_res;
    const ExperimentOptions& m_opts;
};

DirectedTree random_tree(std::size_t p, Rng& rng) {
    return generate_tree(p, rng.bernoulli(0.5) ? TreeType::type1 : TreeType::type2, rng);
}

WeightMatrix random_weights(std::size_t p, Rng& rng, double forbid_prob = 0.0) {
    WeightMatrix w(p);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < p; ++i) {
            if (i == j) continue;
            if (rng.bernoulli(forbid_prob)) w.forbid(static_cast<Node>(j), static_cast<Node>(i));
            else w.set(static_cast<Node>(j), static_cast<Node>(i), rng.uniform(-2.0, 1.0));
        }
    }
    return w;
}

WeightMatrix transform(const WeightMatrix& w, double scale, double shift) {
    WeightMatrix out = w;
    for (std::size_t j = 0; j < w.size(); ++j) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto a = static_cast<Node>(j), b = static_cast<Node>(i);
            if (i != j && !w.forbidden(a, b)) out.set(a, b, scale * w(a, b) + shift);
        }
    }
    return out;
}

WeightMatrix transposed(const WeightMatrix& w) {
    WeightMatrix out = w;
    for (std::size_t j = 0; j < w.size(); ++j) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i == j) continue;
            const auto a = static_cast<Node>(j), b = static_cast<Node>(i);
            if (w.forbidden(b, a)) out.forbid(a, b);
            else out.set(a, b, w(b, a));
        }
    }
    return out;
}

std::vector<std::pair<Node, Node>> skeleton(const DirectedTree& t) {
    std::vector<std::pair<Node, Node>> s;
    for (const Edge& e : t.edges()) s.emplace_back(std::min(e.from, e.to), std::max(e.from, e.to));
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<double> normals(std::size_t n, Rng& rng) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.normal();
    return v;
}

// Small nonlinear additive-noise data on a random tree.
Dataset small_data(std::size_t p, std::size_t n, Rng& rng) {
    SimConfig cfg;
    cfg.p = p;
    cfg.n = n;
    cfg.tree_type = rng.bernoulli(0.5) ? TreeType::type1 : TreeType::type2;
    cfg.seed = rng.next_u64();
    return simulate(cfg).data;
}

bool near(double a, double b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

Substructure random_constraints(std::size_t p, Rng& rng) {
    for (;;) {
        std::vector<Edge> req, forb;
        const auto pick = [&] {
            const auto a = static_cast<Node>(rng.uniform_index(p));
            auto b = static_cast<Node>(rng.uniform_index(p - 1));
            if (b >= a) ++b;
            return Edge{a, b};
        };
        const auto nr = rng.uniform_index(3), nf = rng.uniform_index(3);
        for (std::uint64_t k = 0; k < nr; ++k) req.push_back(pick());
        for (std::uint64_t k = 0; k < nf; ++k) forb.push_back(pick());
        std::optional<Node> root;
        if (rng.bernoulli(0.3)) root = static_cast<Node>(rng.uniform_index(p));
        try {
            return Substructure::make(req, forb, root);
        } catch (const InvalidSubstructureError&) {
        }
    }
}

double constrained_score(const WeightMatrix& w, const Substructure& r) {
    try {
        return solve_constrained(w, r).score;
    } catch (const InfeasibleError&) {
        return std::numeric_limits<double>::infinity();
    }
}

void graph_properties(Runner& run) {
    run.run("enumeration size p^(p-1)", 6, [](std::size_t c, Rng&) {
        const std::size_t p = c + 1;
        return enumerate_trees(p).size() == static_cast<std::size_t>(std::pow(p, p - 1) + 0.5);
    });
    run.run("validate_tree round-trip", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t p = 2 + c % 5;
        const auto all = enumerate_trees(p);
        const DirectedTree& t = all[rng.uniform_index(all.size())];
        const auto edges = t.edges();
        return validate_tree(p, edges) == t;
    });
    run.run("reversed path round-trip", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t p = 2 + c % 9;
        const DirectedTree a = random_tree(p, rng);
        auto target = static_cast<Node>(rng.uniform_index(p - 1));
        if (target >= a.root()) ++target;
        std::vector<Node> path{target};
        while (path.back() != a.root()) path.push_back(a.parent(path.back()));
        std::reverse(path.begin(), path.end());
        const DirectedTree b = reverse_path(a, path);
        const auto found = reversed_path(a, b);
        return b.root() == target && found == path && reverse_path(a, found).edges() == b.edges() &&
               is_markov_equivalent(a, b);
    });
    run.run("ancestors transitively closed", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t p = 2 + c % 9;
        const DirectedTree t = random_tree(p, rng);
        const Dag g = extend_to_dag(t, 0.2, rng);
        for (std::size_t i = 0; i < p; ++i) {
            const auto ai = ancestors(g, static_cast<Node>(i));
            const auto ti = ancestors(t, static_cast<Node>(i));
            for (Node j : ai) {
                for (Node k : ancestors(g, j)) {
                    if (!std::binary_search(ai.begin(), ai.end(), k)) return false;
                }
            }
            for (Node j : ti) {
                for (Node k : ancestors(t, j)) {
                    if (!std::binary_search(ti.begin(), ti.end(), k)) return false;
                }
            }
        }
        return true;
    });
}

void arborescence_properties(Runner& run) {
    run.run("solve matches exhaustive minimum", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t p = 2 + c % 5;
        const WeightMatrix w = random_weights(p, rng, c % 3 == 0 ? 0.2 : 0.0);
        const auto ranked = oracle::rank_trees(w, enumerate_trees(p));
        try {
            const double s = solve(w).score;
            return !ranked.scores.empty() && std::abs(s - ranked.scores[0]) < 1e-12 * std::max(1.0, std::abs(s));
        } catch (const InfeasibleError&) {
            return ranked.scores.empty();
        }
    });
    run.run("shift invariance of argmin", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t p = 2 + c % 11;
        const WeightMatrix w = random_weights(p, rng);
        const double shift = rng.uniform(-5.0, 5.0);
        const Arborescence a = solve(w), b = solve(transform(w, 1.0, shift));
        return a.tree.edges() == b.tree.edges() && near(b.score, a.score + (p - 1) * shift, 1e-12);
    });
    run.run("scale invariance of argmin", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t p = 2 + c % 11;
        const WeightMatrix w = random_weights(p, rng);
        const double scale = std::exp(rng.uniform(-3.0, 3.0));
        return solve(w).tree.edges() == solve(transform(w, scale, 0.0)).tree.edges();
    });
    run.run("second best at least the optimum", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t p = 3 + c % 4;
        const WeightMatrix w = random_weights(p, rng);
        const Arborescence a = solve(w), b = second_best(w);
        const auto ranked = oracle::rank_trees(w, enumerate_trees(p));
        const bool tie = ranked.scores.size() > 1 && ranked.scores[1] == ranked.scores[0];
        return b.tree != a.tree && b.score >= a.score && (b.score > a.score || tie);
    });
    run.run("constrained at least the optimum", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t p = 3 + c % 8;
        const WeightMatrix w = random_weights(p, rng);
        const Substructure r = random_constraints(p, rng);
        const double s = constrained_score(w, r);
        return s >= solve(w).score;
    });
}

void regression_properties(Runner& run) {
    run.run("kernel predictions stay in the range of y", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t n = c % 10 == 0 ? 2500 : 5 + rng.uniform_index(300);
        std::vector<double> x = normals(n, rng), y(n);
        for (std::size_t k = 0; k < n; ++k) y[k] = std::sin(2.0 * x[k]) + 0.3 * rng.normal();
        const Predictor f = fit(x, y, {});
        const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
        for (int q = 0; q < 200; ++q) {
            const double v = f(rng.uniform(-5.0, 5.0));
            if (v < *lo || v > *hi) return false;
        }
        return true;
    });
    run.run("fit ignores pair order", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t n = c % 10 == 0 ? 2500 : 5 + rng.uniform_index(300);
        std::vector<double> x = normals(n, rng), y(n);
        for (std::size_t k = 0; k < n; ++k) y[k] = x[k] * x[k] + rng.normal();
        const auto perm = random_permutation(n, rng);
        std::vector<double> xp(n), yp(n);
        for (std::size_t k = 0; k < n; ++k) {
            xp[k] = x[perm[k]];
            yp[k] = y[perm[k]];
        }
        RegressionConfig cfg;
        cfg.method = c % 2 ? RegressionMethod::local_linear : RegressionMethod::kernel;
        const Predictor a = fit(x, y, cfg), b = fit(xp, yp, cfg);
        return a.predict(x) == b.predict(x);
    });
    run.run("translation equivariance in y", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t n = c % 10 == 0 ? 2500 : 5 + rng.uniform_index(300);
        std::vector<double> x = normals(n, rng), y(n), shifted(n);
        const double shift = rng.uniform(-10.0, 10.0);
        for (std::size_t k = 0; k < n; ++k) {
            y[k] = std::tanh(x[k]) + 0.5 * rng.normal();
            shifted[k] = y[k] + shift;
        }
        RegressionConfig cfg;
        cfg.method = c % 2 ? RegressionMethod::local_linear : RegressionMethod::kernel;
        const Predictor a = fit(x, y, cfg), b = fit(x, shifted, cfg);
        for (int q = 0; q < 100; ++q) {
            const double t = rng.uniform(-4.0, 4.0);
            if (!near(b(t), a(t) + shift, 1e-9)) return false;
        }
        return true;
    });
}

void entropy_properties(Runner& run) {
    run.run("entropy translation invariance", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t n = 20 + rng.uniform_index(600);
        const std::size_t d = 1 + c % 3;
        std::vector<std::vector<double>> cols(d), moved(d);
        const double shift = rng.uniform(-100.0, 100.0);
        for (std::size_t k = 0; k < d; ++k) {
            cols[k] = normals(n, rng);
            moved[k] = cols[k];
            for (double& v : moved[k]) v += shift;
        }
        const auto pack = [&](const std::vector<std::vector<double>>& cs) {
            Samples s{n, d, std::vector<double>(n * d)};
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t k = 0; k < d; ++k) s.values[r * d + k] = cs[k][r];
            return s;
        };
        return near(knn_entropy(pack(cols)), knn_entropy(pack(moved)), 1e-9);
    });
    run.run("entropy scale rule", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t n = 20 + rng.uniform_index(600);
        const std::size_t d = 1 + c % 3;
        const double a = std::exp(rng.uniform(-3.0, 3.0));
        Samples s{n, d, normals(n * d, rng)};
        Samples scaled = s;
        for (double& v : scaled.values) v *= a;
        return near(knn_entropy(scaled), knn_entropy(s) + static_cast<double>(d) * std::log(a), 1e-9);
    });
    run.run("mutual information symmetric", run.cases(), [](std::size_t, Rng& rng) {
        const std::size_t n = 20 + rng.uniform_index(600);
        std::vector<double> a = normals(n, rng), b(n);
        for (std::size_t k = 0; k < n; ++k) b[k] = std::sin(a[k]) + rng.normal();
        EntropyConfig cfg;
        cfg.seed = rng.next_u64();
        return mutual_information(a, b, cfg) == mutual_information(b, a, cfg);
    });
    run.run("entropy determinism", run.cases(), [](std::size_t, Rng& rng) {
        const std::size_t n = 20 + rng.uniform_index(600);
        std::vector<double> a = normals(n, rng), b = normals(n, rng), z = normals(n, rng);
        // rounded values have ties
        for (double& v : a) v = std::round(v * 4.0) / 4.0;
        EntropyConfig cfg;
        cfg.seed = rng.next_u64();
        return knn_entropy(a, cfg) == knn_entropy(a, cfg) && mutual_information(a, b, cfg) == mutual_information(a, b, cfg) &&
               conditional_mutual_information(a, b, z, cfg) == conditional_mutual_information(a, b, z, cfg);
    });
    run.run("kd-tree neighbours match brute force", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t n = 257 + rng.uniform_index(800);
        const std::size_t d = 2 + c % 2;
        Samples s{n, d, normals(n * d, rng)};
        const int k = 1 + static_cast<int>(rng.uniform_index(6));
        return kth_neighbor_distances(s, k) == detail::kth_neighbor_distances_brute(s, k);
    });
}

void scoring_properties(Runner& run) {
    run.run("gaussian weight sign", run.cases(), [](std::size_t c, Rng& rng) {
        const Dataset d = small_data(2 + c % 4, 40 + rng.uniform_index(200), rng);
        ScoreOptions opts;
        const PredictorTable f = fit_predictors(d, opts.regression, 1);
        const WeightMatrix w = gaussian_weights(d, f, true, 1);
        for (std::size_t j = 0; j < d.p(); ++j) {
            for (std::size_t i = 0; i < d.p(); ++i) {
                if (i == j) continue;
                const auto r = residuals(d, f(static_cast<Node>(j), static_cast<Node>(i)), static_cast<Node>(j),
                                         static_cast<Node>(i));
                const double rv = plugin_variance(r), tv = plugin_variance(d.column(i));
                const double v = w(static_cast<Node>(j), static_cast<Node>(i));
                if (rv <= tv && v > 0.0) return false;
                if (rv < tv && v >= 0.0) return false;
            }
        }
        return true;
    });
    run.run("column permutation equivariance", run.cases(), [](std::size_t c, Rng& rng) {
        const Dataset d = small_data(2 + c % 4, 30 + rng.uniform_index(120), rng);
        const auto perm = random_permutation(d.p(), rng);
        std::vector<std::vector<double>> cols;
        for (std::size_t k : perm) cols.emplace_back(d.column(k).begin(), d.column(k).end());
        const Dataset permuted = Dataset::from_columns(cols);
        ScoreOptions opts;
        opts.threads = 1;
        const WeightMatrix a = gaussian_weights(d, opts), b = gaussian_weights(permuted, opts);
        for (std::size_t j = 0; j < d.p(); ++j) {
            for (std::size_t i = 0; i < d.p(); ++i) {
                if (i == j) continue;
                if (b(static_cast<Node>(j), static_cast<Node>(i)) != a(static_cast<Node>(perm[j]), static_cast<Node>(perm[i])))
                    return false;
            }
        }
        return true;
    });
    run.run("split uses the literal halves", run.cases(), [](std::size_t, Rng& rng) {
        const Dataset d = small_data(3, 3 + rng.uniform_index(200), rng);
        const SplitData s = split_halves(d);
        const std::size_t half = d.n() / 2;
        return s.train == d.rows(0, half) && s.eval == d.rows(half, d.n() - half);
    });
    run.run("parallel weights match serial", run.cases(), [](std::size_t c, Rng& rng) {
        const Dataset d = small_data(3 + c % 4, 30 + rng.uniform_index(200), rng);
        ScoreOptions serial;
        serial.kind = c % 3 == 0 ? ScoreKind::gaussian : (c % 3 == 1 ? ScoreKind::entropy : ScoreKind::cmi_skeleton);
        serial.split = c % 2 == 1;
        serial.threads = 1;
        ScoreOptions parallel = serial;
        parallel.threads = 4;
        return edge_weights(d, serial) == edge_weights(d, parallel);
    });
}

void learner_properties(Runner& run) {
    run.run("constant added to weights keeps the tree", run.cases(), [](std::size_t c, Rng& rng) {
        const WeightMatrix w = random_weights(2 + c % 10, rng);
        return learn_from_weights(w).tree == learn_from_weights(transform(w, 1.0, rng.uniform(-3.0, 3.0))).tree;
    });
    run.run("cmi skeleton independent of direction", run.cases(), [](std::size_t c, Rng& rng) {
        const Dataset d = small_data(2 + c % 5, 40 + rng.uniform_index(150), rng);
        ScoreOptions opts;
        opts.kind = ScoreKind::cmi_skeleton;
        const WeightMatrix w = cmi_skeleton_weights(d, opts);
        return w == transposed(w) && skeleton(learn_from_weights(w).tree) == skeleton(learn_from_weights(transposed(w)).tree);
    });
    run.run("learned tree survives JSON", run.cases(), [](std::size_t c, Rng& rng) {
        const LearnResult r = learn_from_weights(random_weights(2 + c % 10, rng));
        return read_tree_json(tree_json(r.tree)) == r.tree && read_tree_json(learn_json(r)) == r.tree;
    });
}

void inference_properties(Runner& run) {
    run.run("dominated weights score lower", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t p = 2 + c % 8;
        const WeightMatrix lower = random_weights(p, rng);
        WeightMatrix upper = lower;
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t i = 0; i < p; ++i)
                if (i != j) upper.set(static_cast<Node>(j), static_cast<Node>(i), lower(static_cast<Node>(j), static_cast<Node>(i)) + rng.uniform(0.0, 1.0));
        const Substructure r = random_constraints(p, rng);
        return solve(lower).score <= solve(upper).score && constrained_score(lower, r) <= constrained_score(upper, r);
    });
    run.run("wider intervals never add rejections", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t p = 2 + c % 8;
        const WeightMatrix center = random_weights(p, rng);
        const WeightMatrix l = transform(center, 1.0, -rng.uniform(0.0, 0.3));
        const WeightMatrix u = transform(center, 1.0, rng.uniform(0.0, 0.3));
        WeightMatrix lw = l, uw = u;
        for (std::size_t j = 0; j < p; ++j) {
            for (std::size_t i = 0; i < p; ++i) {
                if (i == j) continue;
                const auto a = static_cast<Node>(j), b = static_cast<Node>(i);
                lw.set(a, b, l(a, b) - rng.uniform(0.0, 0.5));
                uw.set(a, b, u(a, b) + rng.uniform(0.0, 0.5));
            }
        }
        const Substructure r = random_constraints(p, rng);
        return test_substructure(lw, uw, r).reject <= test_substructure(l, u, r).reject;
    });
}

void identifiability_properties(Runner& run) {
    run.run("gaussian bound above log-concave bound", run.cases(), [](std::size_t c, Rng&) {
        const double ratio = std::exp(-8.0 + 16.0 * static_cast<double>(c) / static_cast<double>(kCases - 1));
        const ReversalBounds b = gaussian_reversal_bounds(ratio, 1.0);
        const ReversalBounds s = gaussian_reversal_bounds(3.0 * ratio, 3.0);
        return b.gauss_bound > b.logconcave_bound && near(b.gauss_bound, s.gauss_bound, 1e-12);
    });
    run.run("edge reversal gap affine invariance", 3, [](std::size_t c, Rng& rng) {
        const Simulation sim = sample_scm(bivariate_spec(0.25 * static_cast<double>(c), 1.0), 50000, Rng(rng.next_u64()));
        const auto x = sim.data.column(0), y = sim.data.column(1);
        const double a = rng.uniform(0.2, 5.0) * (rng.bernoulli(0.5) ? 1.0 : -1.0), b = rng.uniform(-10.0, 10.0);
        std::vector<double> moved(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) moved[k] = a * x[k] + b;
        EntropyConfig ent;
        ent.seed = rng.next_u64();
        return std::abs(edge_reversal_gap(x, y, {}, ent) - edge_reversal_gap(moved, y, {}, ent)) < 0.02;
    });
}

void simgen_properties(Runner& run) {
    run.run("simulation determinism", run.cases(), [](std::size_t c, Rng& rng) {
        SimConfig cfg;
        cfg.p = 2 + c % 8;
        cfg.n = 20 + rng.uniform_index(100);
        cfg.tree_type = c % 2 ? TreeType::type1 : TreeType::type2;
        cfg.alpha = rng.uniform(0.5, 3.0);
        cfg.extra_edge_prob = c % 3 == 0 ? 0.2 : 0.0;
        cfg.seed = rng.next_u64();
        const Simulation a = simulate(cfg), b = simulate(cfg);
        return a.data == b.data && a.truth == b.truth && a.tree == b.tree;
    });
    run.run("generated trees validate", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t p = 1 + c % 30;
        const DirectedTree t = generate_tree(p, c % 2 ? TreeType::type1 : TreeType::type2, rng);
        const auto edges = t.edges();
        return t.size() == p && validate_tree(p, edges) == t;
    });
    run.run("sampled columns follow node order", run.cases(), [](std::size_t c, Rng& rng) {
        const std::size_t p = 2 + c % 5;
        ScmSpec spec;
        spec.graph = Dag(p, {});
        for (std::size_t k = 0; k < p; ++k) spec.noise.push_back({std::pow(10.0, static_cast<double>(k)), 1.0});
        const Simulation sim = sample_scm(spec, 200, Rng(rng.next_u64()));
        for (std::size_t k = 1; k < p; ++k) {
            if (plugin_variance(sim.data.column(k)) <= plugin_variance(sim.data.column(k - 1))) return false;
        }
        return true;
    });
}

void metrics_properties(Runner& run) {
    std::vector<std::vector<Dag>> dags;
    for (std::size_t p = 1; p <= 4; ++p) dags.push_back(oracle::all_dags(p));

    run.run("dag enumeration counts", 4, [&](std::size_t c, Rng&) {
        static const std::size_t expected[] = {1, 3, 25, 543};
        return dags[c].size() == expected[c];
    });
    run.run("sid of a graph with itself is zero", dags[3].size(), [&](std::size_t c, Rng&) {
        for (std::size_t p = 0; p < 3; ++p) {
            if (c < dags[p].size() && sid(dags[p][c], dags[p][c]) != 0) return false;
        }
        return sid(dags[3][c], dags[3][c]) == 0;
    });
    run.run("sid matches adjustment oracle", dags[3].size(), [&](std::size_t c, Rng&) {
        for (std::size_t p = 0; p < 3; ++p) {
            if (c >= dags[p].size()) continue;
            for (const Dag& est : dags[p]) {
                if (sid(dags[p][c], est) != oracle::sid_by_adjustment(dags[p][c], est)) return false;
            }
        }
        for (const Dag& est : dags[3]) {
            if (sid(dags[3][c], est) != oracle::sid_by_adjustment(dags[3][c], est)) return false;
        }
        return true;
    });
    run.run("d-separation matches path oracle", dags[3].size(), [&](std::size_t c, Rng&) {
        const Dag& g = dags[3][c];
        for (Node x = 0; x < 4; ++x) {
            for (Node y = 0; y < 4; ++y) {
                if (x == y) continue;
                std::vector<Node> rest;
                for (Node v = 0; v < 4; ++v)
                    if (v != x && v != y) rest.push_back(v);
                for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
                    std::vector<Node> z;
                    for (std::size_t k = 0; k < rest.size(); ++k)
                        if (mask >> k & 1u) z.push_back(rest[k]);
                    if (d_separated(g, x, y, z) != oracle::d_separated_by_paths(g, x, y, z)) return false;
                }
            }
        }
        return true;
    });
    run.run("shd matches adjacency oracle and is symmetric", dags[3].size(), [&](std::size_t c, Rng&) {
        for (const Dag& b : dags[3]) {
            const std::size_t d = shd(dags[3][c], b);
            if (d != oracle::shd_by_adjacency(dags[3][c], b) || d != shd(b, dags[3][c])) return false;
        }
        return true;
    });
    run.run("shd triangle inequality", run.cases(1000), [&](std::size_t, Rng& rng) {
        const auto& all = dags[3];
        const Dag& a = all[rng.uniform_index(all.size())];
        const Dag& b = all[rng.uniform_index(all.size())];
        const Dag& e = all[rng.uniform_index(all.size())];
        return shd(a, e) <= shd(a, b) + shd(b, e);
    });
}

void io_properties(Runner& run) {
    run.run("csv round-trip", run.cases(), [](std::size_t c, Rng& rng) {
        const Dataset d = small_data(2 + c % 4, 3 + rng.uniform_index(50), rng);
        std::stringstream s;
        write_csv(s, d);
        return read_csv(s) == d;
    });
    run.run("graph json round-trip", run.cases(), [](std::size_t c, Rng& rng) {
        const DirectedTree t = random_tree(1 + c % 12, rng);
        const Dag g = extend_to_dag(t, 0.3, rng);
        return read_tree_json(tree_json(t)) == t && read_dag_json(dag_json(g)) == g;
    });
    run.run("weights csv round-trip", run.cases(), [](std::size_t c, Rng& rng) {
        const WeightMatrix w = random_weights(2 + c % 8, rng, 0.2);
        std::stringstream s(weights_csv(w));
        return read_weights_csv(s, w.size()) == w;
    });
}

}  // namespace

ExperimentResult run_properties(const ExperimentOptions& opts) {
    ExperimentResult res;
    res.name = "properties";
    res.table.columns = {"property", "cases", "failures"};
    Runner run(res, opts);
    graph_properties(run);
    arborescence_properties(run);
    regression_properties(run);
    entropy_properties(run);
    scoring_properties(run);
    learner_properties(run);
    inference_properties(run);
    identifiability_properties(run);
    simgen_properties(run);
    metrics_properties(run);
    io_properties(run);
    return res;
}

}  // namespace cat
