#include "cat/scoring.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "cat/error.hpp"
#include "cat/parallel.hpp"
#include "cat/rng.hpp"

namespace cat {

namespace {

void check_constant_columns(const Dataset& d) {
    for (std::size_t c = 0; c < d.p(); ++c) {
        if (plugin_variance(d.column(c)) <= 0.0) {
            throw DegenerateColumnError("column " + std::to_string(c + 1) + " has zero variance");
        }
    }
}

EntropyConfig pair_config(const EntropyConfig& cfg, std::uint64_t salt) {
    EntropyConfig out = cfg;
    out.seed = splitmix64(cfg.seed ^ splitmix64(salt));
    return out;
}

}  // namespace

std::size_t pair_count(std::size_t p) {
    return p * (p - 1);
}

std::size_t pair_index(std::size_t p, Node j, Node i) {
    if (j == i || j < 0 || i < 0 || static_cast<std::size_t>(j) >= p || static_cast<std::size_t>(i) >= p) {
        throw InvalidArgument("invalid ordered pair");
    }
    return static_cast<std::size_t>(j) * (p - 1) + static_cast<std::size_t>(i < j ? i : i - 1);
}

Edge pair_edge(std::size_t p, std::size_t index) {
    if (index >= pair_count(p)) throw InvalidArgument("pair index out of range");
    const auto j = static_cast<Node>(index / (p - 1));
    auto i = static_cast<Node>(index % (p - 1));
    if (i >= j) ++i;
    return {j, i};
}

PredictorTable::PredictorTable(std::size_t p, std::vector<Predictor> predictors)
    : m_p(p), m_predictors(std::move(predictors)) {
    if (p < 2 || m_predictors.size() != pair_count(p)) throw DimensionMismatchError("need one predictor per ordered pair");
}

PredictorTable fit_predictors(const Dataset& train, const RegressionConfig& cfg, unsigned threads) {
    const std::size_t p = train.p();
    if (p < 2) throw InvalidArgument("need at least two variables");
    std::vector<Predictor> out(pair_count(p), Predictor::constant(0.0));
    parallel_for(out.size(), threads, [&](std::size_t k) {
        const Edge e = pair_edge(p, k);
        out[k] = fit(train.column(static_cast<std::size_t>(e.from)), train.column(static_cast<std::size_t>(e.to)), cfg);
    });
    return PredictorTable(p, std::move(out));
}

std::vector<double> residuals(const Dataset& d, const Predictor& f, Node j, Node i) {
    const auto xj = d.column(static_cast<std::size_t>(j));
    const auto xi = d.column(static_cast<std::size_t>(i));
    std::vector<double> r(d.n());
    for (std::size_t k = 0; k < d.n(); ++k) r[k] = xi[k] - f(xj[k]);
    return r;
}

SplitData split_halves(const Dataset& d) {
    const std::size_t half = d.n() / 2;
    if (half == 0) throw TooFewSamples("cannot split fewer than two rows");
    return {d.rows(0, half), d.rows(half, d.n() - half)};
}

double plugin_variance(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return ss / n;
}

WeightMatrix gaussian_weights(const Dataset& eval, const PredictorTable& f, bool centered_residuals, unsigned threads) {
    const std::size_t p = eval.p();
    if (f.size() != p) throw DimensionMismatchError("predictor table and dataset sizes differ");
    std::vector<double> total(p);
    for (std::size_t i = 0; i < p; ++i) {
        total[i] = plugin_variance(eval.column(i));
        if (total[i] <= 0.0) throw DegenerateColumnError("column " + std::to_string(i + 1) + " has zero variance");
    }
    std::vector<double> values(pair_count(p));
    parallel_for(values.size(), threads, [&](std::size_t k) {
        const Edge e = pair_edge(p, k);
        const auto r = residuals(eval, f(e.from, e.to), e.from, e.to);
        double spread;
        if (centered_residuals) {
            spread = plugin_variance(r);
        } else {
            spread = 0.0;
            for (double v : r) spread += v * v;
            spread /= static_cast<double>(r.size());
        }
        values[k] = 0.5 * std::log(spread / total[static_cast<std::size_t>(e.to)]);
    });
    WeightMatrix w(p);
    for (std::size_t k = 0; k < values.size(); ++k) {
        const Edge e = pair_edge(p, k);
        if (!std::isfinite(values[k])) throw DegenerateDataError("residuals vanish exactly for a pair");
        w.set(e.from, e.to, values[k]);
    }
    return w;
}

WeightMatrix entropy_weights(const Dataset& eval, const PredictorTable& f, const EntropyConfig& cfg, unsigned threads) {
    const std::size_t p = eval.p();
    if (f.size() != p) throw DimensionMismatchError("predictor table and dataset sizes differ");
    std::vector<double> marginal(p);
    parallel_for(p, threads, [&](std::size_t i) { marginal[i] = knn_entropy(eval.column(i), pair_config(cfg, i)); });
    std::vector<double> values(pair_count(p));
    parallel_for(values.size(), threads, [&](std::size_t k) {
        const Edge e = pair_edge(p, k);
        const auto r = residuals(eval, f(e.from, e.to), e.from, e.to);
        values[k] = knn_entropy(r, pair_config(cfg, p + k)) - marginal[static_cast<std::size_t>(e.to)];
    });
    WeightMatrix w(p);
    for (std::size_t k = 0; k < values.size(); ++k) {
        const Edge e = pair_edge(p, k);
        w.set(e.from, e.to, values[k]);
    }
    return w;
}

void check_scorable(const Dataset& d) {
    if (d.p() < 2) throw InvalidArgument("scoring needs at least two variables");
    if (d.n() < 3) throw TooFewSamples("scoring needs at least three observations");
    check_constant_columns(d);
}

WeightMatrix gaussian_weights(const Dataset& d, const ScoreOptions& opts) {
    check_scorable(d);
    if (opts.split) {
        const SplitData halves = split_halves(d);
        const PredictorTable f = fit_predictors(halves.train, opts.regression, opts.threads);
        return gaussian_weights(halves.eval, f, false, opts.threads);
    }
    const PredictorTable f = fit_predictors(d, opts.regression, opts.threads);
    return gaussian_weights(d, f, true, opts.threads);
}

WeightMatrix entropy_weights(const Dataset& d, const ScoreOptions& opts) {
    check_scorable(d);
    if (opts.split) {
        const SplitData halves = split_halves(d);
        const PredictorTable f = fit_predictors(halves.train, opts.regression, opts.threads);
        return entropy_weights(halves.eval, f, opts.entropy, opts.threads);
    }
    const PredictorTable f = fit_predictors(d, opts.regression, opts.threads);
    return entropy_weights(d, f, opts.entropy, opts.threads);
}

WeightMatrix cmi_skeleton_weights(const Dataset& d, const ScoreOptions& opts) {
    check_scorable(d);
    const std::size_t p = d.p();
    const std::size_t pairs = p * (p - 1) / 2;
    std::vector<double> values(pairs);
    std::vector<Edge> edges;
    edges.reserve(pairs);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = j + 1; i < p; ++i) edges.push_back({static_cast<Node>(j), static_cast<Node>(i)});
    }
    parallel_for(pairs, opts.threads, [&](std::size_t k) {
        const Edge e = edges[k];
        values[k] = -mutual_information(d.column(static_cast<std::size_t>(e.from)), d.column(static_cast<std::size_t>(e.to)),
                                        pair_config(opts.entropy, k));
    });
    WeightMatrix w(p);
    for (std::size_t k = 0; k < pairs; ++k) {
        w.set(edges[k].from, edges[k].to, values[k]);
        w.set(edges[k].to, edges[k].from, values[k]);
    }
    return w;
}

WeightMatrix edge_weights(const Dataset& d, const ScoreOptions& opts) {
    switch (opts.kind) {
        case ScoreKind::gaussian:
            return gaussian_weights(d, opts);
        case ScoreKind::entropy:
            return entropy_weights(d, opts);
        case ScoreKind::cmi_skeleton:
            return cmi_skeleton_weights(d, opts);
    }
    throw InvalidArgument("unknown score kind");
}

}  // namespace cat
