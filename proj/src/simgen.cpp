#include "cat/simgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "cat/error.hpp"

namespace cat {

namespace {

constexpr std::uint64_t kEdgeStreams = 1ull << 32;

}  // namespace

DirectedTree generate_tree(std::size_t p, TreeType type, Rng& rng) {
    if (p < 1) throw InvalidArgument("a tree needs at least one node");
    std::vector<Node> parent(p, DirectedTree::kNoParent);
    if (type == TreeType::type1) {
        for (std::size_t j = 0; j < p; ++j) {
            for (std::size_t i = j + 1; i < p; ++i) {
                if (parent[i] != DirectedTree::kNoParent) continue;
                if (i == j + 1 || rng.bernoulli(0.1)) parent[i] = static_cast<Node>(j);
            }
        }
    } else {
        for (std::size_t i = 1; i < p; ++i) parent[i] = static_cast<Node>(rng.uniform_index(i));
    }
    return tree_from_parents(std::move(parent));
}

Dag extend_to_dag(const DirectedTree& t, double prob, Rng& rng) {
    if (!(prob >= 0.0 && prob <= 1.0)) throw InvalidArgument("edge probability must lie in [0, 1]");
    const std::size_t p = t.size();
    std::vector<Edge> edges = t.edges();
    for (const Edge& e : edges) {
        if (e.from > e.to) throw InvalidArgument("tree nodes must be numbered in generation order");
    }
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = j + 1; i < p; ++i) {
            if (t.has_edge(static_cast<Node>(j), static_cast<Node>(i))) continue;
            if (rng.bernoulli(prob)) edges.push_back({static_cast<Node>(j), static_cast<Node>(i)});
        }
    }
    return Dag(p, std::move(edges));
}

double GpPath::operator()(double x) const {
    if (knots.empty()) return 0.0;
    if (x <= knots.front()) return values.front();
    if (x >= knots.back()) return values.back();
    const auto it = std::upper_bound(knots.begin(), knots.end(), x);
    const auto k = static_cast<std::size_t>(it - knots.begin());
    const double t = (x - knots[k - 1]) / (knots[k] - knots[k - 1]);
    return values[k - 1] + t * (values[k] - values[k - 1]);
}

double ExplicitMechanism::operator()(double x) const {
    switch (shape) {
        case Shape::linear:
            return scale * x;
        case Shape::cubic:
            return scale * x * x * x;
        case Shape::lambda_mix:
            return scale * ((1.0 - lambda) * x * x * x + lambda * x);
    }
    return 0.0;
}

void ScmSpec::validate() const {
    if (mechanisms.size() != graph.edges().size()) throw InvalidArgument("need one mechanism per edge");
    if (noise.size() != graph.size()) throw InvalidArgument("need one noise specification per node");
    for (const NoiseSpec& s : noise) {
        if (!(s.sigma > 0.0) || !(s.alpha > 0.0)) throw InvalidArgument("noise sigma and alpha must be positive");
    }
    for (const Mechanism& m : mechanisms) {
        if (const auto* prior = std::get_if<GpPrior>(&m); prior && !(prior->bandwidth > 0.0)) {
            throw InvalidArgument("GP bandwidth must be positive");
        }
    }
}

GpPath sample_gp_path(std::span<const double> inputs, double bandwidth, Rng& rng, std::size_t grid_threshold) {
    if (!(bandwidth > 0.0)) throw InvalidArgument("GP bandwidth must be positive");
    if (grid_threshold < 2) throw InvalidArgument("GP grid needs at least two points");
    for (double x : inputs) {
        if (!std::isfinite(x)) throw NonFiniteInput("GP inputs must be finite");
    }
    GpPath path;
    path.knots.assign(inputs.begin(), inputs.end());
    std::sort(path.knots.begin(), path.knots.end());
    path.knots.erase(std::unique(path.knots.begin(), path.knots.end()), path.knots.end());
    if (path.knots.empty()) return path;
    if (path.knots.size() > grid_threshold) {
        const double lo = path.knots.front(), hi = path.knots.back();
        path.knots.resize(grid_threshold);
        for (std::size_t k = 0; k < grid_threshold; ++k) {
            path.knots[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid_threshold - 1);
        }
    }
    const auto m = static_cast<Eigen::Index>(path.knots.size());
    Eigen::MatrixXd kernel(m, m);
    const double denom = 2.0 * bandwidth * bandwidth;
    for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = 0; b <= a; ++b) {
            const double diff = path.knots[static_cast<std::size_t>(a)] - path.knots[static_cast<std::size_t>(b)];
            kernel(a, b) = kernel(b, a) = std::exp(-diff * diff / denom);
        }
    }
    double jitter = kGpJitter;
    for (int attempt = 0;; ++attempt, jitter *= 10.0) {
        Eigen::MatrixXd shifted = kernel;
        shifted.diagonal().array() += jitter;
        Eigen::LLT<Eigen::MatrixXd> llt(shifted);
        if (llt.info() == Eigen::Success) {
            Eigen::VectorXd z(m);
            for (Eigen::Index k = 0; k < m; ++k) z(k) = rng.normal();
            const Eigen::VectorXd draw = llt.matrixL() * z;
            path.values.assign(draw.data(), draw.data() + m);
            return path;
        }
        if (attempt == 3) throw CholeskyFailure("GP kernel matrix is not positive definite");
    }
}

std::vector<double> sample_gp_mechanism(std::span<const double> inputs, double bandwidth, Rng& rng,
                                        std::size_t grid_threshold) {
    const GpPath path = sample_gp_path(inputs, bandwidth, rng, grid_threshold);
    std::vector<double> out(inputs.size());
    for (std::size_t k = 0; k < inputs.size(); ++k) out[k] = path(inputs[k]);
    return out;
}

std::vector<double> sample_noise(std::size_t n, double sigma, double alpha, Rng& rng) {
    if (!(sigma > 0.0) || !(alpha > 0.0)) throw InvalidArgument("noise sigma and alpha must be positive");
    std::vector<double> out(n);
    for (double& v : out) {
        const double z = sigma * rng.normal();
        v = alpha == 1.0 ? z : std::copysign(std::pow(std::abs(z), alpha), z);
    }
    return out;
}

Simulation sample_scm(const ScmSpec& spec, std::size_t n, const Rng& rng) {
    spec.validate();
    if (n == 0) throw InvalidArgument("need at least one observation");
    const std::size_t p = spec.graph.size();
    const auto& edges = spec.graph.edges();
    ScmSpec resolved = spec;
    std::vector<std::vector<double>> columns(p);
    for (Node i : spec.graph.topological_order()) {
        Rng noise_rng = rng.split(static_cast<std::uint64_t>(i));
        const NoiseSpec& ns = spec.noise[static_cast<std::size_t>(i)];
        std::vector<double> x = sample_noise(n, ns.sigma, ns.alpha, noise_rng);
        for (Node j : spec.graph.parents(i)) {
            const auto k = static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), Edge{j, i}) - edges.begin());
            const std::vector<double>& parent = columns[static_cast<std::size_t>(j)];
            Mechanism& mech = resolved.mechanisms[k];
            if (const auto* prior = std::get_if<GpPrior>(&mech)) {
                Rng edge_rng = rng.split(kEdgeStreams + k);
                mech = sample_gp_path(parent, prior->bandwidth, edge_rng);
            }
            std::visit(
                [&](const auto& f) {
                    using F = std::decay_t<decltype(f)>;
                    if constexpr (!std::is_same_v<F, GpPrior>) {
                        for (std::size_t r = 0; r < n; ++r) x[r] += f(parent[r]);
                    }
                },
                mech);
        }
        columns[static_cast<std::size_t>(i)] = std::move(x);
    }
    Simulation sim;
    sim.data = Dataset::from_columns(std::move(columns));
    sim.truth = spec.graph;
    sim.spec = std::move(resolved);
    return sim;
}

Simulation simulate(const SimConfig& cfg) {
    if (cfg.p < 1) throw InvalidArgument("need at least one node");
    if (!(cfg.root_sigma_lo > 0.0 && cfg.root_sigma_hi >= cfg.root_sigma_lo && cfg.sigma_lo > 0.0 &&
          cfg.sigma_hi >= cfg.sigma_lo)) {
        throw InvalidArgument("noise ranges must be positive and ordered");
    }
    const Rng root(cfg.seed);
    Rng tree_rng = root.split(1);
    Rng dag_rng = root.split(2);
    Rng sigma_rng = root.split(3);
    const DirectedTree tree = generate_tree(cfg.p, cfg.tree_type, tree_rng);
    ScmSpec spec;
    spec.graph = cfg.extra_edge_prob > 0.0 ? extend_to_dag(tree, cfg.extra_edge_prob, dag_rng) : Dag::from_tree(tree);
    spec.mechanisms.assign(spec.graph.edges().size(), GpPrior{cfg.gp_bandwidth});
    spec.noise.resize(cfg.p);
    for (std::size_t i = 0; i < cfg.p; ++i) {
        const bool is_root = spec.graph.parents(static_cast<Node>(i)).empty();
        const double sigma = is_root ? sigma_rng.uniform(cfg.root_sigma_lo, cfg.root_sigma_hi)
                                     : sigma_rng.uniform(cfg.sigma_lo, cfg.sigma_hi);
        spec.noise[i] = {sigma, cfg.alpha};
    }
    Simulation sim = sample_scm(spec, cfg.n, root.split(4));
    sim.tree = tree;
    return sim;
}

ScmSpec bivariate_spec(double lambda, double alpha) {
    ScmSpec spec;
    spec.graph = Dag(2, {{0, 1}});
    spec.mechanisms = {ExplicitMechanism{Shape::lambda_mix, lambda, 1.0}};
    spec.noise = {{1.0, alpha}, {1.0, 1.0}};
    return spec;
}

}  // namespace cat
