#ifndef CAT_SIMGEN_HPP
#define CAT_SIMGEN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cat/dataset.hpp"
#include "cat/graph.hpp"
#include "cat/rng.hpp"

namespace cat {

enum class TreeType { type1 = 1, type2 = 2 };

// Type 1 fills the adjacency matrix row by row: node j+1 is forced to be a
// child of j if it has no parent yet, every later parentless node becomes a
// child of j with probability 0.1. Type 2 gives each node i >= 1 a parent
// drawn uniformly from 0..i-1.
DirectedTree generate_tree(std::size_t p, TreeType type, Rng& rng);

// Adds each missing edge j -> i with j < i independently with probability `prob`.
Dag extend_to_dag(const DirectedTree& t, double prob, Rng& rng);

/// Piecewise-linear function through (knots[k], values[k]); constant beyond
/// the outermost knots.
struct GpPath {
    std::vector<double> knots;
    std::vector<double> values;

    double operator()(double x) const;
};

// A mechanism still to be drawn from a Gaussian process with kernel
// exp(-(a - b)^2 / (2 * bandwidth^2)) once its inputs are known.
struct GpPrior {
    double bandwidth = 1.0;
};

enum class Shape { linear, cubic, lambda_mix };

// linear: scale * x; cubic: scale * x^3; lambda_mix: scale * ((1 - lambda) x^3 + lambda x)
struct ExplicitMechanism {
    Shape shape = Shape::linear;
    double lambda = 1.0;
    double scale = 1.0;

    double operator()(double x) const;
};

using Mechanism = std::variant<GpPrior, GpPath, ExplicitMechanism>;

struct NoiseSpec {
    double sigma = 1.0;
    double alpha = 1.0;
};

/// Additive noise model X_i = sum over parents j of f_ji(X_j) + N_i.
struct ScmSpec {
    Dag graph;
    // one per graph edge, in the order of graph.edges()
    std::vector<Mechanism> mechanisms;
    std::vector<NoiseSpec> noise;

    // Throws InvalidArgument when counts mismatch or a sigma/alpha is not positive.
    void validate() const;
};

struct SimConfig {
    std::size_t p = 16;
    std::size_t n = 500;
    TreeType tree_type = TreeType::type2;
    double root_sigma_lo = 1.0;
    double root_sigma_hi = 2.0;
    double sigma_lo = 0.2;
    double sigma_hi = 0.28284271247461901;
    double alpha = 1.0;
    double extra_edge_prob = 0.0;
    double gp_bandwidth = 1.0;
    std::uint64_t seed = 0;
};

struct Simulation {
    Dataset data;
    Dag truth;
    // the generating tree (before any DAG extension)
    DirectedTree tree;
    // GP priors resolved into the drawn paths
    ScmSpec spec;
};

inline constexpr std::size_t kGpGridThreshold = 512;
inline constexpr double kGpJitter = 1e-8;

// One joint draw of a zero-mean GP with RBF kernel at `inputs`. Beyond
// `grid_threshold` distinct inputs the path is drawn on that many evenly spaced
// points and interpolated linearly. Throws CholeskyFailure when the kernel
// matrix stays indefinite after three tenfold jitter increases.
GpPath sample_gp_path(std::span<const double> inputs, double bandwidth, Rng& rng,
                      std::size_t grid_threshold = kGpGridThreshold);
std::vector<double> sample_gp_mechanism(std::span<const double> inputs, double bandwidth, Rng& rng,
                                        std::size_t grid_threshold = kGpGridThreshold);

// sign(Z) |Z|^alpha with Z ~ N(0, sigma^2)
std::vector<double> sample_noise(std::size_t n, double sigma, double alpha, Rng& rng);

// Generates columns in topological order. Each node and each edge draws from
// its own sub-stream of `rng`, so results do not depend on evaluation order.
Simulation sample_scm(const ScmSpec& spec, std::size_t n, const Rng& rng);

// Full protocol: tree, optional DAG extension, GP mechanisms, noise scales, data.
Simulation simulate(const SimConfig& cfg);

// X = sign(N_X)|N_X|^alpha, Y = (1 - lambda) X^3 + lambda X + N_Y, standard normal N_X, N_Y.
ScmSpec bivariate_spec(double lambda, double alpha);

}  // namespace cat

#endif  // CAT_SIMGEN_HPP
