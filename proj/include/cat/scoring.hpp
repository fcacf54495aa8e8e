#ifndef CAT_SCORING_HPP
#define CAT_SCORING_HPP

#include <cstddef>
#include <vector>

#include "cat/arborescence.hpp"
#include "cat/dataset.hpp"
#include "cat/entropy.hpp"
#include "cat/regression.hpp"

namespace cat {

enum class ScoreKind { gaussian, entropy, cmi_skeleton };

struct ScoreOptions {
    ScoreKind kind = ScoreKind::gaussian;
    // train regressions on the first floor(n/2) rows, evaluate on the rest
    bool split = false;
    RegressionConfig regression;
    EntropyConfig entropy;
    // 0 resolves through resolve_threads
    unsigned threads = 0;
};

// Ordered pairs (j, i), j != i, are numbered row-major:
// index = j * (p - 1) + (i < j ? i : i - 1).
std::size_t pair_count(std::size_t p);
std::size_t pair_index(std::size_t p, Node j, Node i);
Edge pair_edge(std::size_t p, std::size_t index);

/// One fitted regression of X_i on X_j per ordered pair.
class PredictorTable {
public:
    PredictorTable(std::size_t p, std::vector<Predictor> predictors);
    std::size_t size() const { return m_p; }
    const Predictor& operator()(Node j, Node i) const { return m_predictors[pair_index(m_p, j, i)]; }

private:
    std::size_t m_p;
    std::vector<Predictor> m_predictors;
};

PredictorTable fit_predictors(const Dataset& train, const RegressionConfig& cfg, unsigned threads = 0);

// residuals X_i - f(X_j) on `d`
std::vector<double> residuals(const Dataset& d, const Predictor& f, Node j, Node i);

struct SplitData {
    Dataset train;
    Dataset eval;
};

// Literal halves in row order: train = first floor(n/2) rows, eval = the rest.
SplitData split_halves(const Dataset& d);

// Plug-in (divide-by-n) variance.
double plugin_variance(std::span<const double> x);

/// Gaussian weights 0.5 * log(residual spread / Var(X_i)) evaluated on `eval`
/// with already fitted predictors. The denominator is always the plug-in
/// variance. With `centered_residuals` the numerator is the plug-in variance
/// of the residuals; otherwise it is their mean square, which is the form used
/// when predictors come from independent training rows.
WeightMatrix gaussian_weights(const Dataset& eval, const PredictorTable& f, bool centered_residuals,
                              unsigned threads = 0);
// Entropy of the residuals minus entropy of X_i, both on `eval`.
WeightMatrix entropy_weights(const Dataset& eval, const PredictorTable& f, const EntropyConfig& cfg,
                             unsigned threads = 0);

// Full pipelines: fit (on the training half when opts.split) and evaluate.
// Throws DegenerateColumnError for a constant column and TooFewSamples /
// InvalidArgument when n < 3 or p < 2.
WeightMatrix gaussian_weights(const Dataset& d, const ScoreOptions& opts);
WeightMatrix entropy_weights(const Dataset& d, const ScoreOptions& opts);
// -MI(X_j; X_i) in both directions.
WeightMatrix cmi_skeleton_weights(const Dataset& d, const ScoreOptions& opts);
// dispatch on opts.kind
WeightMatrix edge_weights(const Dataset& d, const ScoreOptions& opts);

void check_scorable(const Dataset& d);

}  // namespace cat

#endif  // CAT_SCORING_HPP
