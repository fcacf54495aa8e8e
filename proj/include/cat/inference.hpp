#ifndef CAT_INFERENCE_HPP
#define CAT_INFERENCE_HPP

#include <cstddef>

#include <Eigen/Dense>

#include "cat/arborescence.hpp"
#include "cat/dataset.hpp"
#include "cat/scoring.hpp"

namespace cat {

/// Moments of squared residuals and squared centered observations on the
/// evaluation rows.
///
/// Row k of an evaluation sample contributes M_k, the squared residuals of all
/// ordered pairs numbered as in pair_index, and V_k, the squared deviations of
/// every column from its evaluation mean. mu and nu are their means and the
/// Sigma blocks their divide-by-n (cross-)covariances:
/// Sigma_M is P x P, Sigma_V is p x p and Sigma_MV is P x p with P = p(p-1).
struct MomentStats {
    std::size_t p = 0;
    std::size_t n_eval = 0;
    Eigen::VectorXd mu;
    Eigen::VectorXd nu;
    Eigen::MatrixXd sigma_m;
    Eigen::MatrixXd sigma_v;
    Eigen::MatrixXd sigma_mv;
};

struct ConfidenceBounds {
    WeightMatrix lower{2};
    WeightMatrix upper{2};
    WeightMatrix center{2};
    // sigma(j, i) per edge; the diagonal is unused and zero
    Eigen::MatrixXd sigma;
    double alpha = 0.0;
    double z = 0.0;
    // some delta-method variance came out negative and was set to zero
    bool clamped = false;
};

struct TestResult {
    bool reject = false;
    // +infinity when no tree satisfies the constraints
    double s_restricted = 0.0;
    double s_upper = 0.0;
};

struct TestReport {
    TestResult result;
    double alpha = 0.0;
    std::size_t n_eval = 0;
    Substructure constraints;
};

// Moments on `eval` for predictors trained elsewhere. Throws TooFewSamples
// when eval has fewer than two rows.
MomentStats moment_statistics(const Dataset& eval, const PredictorTable& f);
// Trains on the first half of `d` and evaluates on the second.
MomentStats moment_statistics(const Dataset& d, const ScoreOptions& opts);

/// Simultaneous intervals 0.5 * log(mu / nu) -/+ z * sigma / (2 sqrt(n_eval))
/// with z the upper alpha / (2 p (p - 1)) standard normal quantile, where
///
///     sigma^2 = S_M / mu^2 + S_V / nu^2 - 2 S_MV / (mu nu)
///
/// for the matching entries of the Sigma blocks. Throws ZeroMomentError when a
/// mean moment is zero.
ConfidenceBounds confidence_bounds(const MomentStats& ms, double alpha);

// Rejects when the best constrained tree under `lower` scores strictly above
// the best unconstrained tree under `upper`.
TestResult test_substructure(const WeightMatrix& lower, const WeightMatrix& upper, const Substructure& r);

// Split, moments, bounds and test in one call.
TestReport test_substructure(const Dataset& d, const Substructure& r, double alpha, const ScoreOptions& opts = {});

// Standard normal quantile (Wichura's AS241, about 1e-16 relative accuracy); 0 < prob < 1.
double normal_quantile(double prob);
// upper alpha / (2 * pairs) quantile
double bonferroni_z(double alpha, std::size_t pairs);

}  // namespace cat

#endif  // CAT_INFERENCE_HPP
