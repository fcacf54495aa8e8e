#ifndef CAT_REGRESSION_HPP
#define CAT_REGRESSION_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace cat {

enum class RegressionMethod { kernel, local_linear };
enum class BandwidthRule { fixed, silverman, loo_cv };

struct RegressionConfig {
    RegressionMethod method = RegressionMethod::kernel;
    BandwidthRule rule = BandwidthRule::loo_cv;
    double fixed_bandwidth = 1.0;
    // log-spaced multiples of the Silverman bandwidth searched by loo_cv
    std::size_t grid_size = 20;
    double grid_lo = 0.1;
    double grid_hi = 10.0;
    // cross-validation runs on an evenly strided subsample of at most this many points
    std::size_t cv_max_points = 500;

    // Throws InvalidArgument on grid_size == 0, a non-positive fixed bandwidth
    // or an empty multiplier range.
    void validate() const;
};

/// Fitted univariate smoother x -> E[Y | X = x] with a Gaussian kernel.
///
/// Training pairs are kept sorted by (x, y), so a predictor does not depend on
/// the order its data arrived in. Queries outside [min x, max x] are clamped to
/// the nearest endpoint. Up to kExactLimit training points every query is an
/// exact kernel sum over the points within kCutoff bandwidths; larger samples
/// are linearly binned onto kBins grid nodes, smoothed there, and queries
/// interpolate linearly between nodes. Kernel estimates are clamped to
/// [min y, max y] to absorb rounding.
class Predictor {
public:
    static constexpr std::size_t kExactLimit = 2000;
    static constexpr std::size_t kBins = 4096;
    static constexpr double kCutoff = 8.0;

    // Direct construction with a given bandwidth; n >= 1, equal lengths, finite values.
    Predictor(std::vector<double> xs, std::vector<double> ys, double bandwidth,
              RegressionMethod method = RegressionMethod::kernel);
    static Predictor constant(double value);

    double predict(double x) const;
    double operator()(double x) const { return predict(x); }
    std::vector<double> predict(std::span<const double> xs) const;

    bool is_constant() const { return m_constant; }
    double bandwidth() const { return m_bandwidth; }
    RegressionMethod method() const { return m_method; }
    double range_min() const { return m_lo; }
    double range_max() const { return m_hi; }
    const std::vector<double>& xs() const { return m_xs; }
    const std::vector<double>& ys() const { return m_ys; }

private:
    Predictor() = default;
    double exact(double x) const;
    double nearest(double x) const;
    void build_grid();

    std::vector<double> m_xs;
    std::vector<double> m_ys;
    double m_bandwidth = 1.0;
    RegressionMethod m_method = RegressionMethod::kernel;
    bool m_constant = false;
    double m_value = 0.0;
    double m_lo = 0.0;
    double m_hi = 0.0;
    double m_ylo = 0.0;
    double m_yhi = 0.0;
    std::vector<double> m_grid;
    double m_step = 0.0;
};

// 1.06 * sd * n^(-1/5), sd the plug-in standard deviation; 0 when x is constant.
double silverman_bandwidth(std::span<const double> x);

// `size` log-spaced values base*lo ... base*hi (a single value base*sqrt(lo*hi) when size == 1).
std::vector<double> bandwidth_grid(double base, std::size_t size, double lo, double hi);

// Grid member minimising the leave-one-out squared error; ties go to the
// smaller bandwidth. Requires n >= 3.
double loo_cv_bandwidth(std::span<const double> x, std::span<const double> y, std::span<const double> grid,
                        RegressionMethod method = RegressionMethod::kernel);

// Fits per cfg; zero-variance x gives the constant mean-of-y predictor.
// Throws LengthMismatch, NonFiniteInput, or TooFewSamples for n < 2.
Predictor fit(std::span<const double> x, std::span<const double> y, const RegressionConfig& cfg = {});

}  // namespace cat

#endif  // CAT_REGRESSION_HPP
