#ifndef CAT_ENTROPY_HPP
#define CAT_ENTROPY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cat {

struct EntropyConfig {
    int k = 5;
    // jitter magnitude relative to the largest column standard deviation
    double jitter = 1e-10;
    std::uint64_t seed = 0;
};

/// Row-major n x d sample matrix with d in {1, 2, 3}.
struct Samples {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<double> values;

    static Samples from_columns(std::initializer_list<std::span<const double>> columns);
    double operator()(std::size_t row, std::size_t col) const { return values[row * d + col]; }
};

// Distance from every sample to its k-th nearest other sample (exact).
std::vector<double> kth_neighbor_distances(const Samples& s, int k);

/// Kozachenko-Leonenko estimate in nats:
///
///     psi(n) - psi(k) + log V_d + (d / n) * sum_m log rho_k(m)
///
/// with V_d the volume of the unit d-ball. When some k-th distance is zero the
/// sample is perturbed with seeded uniform jitter, growing tenfold up to three
/// times. Throws TooFewSamples (n <= k), DegenerateSample (all points equal or
/// ties that survive the jitter budget), InvalidArgument for d outside 1..3.
double knn_entropy(const Samples& s, const EntropyConfig& cfg = {});
double knn_entropy(std::span<const double> x, const EntropyConfig& cfg = {});

// h(a) + h(b) - h(a, b) on standardized inputs; symmetric in its arguments.
double mutual_information(std::span<const double> a, std::span<const double> b, const EntropyConfig& cfg = {});

// h(x, z) + h(y, z) - h(z) - h(x, y, z) on standardized inputs.
double conditional_mutual_information(std::span<const double> x, std::span<const double> y,
                                      std::span<const double> z, const EntropyConfig& cfg = {});

namespace detail {

// O(n^2) reference scan.
std::vector<double> kth_neighbor_distances_brute(const Samples& s, int k);
double log_unit_ball_volume(std::size_t d);

}  // namespace detail

}  // namespace cat

#endif  // CAT_ENTROPY_HPP
