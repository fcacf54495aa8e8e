#include "cat/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cat/error.hpp"

namespace cat {

namespace {

constexpr double kTinyMass = 1e-300;

struct Sums {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, t0 = 0.0, t1 = 0.0;

    void add(double weight, double offset, double y) {
        s0 += weight;
        s1 += weight * offset;
        s2 += weight * offset * offset;
        t0 += weight * y;
        t1 += weight * y * offset;
    }

    double estimate(RegressionMethod method) const {
        if (method == RegressionMethod::local_linear) {
            const double det = s0 * s2 - s1 * s1;
            if (det > 1e-6 * s0 * s2) return (s2 * t0 - s1 * t1) / det;
        }
        return t0 / s0;
    }
};

void check_pairs(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw LengthMismatch("x and y lengths differ");
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!std::isfinite(x[k]) || !std::isfinite(y[k])) throw NonFiniteInput("regression input is not finite");
    }
}

void sort_pairs(std::vector<double>& xs, std::vector<double>& ys) {
    std::vector<std::size_t> order(xs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return xs[a] < xs[b] || (xs[a] == xs[b] && ys[a] < ys[b]);
    });
    std::vector<double> sx(xs.size()), sy(ys.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        sx[k] = xs[order[k]];
        sy[k] = ys[order[k]];
    }
    xs = std::move(sx);
    ys = std::move(sy);
}

double plugin_sd(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / n);
}

// leave-one-out squared error on sorted data
double loo_error(const std::vector<double>& xs, const std::vector<double>& ys, double h, RegressionMethod method) {
    const std::size_t n = xs.size();
    const double reach = Predictor::kCutoff * h;
    const double inv = 1.0 / h;
    double total = 0.0;
    std::size_t left = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (xs[left] < xs[i] - reach) ++left;
        Sums sums;
        for (std::size_t j = left; j < n && xs[j] <= xs[i] + reach; ++j) {
            if (j == i) continue;
            const double d = xs[j] - xs[i];
            const double u = d * inv;
            sums.add(std::exp(-0.5 * u * u), d, ys[j]);
        }
        double estimate;
        if (sums.s0 < kTinyMass) {
            // nearest other point
            const std::size_t lo = i > 0 ? i - 1 : i + 1;
            const std::size_t hi = i + 1 < n ? i + 1 : i - 1;
            estimate = (xs[i] - xs[lo] <= xs[hi] - xs[i]) ? ys[lo] : ys[hi];
        } else {
            estimate = sums.estimate(method);
        }
        total += (ys[i] - estimate) * (ys[i] - estimate);
    }
    return total;
}

}  // namespace

void RegressionConfig::validate() const {
    if (grid_size == 0) throw InvalidArgument("bandwidth grid must have at least one member");
    if (rule == BandwidthRule::fixed && !(fixed_bandwidth > 0.0 && std::isfinite(fixed_bandwidth))) {
        throw InvalidArgument("fixed bandwidth must be positive");
    }
    if (!(grid_lo > 0.0) || !(grid_hi >= grid_lo)) throw InvalidArgument("bandwidth multiplier range is empty");
    if (cv_max_points < 3) throw InvalidArgument("cross-validation needs at least 3 points");
}

Predictor::Predictor(std::vector<double> xs, std::vector<double> ys, double bandwidth, RegressionMethod method)
    : m_xs(std::move(xs)), m_ys(std::move(ys)), m_bandwidth(bandwidth), m_method(method) {
    check_pairs(m_xs, m_ys);
    if (m_xs.empty()) throw TooFewSamples("a predictor needs at least one training point");
    if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) throw InvalidArgument("bandwidth must be positive");
    sort_pairs(m_xs, m_ys);
    m_lo = m_xs.front();
    m_hi = m_xs.back();
    const auto [ylo, yhi] = std::minmax_element(m_ys.begin(), m_ys.end());
    m_ylo = *ylo;
    m_yhi = *yhi;
    if (m_lo == m_hi) {
        m_constant = true;
        m_value = std::accumulate(m_ys.begin(), m_ys.end(), 0.0) / static_cast<double>(m_ys.size());
        return;
    }
    if (m_xs.size() > kExactLimit) build_grid();
}

Predictor Predictor::constant(double value) {
    if (!std::isfinite(value)) throw NonFiniteInput("constant predictor value must be finite");
    Predictor p;
    p.m_constant = true;
    p.m_value = value;
    return p;
}

double Predictor::nearest(double x) const {
    const auto it = std::lower_bound(m_xs.begin(), m_xs.end(), x);
    if (it == m_xs.begin()) return m_ys.front();
    if (it == m_xs.end()) return m_ys.back();
    const auto k = static_cast<std::size_t>(it - m_xs.begin());
    return (x - m_xs[k - 1] <= m_xs[k] - x) ? m_ys[k - 1] : m_ys[k];
}

double Predictor::exact(double x) const {
    const double reach = kCutoff * m_bandwidth;
    const double inv = 1.0 / m_bandwidth;
    Sums sums;
    auto it = std::lower_bound(m_xs.begin(), m_xs.end(), x - reach);
    for (auto k = static_cast<std::size_t>(it - m_xs.begin()); k < m_xs.size() && m_xs[k] <= x + reach; ++k) {
        const double d = m_xs[k] - x;
        const double u = d * inv;
        sums.add(std::exp(-0.5 * u * u), d, m_ys[k]);
    }
    if (sums.s0 < kTinyMass) return nearest(x);
    return sums.estimate(m_method);
}

void Predictor::build_grid() {
    const std::size_t m = kBins;
    m_step = (m_hi - m_lo) / static_cast<double>(m - 1);
    std::vector<double> count(m, 0.0), sum_y(m, 0.0);
    for (std::size_t k = 0; k < m_xs.size(); ++k) {
        const double t = (m_xs[k] - m_lo) / m_step;
        auto b = static_cast<std::size_t>(t);
        if (b >= m - 1) b = m - 2;
        const double f = t - static_cast<double>(b);
        count[b] += 1.0 - f;
        count[b + 1] += f;
        sum_y[b] += (1.0 - f) * m_ys[k];
        sum_y[b + 1] += f * m_ys[k];
    }
    const double ratio = m_step / m_bandwidth;
    const auto reach = std::min<std::size_t>(m - 1, static_cast<std::size_t>(std::ceil(kCutoff / ratio)));
    std::vector<double> kernel(reach + 1);
    for (std::size_t l = 0; l <= reach; ++l) {
        const double u = static_cast<double>(l) * ratio;
        kernel[l] = std::exp(-0.5 * u * u);
    }
    m_grid.assign(m, 0.0);
    for (std::size_t g = 0; g < m; ++g) {
        const std::size_t first = g >= reach ? g - reach : 0;
        const std::size_t last = std::min(m - 1, g + reach);
        Sums sums;
        for (std::size_t b = first; b <= last; ++b) {
            if (count[b] == 0.0) continue;
            const double w = kernel[b > g ? b - g : g - b];
            const double d = (static_cast<double>(b) - static_cast<double>(g)) * m_step;
            sums.s0 += w * count[b];
            sums.s1 += w * count[b] * d;
            sums.s2 += w * count[b] * d * d;
            sums.t0 += w * sum_y[b];
            sums.t1 += w * sum_y[b] * d;
        }
        m_grid[g] = sums.s0 < kTinyMass ? nearest(m_lo + static_cast<double>(g) * m_step) : sums.estimate(m_method);
    }
}

double Predictor::predict(double x) const {
    if (m_constant) return m_value;
    x = std::clamp(x, m_lo, m_hi);
    double v;
    if (m_grid.empty()) {
        v = exact(x);
    } else {
        const double t = (x - m_lo) / m_step;
        auto b = static_cast<std::size_t>(t);
        if (b >= m_grid.size() - 1) b = m_grid.size() - 2;
        const double f = t - static_cast<double>(b);
        v = (1.0 - f) * m_grid[b] + f * m_grid[b + 1];
    }
    return m_method == RegressionMethod::kernel ? std::clamp(v, m_ylo, m_yhi) : v;
}

std::vector<double> Predictor::predict(std::span<const double> xs) const {
    std::vector<double> out(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) out[k] = predict(xs[k]);
    return out;
}

double silverman_bandwidth(std::span<const double> x) {
    if (x.empty()) return 0.0;
    return 1.06 * plugin_sd(x) * std::pow(static_cast<double>(x.size()), -0.2);
}

std::vector<double> bandwidth_grid(double base, std::size_t size, double lo, double hi) {
    if (size == 0) throw InvalidArgument("bandwidth grid must have at least one member");
    if (size == 1) return {base * std::sqrt(lo * hi)};
    std::vector<double> grid(size);
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t k = 0; k < size; ++k) {
        grid[k] = base * std::exp(a + (b - a) * static_cast<double>(k) / static_cast<double>(size - 1));
    }
    return grid;
}

double loo_cv_bandwidth(std::span<const double> x, std::span<const double> y, std::span<const double> grid,
                        RegressionMethod method) {
    check_pairs(x, y);
    if (x.size() < 3) throw TooFewSamples("leave-one-out cross-validation needs n >= 3");
    if (grid.empty()) throw InvalidArgument("bandwidth grid is empty");
    for (double h : grid) {
        if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("bandwidths must be positive");
    }
    std::vector<double> xs(x.begin(), x.end()), ys(y.begin(), y.end());
    sort_pairs(xs, ys);
    std::vector<double> sorted_grid(grid.begin(), grid.end());
    std::sort(sorted_grid.begin(), sorted_grid.end());
    double best_h = sorted_grid.front();
    double best_err = std::numeric_limits<double>::infinity();
    for (double h : sorted_grid) {
        const double err = loo_error(xs, ys, h, method);
        if (err < best_err) {
            best_err = err;
            best_h = h;
        }
    }
    return best_h;
}

Predictor fit(std::span<const double> x, std::span<const double> y, const RegressionConfig& cfg) {
    cfg.validate();
    check_pairs(x, y);
    if (x.size() < 2) throw TooFewSamples("regression needs n >= 2");
    std::vector<double> xs(x.begin(), x.end()), ys(y.begin(), y.end());
    sort_pairs(xs, ys);
    const double base = silverman_bandwidth(xs);
    if (base == 0.0) {
        return Predictor::constant(std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size()));
    }
    double h = base;
    if (cfg.rule == BandwidthRule::fixed) {
        h = cfg.fixed_bandwidth;
    } else if (cfg.rule == BandwidthRule::loo_cv && xs.size() >= 3) {
        std::vector<double> sx = xs, sy = ys;
        if (xs.size() > cfg.cv_max_points) {
            // evenly strided subsample of the sorted data
            const std::size_t m = cfg.cv_max_points;
            sx.resize(m);
            sy.resize(m);
            for (std::size_t k = 0; k < m; ++k) {
                const std::size_t idx = k * (xs.size() - 1) / (m - 1);
                sx[k] = xs[idx];
                sy[k] = ys[idx];
            }
        }
        const double sub_base = silverman_bandwidth(sx);
        if (sub_base > 0.0) {
            const auto multipliers = bandwidth_grid(1.0, cfg.grid_size, cfg.grid_lo, cfg.grid_hi);
            std::vector<double> grid(multipliers.size());
            for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = multipliers[k] * sub_base;
            h = loo_cv_bandwidth(sx, sy, grid, cfg.method) / sub_base * base;
        }
    }
    return Predictor(std::move(xs), std::move(ys), h, cfg.method);
}

}  // namespace cat
