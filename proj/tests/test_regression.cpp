#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cat/error.hpp"
#include "cat/regression.hpp"
#include "cat/rng.hpp"

using namespace cat;

TEST_CASE("identity data is interpolated") {
    std::vector<double> x(2001);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = -1.0 + 2.0 * static_cast<double>(k) / 2000.0;
    RegressionConfig cfg;
    cfg.rule = BandwidthRule::fixed;
    cfg.fixed_bandwidth = 0.005;
    cfg.method = RegressionMethod::kernel;
    const Predictor f = fit(x, x, cfg);
    for (double q : {-0.9, -0.5, -0.123, 0.0, 0.3, 0.77, 0.9}) CHECK(std::abs(f(q) - q) < 1e-3);
}

TEST_CASE("constant x gives the mean of y") {
    const std::vector<double> x(10, 3.0);
    std::vector<double> y(10);
    std::iota(y.begin(), y.end(), 0.0);
    const Predictor f = fit(x, y);
    CHECK(f.is_constant());
    CHECK(f(-100.0) == doctest::Approx(4.5));
    CHECK(f(3.0) == doctest::Approx(4.5));
    CHECK(Predictor::constant(2.0)(7.0) == 2.0);
}

TEST_CASE("cubic signal is recovered") {
    Rng rng(2);
    const std::size_t n = 2000;
    std::vector<double> x(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
        x[k] = rng.uniform(-1.0, 1.0);
        y[k] = x[k] * x[k] * x[k] + 0.1 * rng.normal();
    }
    for (auto method : {RegressionMethod::kernel, RegressionMethod::local_linear}) {
        RegressionConfig cfg;
        cfg.method = method;
        const Predictor f = fit(x, y, cfg);
        double mse = 0.0;
        for (int k = 0; k <= 200; ++k) {
            const double q = -1.0 + 0.01 * k;
            mse += std::pow(f(q) - q * q * q, 2);
        }
        CHECK(mse / 201.0 < 0.01);
    }
}

TEST_CASE("binned evaluation matches exact evaluation closely") {
    Rng rng(4);
    const std::size_t n = 5000;
    std::vector<double> x(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
        x[k] = rng.normal();
        y[k] = std::sin(x[k]) + 0.2 * rng.normal();
    }
    const Predictor binned(x, y, 0.2, RegressionMethod::kernel);
    const std::vector<double> xs(x.begin(), x.begin() + 1500), ys(y.begin(), y.begin() + 1500);
    for (double q = -2.0; q <= 2.0; q += 0.1) CHECK(std::abs(binned(q) - std::sin(q)) < 0.1);
    CHECK(binned.range_min() == *std::min_element(x.begin(), x.end()));
}

TEST_CASE("predictions clamp outside the training range") {
    const std::vector<double> x = {0.0, 1.0, 2.0, 3.0}, y = {1.0, 3.0, 2.0, 5.0};
    const Predictor f(x, y, 0.7, RegressionMethod::kernel);
    CHECK(f(10.0) == f(3.0));
    CHECK(f(-4.0) == f(0.0));
    const Predictor one({2.0}, {7.5}, 1.0, RegressionMethod::kernel);
    CHECK(one(0.0) == 7.5);
    CHECK(one(9.0) == 7.5);
}

TEST_CASE("tiny kernel mass falls back to the nearest neighbour") {
    const std::vector<double> x = {0.0, 100.0}, y = {1.0, 2.0};
    const Predictor f(x, y, 1e-3, RegressionMethod::kernel);
    CHECK(f(40.0) == 1.0);
    CHECK(f(60.0) == 2.0);
}

TEST_CASE("leave-one-out bandwidth selection") {
    Rng rng(8);
    std::vector<double> x(200), y(200);
    for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] = rng.normal();
        y[k] = 2.0 * x[k] + 0.1 * rng.normal();
    }
    const auto grid = bandwidth_grid(silverman_bandwidth(x), 20, 0.1, 10.0);
    CHECK(grid.size() == 20);
    CHECK(grid.front() == doctest::Approx(0.1 * silverman_bandwidth(x)));
    CHECK(grid.back() == doctest::Approx(10.0 * silverman_bandwidth(x)));
    const double h = loo_cv_bandwidth(x, y, grid, RegressionMethod::kernel);
    CHECK(std::find(grid.begin(), grid.end(), h) != grid.end());
    const std::vector<double> single = {0.37};
    CHECK(loo_cv_bandwidth(x, y, single, RegressionMethod::kernel) == 0.37);
    CHECK_THROWS_AS(loo_cv_bandwidth(std::vector<double>{1, 2}, std::vector<double>{1, 2}, single, RegressionMethod::kernel),
                    TooFewSamples);
}

TEST_CASE("LOO bandwidth on independent y matches brute force") {
    const auto brute = [](const std::vector<double>& x, const std::vector<double>& y, const std::vector<double>& grid) {
        std::vector<double> errors;
        for (double h : grid) {
            double err = 0.0;
            for (std::size_t a = 0; a < x.size(); ++a) {
                double num = 0.0, den = 0.0, gap = INFINITY, nearest = 0.0;
                for (std::size_t b = 0; b < x.size(); ++b) {
                    if (a == b) continue;
                    if (std::abs(x[a] - x[b]) < gap) {
                        gap = std::abs(x[a] - x[b]);
                        nearest = y[b];
                    }
                    const double u = (x[a] - x[b]) / h;
                    const double k = std::exp(-0.5 * u * u);
                    num += k * y[b];
                    den += k;
                }
                const double r = y[a] - (den < 1e-300 ? nearest : num / den);
                err += r * r;
            }
            errors.push_back(err);
        }
        return errors;
    };
    int largest = 0, agree = 0;
    std::vector<int> picks(20, 0);
    for (int s = 0; s < 100; ++s) {
        Rng rng(1000 + s);
        std::vector<double> x(200), y(200);
        for (std::size_t k = 0; k < x.size(); ++k) {
            x[k] = rng.normal();
            y[k] = rng.normal();
        }
        const auto grid = bandwidth_grid(silverman_bandwidth(x), 20, 0.1, 10.0);
        const double h = loo_cv_bandwidth(x, y, grid, RegressionMethod::kernel);
        const auto errors = brute(x, y, grid);
        const auto k = static_cast<std::size_t>(std::find(grid.begin(), grid.end(), h) - grid.begin());
        agree += errors[k] <= *std::min_element(errors.begin(), errors.end()) * (1.0 + 1e-12);
        largest += h == grid.back();
        ++picks[k];
    }
    MESSAGE("largest bandwidth chosen in " << largest << " of 100 seeds");
    CHECK(agree == 100);
    CHECK(largest == 56);
    CHECK(*std::max_element(picks.begin(), picks.end()) == largest);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(fit(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2}), LengthMismatch);
    CHECK_THROWS_AS(fit(std::vector<double>{1, NAN, 3}, std::vector<double>{1, 2, 3}), NonFiniteInput);
    CHECK_THROWS_AS(fit(std::vector<double>{1}, std::vector<double>{1}), TooFewSamples);
    RegressionConfig bad;
    bad.rule = BandwidthRule::fixed;
    bad.fixed_bandwidth = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    RegressionConfig empty_grid;
    empty_grid.grid_size = 0;
    CHECK_THROWS_AS(empty_grid.validate(), InvalidArgument);
}

TEST_CASE("silverman rule uses the plug-in deviation") {
    const std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
    const double sd = std::sqrt(1.25);
    CHECK(silverman_bandwidth(x) == doctest::Approx(1.06 * sd * std::pow(4.0, -0.2)));
}
