#include <doctest.h>

#include <cmath>

#include "cat/arborescence.hpp"
#include "cat/dataset.hpp"
#include "cat/error.hpp"
#include "cat/inference.hpp"
#include "cat/rng.hpp"
#include "cat/scoring.hpp"
#include "cat/simgen.hpp"

using namespace cat;

namespace {

PredictorTable constant_table(std::size_t p, double c) {
    return PredictorTable(p, std::vector<Predictor>(pair_count(p), Predictor::constant(c)));
}

WeightMatrix greedy_trap() {
    WeightMatrix w(3);
    w.set(0, 1, -0.46);
    w.set(1, 2, -0.95);
    w.set(2, 1, -1.00);
    w.set(1, 0, -0.28);
    w.set(2, 0, -0.17);
    w.set(0, 2, -0.26);
    return w;
}

}  // namespace

TEST_CASE("moments of a two-row evaluation set") {
    // rows (X0, X1): (1, 2), (3, 6)
    const std::vector<double> rows = {1.0, 2.0, 3.0, 6.0};
    const Dataset eval(2, 2, rows);
    const MomentStats ms = moment_statistics(eval, constant_table(2, 1.0));
    CHECK(ms.n_eval == 2);
    // pair 0 is 0 -> 1 with squared residuals {1, 25}; pair 1 is 1 -> 0 with {0, 4}
    CHECK(ms.mu(0) == 13.0);
    CHECK(ms.mu(1) == 2.0);
    CHECK(ms.nu(0) == 1.0);
    CHECK(ms.nu(1) == 4.0);
    CHECK(ms.sigma_m(0, 0) == 144.0);
    CHECK(ms.sigma_m(0, 1) == 24.0);
    CHECK(ms.sigma_m(1, 0) == 24.0);
    CHECK(ms.sigma_m(1, 1) == 4.0);
    CHECK(ms.sigma_v.norm() == 0.0);
    CHECK(ms.sigma_mv.norm() == 0.0);

    const ConfidenceBounds cb = confidence_bounds(ms, 0.05);
    const double z = bonferroni_z(0.05, 2);
    CHECK(cb.z == z);
    CHECK(std::abs(cb.sigma(0, 1) - 12.0 / 13.0) < 1e-12);
    CHECK(std::abs(cb.center(0, 1) - 0.5 * std::log(13.0 / 4.0)) < 1e-12);
    CHECK(std::abs(cb.upper(0, 1) - (0.5 * std::log(13.0 / 4.0) + z * (12.0 / 13.0) / (2.0 * std::sqrt(2.0)))) < 1e-10);
    CHECK(std::abs(cb.lower(1, 0) - (0.5 * std::log(2.0 / 1.0) - z * 1.0 / (2.0 * std::sqrt(2.0)))) < 1e-10);
}

TEST_CASE("full pipeline on four rows uses two for training") {
    const std::vector<double> rows = {5.0, 1.0, 7.0, 3.0, 1.0, 2.0, 3.0, 6.0};
    const Dataset d(4, 2, rows);
    const MomentStats ms = moment_statistics(d, ScoreOptions{});
    CHECK(ms.n_eval == 2);
    CHECK(ms.nu(0) == 1.0);
    CHECK(ms.nu(1) == 4.0);
}

TEST_CASE("duplicated evaluation rows leave the covariance blocks unchanged") {
    const Simulation sim = simulate(SimConfig{3, 200});
    const PredictorTable f = fit_predictors(sim.data.rows(0, 100), {}, 1);
    const Dataset eval = sim.data.rows(100, 100);
    std::vector<std::vector<double>> doubled(eval.p());
    for (std::size_t c = 0; c < eval.p(); ++c) {
        for (double v : eval.column(c)) {
            doubled[c].push_back(v);
            doubled[c].push_back(v);
        }
    }
    const MomentStats a = moment_statistics(eval, f);
    const MomentStats b = moment_statistics(Dataset::from_columns(doubled), f);
    CHECK((a.sigma_m - b.sigma_m).cwiseAbs().maxCoeff() < 1e-10 * (1.0 + a.sigma_m.cwiseAbs().maxCoeff()));
    CHECK((a.sigma_v - b.sigma_v).cwiseAbs().maxCoeff() < 1e-10 * (1.0 + a.sigma_v.cwiseAbs().maxCoeff()));
    CHECK((a.sigma_mv - b.sigma_mv).cwiseAbs().maxCoeff() < 1e-10 * (1.0 + a.sigma_mv.cwiseAbs().maxCoeff()));
    CHECK(a.sigma_m.diagonal().minCoeff() >= 0.0);
    CHECK((a.sigma_m - a.sigma_m.transpose()).cwiseAbs().maxCoeff() < 1e-12 * a.sigma_m.cwiseAbs().maxCoeff());
    CHECK(b.n_eval == 200);
}

TEST_CASE("zero covariance collapses the interval") {
    // squared residuals and squared centered values are constant
    const std::vector<double> rows = {0.0, 2.0, 2.0, 0.0};
    const MomentStats ms = moment_statistics(Dataset(2, 2, rows), constant_table(2, 1.0));
    const ConfidenceBounds cb = confidence_bounds(ms, 1.0 - 1e-9);
    CHECK(cb.lower == cb.upper);
    CHECK(cb.lower == cb.center);
}

TEST_CASE("zero moments are rejected") {
    const std::vector<double> rows = {1.0, 2.0, 1.0, 4.0};
    const MomentStats ms = moment_statistics(Dataset(2, 2, rows), constant_table(2, 1.0));
    CHECK_THROWS_AS(confidence_bounds(ms, 0.05), ZeroMomentError);
}

TEST_CASE("normal quantiles") {
    CHECK(std::abs(normal_quantile(0.975) - 1.959963984540054) < 1e-12);
    CHECK(std::abs(normal_quantile(0.5)) < 1e-15);
    CHECK(std::abs(normal_quantile(1e-10) + 6.361340902404056) < 1e-9);
    CHECK(std::abs(normal_quantile(0.0125) + 2.241402727604947) < 1e-12);
    CHECK(std::abs(bonferroni_z(0.05, 2) - 2.241402727604947) < 1e-12);
    CHECK_THROWS_AS(normal_quantile(0.0), InvalidArgument);
    CHECK_THROWS_AS(normal_quantile(1.0), InvalidArgument);
}

TEST_CASE("test decisions with degenerate bounds") {
    const WeightMatrix w = greedy_trap();
    const TestResult keep = test_substructure(w, w, Substructure::make({{0, 1}}));
    CHECK_FALSE(keep.reject);
    CHECK(keep.s_restricted == keep.s_upper);

    const TestResult reject = test_substructure(w, w, Substructure::make({{2, 1}}));
    CHECK(reject.reject);
    CHECK(reject.s_restricted == doctest::Approx(-1.28));
    CHECK(reject.s_upper == doctest::Approx(-1.41));

    WeightMatrix v(3);
    v.forbid(0, 1);
    v.forbid(2, 1);
    const TestResult infeasible = test_substructure(v, v, Substructure::make({}, {}, 0));
    CHECK(infeasible.reject);
    CHECK(std::isinf(infeasible.s_restricted));
}

TEST_CASE("true constraints on simulated trees are kept") {
    int rejections = 0;
    for (int s = 0; s < 20; ++s) {
        SimConfig cfg;
        cfg.p = 4;
        cfg.n = 4000;
        cfg.seed = 300 + s;
        const Simulation sim = simulate(cfg);
        const Edge e = sim.tree.edges().front();
        rejections += test_substructure(sim.data, Substructure::make({e}, {}, sim.tree.root()), 0.05).result.reject;
    }
    CHECK(rejections <= 3);
}
