#include <doctest.h>

#include <cmath>

#include "cat/error.hpp"
#include "cat/experiments.hpp"
#include "cat/rng.hpp"
#include "cat/scoring.hpp"
#include "cat/simgen.hpp"

using namespace cat;

namespace {

std::size_t leaves(const DirectedTree& t) {
    std::size_t count = 0;
    for (const auto& c : t.children()) count += c.empty();
    return count;
}

double mean(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("Type 2 with two nodes") {
    for (int s = 0; s < 20; ++s) {
        Rng rng(s);
        CHECK(generate_tree(2, TreeType::type2, rng).edges() == std::vector<Edge>{{0, 1}});
    }
}

TEST_CASE("Type 1 with three nodes forks with probability 0.1") {
    int forks = 0;
    for (int s = 0; s < 10000; ++s) {
        Rng rng(s);
        const DirectedTree t = generate_tree(3, TreeType::type1, rng);
        if (t.edges() == std::vector<Edge>{{0, 1}, {0, 2}}) ++forks;
        else CHECK(t.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    }
    CHECK(std::abs(forks / 10000.0 - 0.1) < 0.02);
}

TEST_CASE("Type 2 trees have fewer leaves than Type 1") {
    double l1 = 0.0, l2 = 0.0;
    for (int s = 0; s < 50; ++s) {
        Rng a(s), b(s + 1000);
        l1 += static_cast<double>(leaves(generate_tree(100, TreeType::type1, a)));
        l2 += static_cast<double>(leaves(generate_tree(100, TreeType::type2, b)));
    }
    CHECK(l2 < l1);
}

TEST_CASE("GP mechanism draws") {
    Rng rng(1);
    const std::vector<double> one = {0.3};
    const auto v = sample_gp_mechanism(one, 1.0, rng);
    CHECK(v.size() == 1);

    const std::vector<double> same = {0.5, 0.5, 2.0};
    const auto w = sample_gp_mechanism(same, 1.0, rng);
    CHECK(std::abs(w[0] - w[1]) < 1e-4);

    const std::vector<double> xs = {-1.0, 0.0, 0.5, 2.0};
    const std::size_t draws = 2000;
    std::vector<std::vector<double>> samples;
    for (std::size_t k = 0; k < draws; ++k) samples.push_back(sample_gp_mechanism(xs, 1.0, rng));
    for (std::size_t a = 0; a < xs.size(); ++a) {
        for (std::size_t b = 0; b < xs.size(); ++b) {
            double c = 0.0;
            for (const auto& s : samples) c += s[a] * s[b];
            c /= static_cast<double>(draws);
            const double k = std::exp(-(xs[a] - xs[b]) * (xs[a] - xs[b]) / 2.0);
            CHECK(std::abs(c - k) < 0.1);
        }
    }

    std::vector<double> many(2000);
    for (std::size_t k = 0; k < many.size(); ++k) many[k] = -3.0 + 6.0 * static_cast<double>(k) / 1999.0;
    const auto big = sample_gp_mechanism(many, 1.0, rng);
    CHECK(big.size() == many.size());
    for (std::size_t k = 1; k < many.size(); ++k) CHECK(std::abs(big[k] - big[k - 1]) < 0.1);
}

TEST_CASE("GP paths interpolate and stay flat outside the knots") {
    const GpPath f{{0.0, 1.0, 2.0}, {1.0, 3.0, 2.0}};
    CHECK(f(0.5) == 2.0);
    CHECK(f(1.5) == 2.5);
    CHECK(f(-5.0) == 1.0);
    CHECK(f(7.0) == 2.0);
}

TEST_CASE("noise draws") {
    Rng rng(2);
    const std::size_t n = 20000;
    const auto g = sample_noise(n, 0.7, 1.0, rng);
    const double m = mean(g);
    double var = 0.0, m4 = 0.0;
    for (double x : g) var += (x - m) * (x - m);
    var /= static_cast<double>(n);
    CHECK(std::abs(m) < 3.0 * 0.7 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(std::sqrt(var) - 0.7) < 3.0 * 0.7 / std::sqrt(2.0 * static_cast<double>(n)));

    const auto h = sample_noise(n, 1.0, 2.0, rng);
    const double mh = mean(h);
    double vh = 0.0;
    for (double x : h) {
        vh += (x - mh) * (x - mh);
        m4 += std::pow(x - mh, 4);
    }
    vh /= static_cast<double>(n);
    m4 /= static_cast<double>(n);
    CHECK(m4 / (vh * vh) > 3.0);
    for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
        const auto v = sample_noise(n, 1.0, alpha, rng);
        double sd = 0.0;
        for (double x : v) sd += x * x;
        sd = std::sqrt(sd / static_cast<double>(n));
        CHECK(std::abs(mean(v)) < 4.0 * sd / std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("SCM sampling") {
    SUBCASE("single node is pure noise") {
        ScmSpec spec;
        spec.graph = Dag(1, {});
        spec.noise = {{1.5, 1.0}};
        const Rng rng(3);
        const Simulation sim = sample_scm(spec, 100, rng);
        Rng noise_rng = rng.split(0);
        CHECK(std::vector<double>(sim.data.column(0).begin(), sim.data.column(0).end()) == sample_noise(100, 1.5, 1.0, noise_rng));
    }
    SUBCASE("linear Gaussian covariance") {
        ScmSpec spec;
        spec.graph = Dag(3, {{0, 1}, {0, 2}, {1, 2}});
        spec.mechanisms = {ExplicitMechanism{Shape::linear, 1.0, 2.0}, ExplicitMechanism{Shape::linear, 1.0, -1.0},
                           ExplicitMechanism{Shape::linear, 1.0, 0.5}};
        spec.noise = {{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}};
        const Simulation sim = sample_scm(spec, 100000, Rng(4));
        // X1 = 2 X0 + N1, X2 = -X0 + 0.5 X1 + N2 = 0.5 N1 + N2
        const double expected[3][3] = {{1.0, 2.0, 0.0}, {2.0, 5.0, 0.5}, {0.0, 0.5, 1.25}};
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                const double ma = mean(sim.data.column(a)), mb = mean(sim.data.column(b));
                double c = 0.0;
                for (std::size_t k = 0; k < 100000; ++k) c += (sim.data(k, a) - ma) * (sim.data(k, b) - mb);
                c /= 100000.0;
                if (expected[a][b] == 0.0) CHECK(std::abs(c) < 0.02);
                else CHECK(std::abs(c - expected[a][b]) < 0.05 * std::abs(expected[a][b]));
            }
        }
    }
    SUBCASE("bivariate family") {
        const Simulation sim = sample_scm(bivariate_spec(0.3, 2.0), 1000, Rng(5));
        CHECK(sim.truth == Dag(2, {{0, 1}}));
        const ScmSpec spec = bivariate_spec(0.3, 2.0);
        const auto& f = std::get<ExplicitMechanism>(spec.mechanisms[0]);
        CHECK(f(2.0) == doctest::Approx(0.7 * 8.0 + 0.3 * 2.0));
        CHECK(spec.noise[0].alpha == 2.0);
    }
    SUBCASE("invalid specifications") {
        ScmSpec spec;
        spec.graph = Dag(2, {{0, 1}});
        spec.noise = {{1.0, 1.0}, {1.0, 1.0}};
        CHECK_THROWS_AS(spec.validate(), InvalidArgument);
        spec.mechanisms = {GpPrior{}};
        spec.noise[1].sigma = 0.0;
        CHECK_THROWS_AS(spec.validate(), InvalidArgument);
    }
}

TEST_CASE("DAG extension") {
    Rng rng(6);
    const DirectedTree t = generate_tree(6, TreeType::type2, rng);
    CHECK(extend_to_dag(t, 0.0, rng) == Dag::from_tree(t));
    CHECK(extend_to_dag(t, 1.0, rng).edges().size() == 15);

    double added = 0.0;
    const int reps = 200;
    for (int s = 0; s < reps; ++s) {
        Rng r(100 + s);
        const DirectedTree tree = generate_tree(32, TreeType::type1, r);
        added += static_cast<double>(extend_to_dag(tree, 0.05, r).edges().size() - 31);
    }
    const double expected = 0.05 * (32.0 * 31.0 / 2.0 - 31.0);
    CHECK(std::abs(added / reps - expected) < 0.1 * expected);
}

TEST_CASE("simulation protocol") {
    SimConfig cfg;
    cfg.p = 16;
    cfg.n = 500;
    cfg.seed = 7;
    const Simulation a = simulate(cfg), b = simulate(cfg);
    CHECK(a.data == b.data);
    CHECK(a.data.p() == 16);
    CHECK(a.data.n() == 500);
    CHECK(a.truth == Dag::from_tree(a.tree));
    CHECK(a.data.names().front() == "X1");
    cfg.seed = 8;
    CHECK_FALSE(simulate(cfg).data == a.data);
    cfg.extra_edge_prob = 0.3;
    const Simulation dag = simulate(cfg);
    CHECK(dag.truth.edges().size() > 15);
    CHECK(dag.spec.mechanisms.size() == dag.truth.edges().size());
}
