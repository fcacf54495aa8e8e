#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cat/arborescence.hpp"
#include "cat/error.hpp"
#include "cat/identifiability.hpp"
#include "cat/oracles.hpp"
#include "cat/rng.hpp"
#include "cat/simgen.hpp"

using namespace cat;

TEST_CASE("closed-form reversal bounds") {
    const ReversalBounds unit = gaussian_reversal_bounds(1.0, 1.0);
    CHECK(std::abs(unit.gauss_bound - 0.5 * std::log(2.0)) < 1e-12);
    CHECK(std::abs(unit.gauss_bound - 0.34657) < 1e-5);

    const double threshold = std::numbers::pi * std::numbers::e / 2.0 - 1.0;
    CHECK(std::abs(threshold - 3.27) < 0.01);
    const ReversalBounds at = gaussian_reversal_bounds(threshold, 1.0);
    CHECK(std::abs(at.logconcave_bound) < 1e-12);
    CHECK_FALSE(at.logconcave_nontrivial);
    CHECK(gaussian_reversal_bounds(threshold * 1.001, 1.0).logconcave_nontrivial);

    CHECK(gaussian_reversal_bounds(1e-12, 1.0).gauss_bound < 1e-11);
    CHECK_THROWS_AS(gaussian_reversal_bounds(0.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(gaussian_reversal_bounds(1.0, -1.0), InvalidArgument);
}

TEST_CASE("edge reversal gap on the bivariate family") {
    const Simulation linear = sample_scm(bivariate_spec(1.0, 1.0), 50000, Rng(1));
    CHECK(std::abs(edge_reversal_gap(linear.data.column(0), linear.data.column(1))) < 0.02);
    const Simulation cubic = sample_scm(bivariate_spec(0.0, 1.0), 50000, Rng(2));
    CHECK(edge_reversal_gap(cubic.data.column(0), cubic.data.column(1)) > 0.1);

    Rng rng(3);
    std::vector<double> x(5000), y(5000);
    for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] = rng.normal();
        y[k] = rng.normal();
    }
    CHECK(std::abs(edge_reversal_gap(x, y)) < 0.03);
}

TEST_CASE("minimum edge reversal") {
    SUBCASE("two nodes reduce to the single edge") {
        const Simulation sim = sample_scm(bivariate_spec(0.5, 1.0), 3000, Rng(4));
        const DirectedTree t = validate_tree(2, {{0, 1}});
        ScoreOptions opts;
        const EdgeEstimate e = min_edge_reversal(sim.data, t, opts);
        EntropyConfig ent;
        ent.seed = splitmix64(0 ^ splitmix64(0));
        CHECK(e.edge == Edge{0, 1});
        CHECK(e.value == edge_reversal_gap(sim.data.column(0), sim.data.column(1), opts.regression, ent));
    }
    SUBCASE("the linear edge of a mixed chain is the weakest") {
        int linear_first = 0;
        for (int s = 0; s < 20; ++s) {
            ScmSpec spec;
            spec.graph = Dag(3, {{0, 1}, {1, 2}});
            spec.mechanisms = {ExplicitMechanism{Shape::linear, 1.0, 1.0}, ExplicitMechanism{Shape::cubic, 0.0, 0.3}};
            spec.noise = {{1.0, 1.0}, {1.0, 1.0}, {0.5, 1.0}};
            const Simulation sim = sample_scm(spec, 5000, Rng(40 + s));
            const EdgeEstimate e = min_edge_reversal(sim.data, validate_tree(3, {{0, 1}, {1, 2}}));
            linear_first += e.edge == Edge{0, 1};
        }
        CHECK(linear_first >= 18);
    }
}

TEST_CASE("neighbour triples") {
    CHECK(pi_w_triples(validate_tree(3, {{0, 1}, {1, 2}})) == std::vector<Triple>{{1, 2, 0}});
    CHECK(pi_w_triples(validate_tree(3, {{0, 1}, {0, 2}})) == std::vector<Triple>{{0, 1, 2}, {0, 2, 1}});
    CHECK(pi_w_triples(validate_tree(2, {{0, 1}})).empty());

    const Simulation sim = sample_scm(bivariate_spec(0.5, 1.0), 500, Rng(5));
    CHECK_THROWS_AS(piW_min_cmi(sim.data, validate_tree(2, {{0, 1}})), NoTriplesError);

    SimConfig cfg;
    cfg.p = 3;
    cfg.n = 2000;
    cfg.seed = 6;
    const Simulation chain = simulate(cfg);
    const TripleEstimate t = piW_min_cmi(chain.data, chain.tree);
    const auto triples = pi_w_triples(chain.tree);
    CHECK(std::find(triples.begin(), triples.end(), t.triple) != triples.end());
    CHECK(std::isfinite(t.value));
}

TEST_CASE("score gap agrees with enumeration") {
    Rng rng(7);
    const auto all = enumerate_trees(5);
    for (int k = 0; k < 50; ++k) {
        WeightMatrix w(5);
        for (Node j = 0; j < 5; ++j)
            for (Node i = 0; i < 5; ++i)
                if (i != j) w.set(j, i, rng.uniform(-1.0, 0.0));
        const GapReport g = score_gap(w);
        const auto ranked = oracle::rank_trees(w, all);
        CHECK(std::abs(g.gap - (ranked.scores[1] - ranked.scores[0])) < 1e-12);
        CHECK(g.gap >= -1e-12);
    }
    WeightMatrix two(2);
    two.set(0, 1, -0.3);
    two.set(1, 0, -0.8);
    CHECK(score_gap(two).gap == doctest::Approx(0.5));
}

TEST_CASE("gap report on data") {
    SimConfig cfg;
    cfg.p = 4;
    cfg.n = 2000;
    cfg.seed = 8;
    const Simulation sim = simulate(cfg);
    const GapReport g = estimate_identifiability_gap(sim.data, {}, true);
    CHECK(g.gap >= 0.0);
    REQUIRE(g.min_reversal);
    REQUIRE(g.piw);
    CHECK(g.best_tree.has_edge(g.min_reversal->edge.from, g.min_reversal->edge.to));
}
