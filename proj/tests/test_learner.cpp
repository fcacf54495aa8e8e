#include <doctest.h>

#include <cmath>

#include "cat/arborescence.hpp"
#include "cat/dataset.hpp"
#include "cat/io.hpp"
#include "cat/learner.hpp"
#include "cat/rng.hpp"

using namespace cat;

TEST_CASE("cubic pair is oriented from cause to effect") {
    int correct = 0;
    for (int s = 0; s < 100; ++s) {
        Rng rng(500 + s);
        const std::size_t n = 2000;
        std::vector<double> x(n), y(n);
        for (std::size_t k = 0; k < n; ++k) {
            x[k] = rng.normal();
            y[k] = x[k] * x[k] * x[k] / std::sqrt(15.0) + 0.5 * rng.normal();
        }
        const LearnResult r = learn(Dataset::from_columns({x, y}));
        correct += r.tree.has_edge(0, 1);
    }
    MESSAGE("correct orientation in " << correct << " of 100 seeds");
    CHECK(correct >= 95);
}

TEST_CASE("independent noise still yields a tree") {
    Rng rng(1);
    std::vector<std::vector<double>> cols(4, std::vector<double>(200));
    for (auto& c : cols)
        for (double& v : c) v = rng.normal();
    const LearnResult r = learn(Dataset::from_columns(cols));
    CHECK(r.tree.size() == 4);
    CHECK(r.tree.edges().size() == 3);
}

TEST_CASE("result fields are consistent") {
    Rng rng(2);
    std::vector<std::vector<double>> cols(3, std::vector<double>(300));
    for (std::size_t k = 0; k < 300; ++k) {
        cols[0][k] = rng.normal();
        cols[1][k] = std::sin(cols[0][k]) + 0.3 * rng.normal();
        cols[2][k] = cols[1][k] * cols[1][k] + 0.3 * rng.normal();
    }
    for (ScoreKind kind : {ScoreKind::gaussian, ScoreKind::entropy, ScoreKind::cmi_skeleton}) {
        ScoreOptions opts;
        opts.kind = kind;
        const LearnResult r = learn(Dataset::from_columns(cols), opts);
        CHECK(r.score == tree_score(r.weights, r.tree));
        REQUIRE(r.edges.size() == 2);
        for (const WeightedEdge& e : r.edges) CHECK(e.weight == r.weights(e.edge.from, e.edge.to));
        CHECK(read_tree_json(tree_json(r.tree)) == r.tree);
        CHECK(r.options.kind == kind);
    }
}

TEST_CASE("split learning is reproducible") {
    Rng rng(3);
    std::vector<std::vector<double>> cols(3, std::vector<double>(400));
    for (std::size_t k = 0; k < 400; ++k) {
        cols[0][k] = rng.normal();
        cols[1][k] = cols[0][k] + 0.5 * rng.normal();
        cols[2][k] = cols[1][k] + 0.5 * rng.normal();
    }
    ScoreOptions opts;
    opts.split = true;
    const Dataset d = Dataset::from_columns(cols);
    const LearnResult a = learn(d, opts), b = learn(d, opts);
    CHECK(a.weights == b.weights);
    CHECK(a.tree == b.tree);
}
