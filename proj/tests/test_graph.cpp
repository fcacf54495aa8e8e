#include <doctest.h>

#include <algorithm>

#include "cat/error.hpp"
#include "cat/graph.hpp"
#include "cat/rng.hpp"
#include "cat/simgen.hpp"

using namespace cat;

TEST_CASE("validate_tree accepts a chain and finds its root") {
    const DirectedTree t = validate_tree(3, {{0, 1}, {1, 2}});
    CHECK(t.root() == 0);
    CHECK(t.parent(1) == 0);
    CHECK(t.parent(2) == 1);
    CHECK(t.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("validate_tree rejects malformed edge sets") {
    CHECK_THROWS_AS(validate_tree(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
    CHECK_THROWS_AS(validate_tree(3, {{0, 2}, {1, 2}}), MultipleParentsError);
    CHECK_THROWS_AS(validate_tree(3, {{0, 1}}), DisconnectedError);
    CHECK_THROWS_AS(validate_tree(4, {{0, 1}, {2, 3}}), MultipleRootsError);
    CHECK_THROWS_AS(validate_tree(3, {{0, 0}, {1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(validate_tree(3, {{0, 1}, {1, 5}}), InvalidArgument);
}

TEST_CASE("single node tree") {
    const DirectedTree t = validate_tree(1, std::vector<Edge>{});
    CHECK(t.root() == 0);
    CHECK(t.edges().empty());
}

TEST_CASE("ancestors and descendants") {
    const DirectedTree chain = validate_tree(3, {{0, 1}, {1, 2}});
    CHECK(ancestors(chain, 2) == std::vector<Node>{0, 1});
    CHECK(ancestors(chain, 0).empty());
    CHECK(descendants(chain, 0) == std::vector<Node>{1, 2});
    CHECK_THROWS(ancestors(chain, 3));

    Rng rng(5);
    const DirectedTree t = generate_tree(20, TreeType::type1, rng);
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<Node> walk;
        for (Node v = t.parent(static_cast<Node>(i)); v != DirectedTree::kNoParent; v = t.parent(v)) walk.push_back(v);
        std::sort(walk.begin(), walk.end());
        CHECK(ancestors(t, static_cast<Node>(i)) == walk);
    }
}

TEST_CASE("Markov equivalence compares skeletons") {
    const DirectedTree a = validate_tree(3, {{0, 1}, {1, 2}});
    const DirectedTree b = validate_tree(3, {{2, 1}, {1, 0}});
    const DirectedTree c = validate_tree(3, {{0, 1}, {0, 2}});
    CHECK(is_markov_equivalent(a, b));
    CHECK_FALSE(is_markov_equivalent(a, c));
    CHECK(is_markov_equivalent(a, a));
    CHECK_THROWS_AS(is_markov_equivalent(a, validate_tree(2, {{0, 1}})), DimensionMismatchError);
}

TEST_CASE("reversed_path finds the reversed root-to-root path") {
    const DirectedTree a = validate_tree(3, {{0, 1}, {1, 2}});
    const DirectedTree b = validate_tree(3, {{2, 1}, {1, 0}});
    CHECK(reversed_path(a, b) == std::vector<Node>{0, 1, 2});

    const DirectedTree c = validate_tree(4, {{0, 1}, {1, 2}, {1, 3}});
    const DirectedTree d = validate_tree(4, {{2, 1}, {1, 0}, {1, 3}});
    CHECK(reversed_path(c, d) == std::vector<Node>{0, 1, 2});
    CHECK(reverse_path(c, reversed_path(c, d)) == d);

    CHECK_THROWS_AS(reversed_path(a, a), EqualTreesError);
    CHECK_THROWS_AS(reversed_path(a, validate_tree(3, {{0, 1}, {0, 2}})), NotEquivalentError);
}

TEST_CASE("tree enumeration counts") {
    CHECK(enumerate_trees(1).size() == 1);
    CHECK(enumerate_trees(2).size() == 2);
    CHECK(enumerate_trees(3).size() == 9);
    CHECK(enumerate_trees(4).size() == 64);
    CHECK(enumerate_trees(5).size() == 625);
    CHECK(enumerate_trees(6).size() == 7776);
    CHECK_THROWS_AS(enumerate_trees(kMaxEnumerationNodes + 1), InvalidArgument);

    auto all = enumerate_trees(4);
    std::vector<std::vector<Edge>> edge_sets;
    for (const auto& t : all) edge_sets.push_back(t.edges());
    std::sort(edge_sets.begin(), edge_sets.end());
    CHECK(std::unique(edge_sets.begin(), edge_sets.end()) == edge_sets.end());
}

TEST_CASE("Dag validation and queries") {
    const Dag g(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(g.parents(3) == std::vector<Node>{1, 2});
    CHECK(g.children(0) == std::vector<Node>{1, 2});
    CHECK(ancestors(g, 3) == std::vector<Node>{0, 1, 2});
    CHECK(descendants(g, 1) == std::vector<Node>{3});
    CHECK_THROWS_AS(Dag(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
    CHECK_THROWS_AS(Dag(2, {{1, 1}}), InvalidArgument);
    CHECK(Dag::from_tree(validate_tree(3, {{0, 1}, {1, 2}})) == Dag(3, {{1, 2}, {0, 1}}));
}

TEST_CASE("substructure invariants") {
    CHECK_THROWS_AS(Substructure::make({{0, 1}}, {{0, 1}}), InvalidSubstructureError);
    CHECK_THROWS_AS(Substructure::make({{0, 2}, {1, 2}}), InvalidSubstructureError);
    CHECK_THROWS_AS(Substructure::make({{0, 1}}, {}, 1), InvalidSubstructureError);
    CHECK_THROWS_AS(Substructure::make({{1, 1}}), InvalidSubstructureError);
    const Substructure r = Substructure::make({{0, 1}}, {{1, 2}}, 0);
    CHECK(r.satisfied_by(validate_tree(3, {{0, 1}, {0, 2}})));
    CHECK_FALSE(r.satisfied_by(validate_tree(3, {{0, 1}, {1, 2}})));
    CHECK_THROWS(r.check_nodes(2));
}
