#ifndef CAT_LEARNER_HPP
#define CAT_LEARNER_HPP

#include <vector>

#include "cat/arborescence.hpp"
#include "cat/dataset.hpp"
#include "cat/scoring.hpp"

namespace cat {

struct WeightedEdge {
    Edge edge;
    double weight;
};

struct LearnResult {
    DirectedTree tree;
    WeightMatrix weights{2};
    double score = 0.0;
    // the tree's edges in sorted order with their weights
    std::vector<WeightedEdge> edges;
    ScoreOptions options;
    double seconds = 0.0;
};

// Scores every ordered pair and returns the minimum-weight spanning tree.
LearnResult learn(const Dataset& d, const ScoreOptions& opts = {});

// Same, starting from an existing weight matrix.
LearnResult learn_from_weights(WeightMatrix w, const ScoreOptions& opts = {});

}  // namespace cat

#endif  // CAT_LEARNER_HPP
