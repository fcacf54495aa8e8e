#include "cat/learner.hpp"

#include <chrono>

namespace cat {

LearnResult learn_from_weights(WeightMatrix w, const ScoreOptions& opts) {
    Arborescence best = solve(w);
    LearnResult out{std::move(best.tree), std::move(w), best.score, {}, opts, 0.0};
    for (const Edge& e : out.tree.edges()) out.edges.push_back({e, out.weights(e.from, e.to)});
    return out;
}

LearnResult learn(const Dataset& d, const ScoreOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    LearnResult out = learn_from_weights(edge_weights(d, opts), opts);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace cat
