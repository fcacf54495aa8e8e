#ifndef CAT_EXPERIMENTS_HPP
#define CAT_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cat {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
    std::string csv() const;
};

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

struct ExperimentResult {
    std::string name;
    Table table;
    std::vector<Check> checks;
    double seconds = 0.0;

    bool pass() const;
};

struct ExperimentOptions {
    std::uint64_t seed = 1;
    unsigned threads = 0;
    // smaller grids/settings where an experiment offers them
    bool coarse = false;
    // 0 keeps each experiment's default replicate count
    std::size_t replicates = 0;
    // progress lines, may be null
    std::ostream* log = nullptr;
};

// Exhaustive comparison of solve / second_best / solve_constrained on random matrices.
ExperimentResult run_solver_exactness(const ExperimentOptions& opts);
// Three-node weights where greedy search fails.
ExperimentResult run_worked_example(const ExperimentOptions& opts);
// Gaussian-score recovery of GP trees (p = 16, Type 2, n = 500).
ExperimentResult run_gauss_trees(const ExperimentOptions& opts);
// Gaussian versus entropy score under alpha-deformed noise (Type 1 trees).
ExperimentResult run_nongauss(const ExperimentOptions& opts);
// Edge-reversal gap over the (lambda, alpha) grid of the bivariate model, n = 50000.
ExperimentResult run_bivariate_gap(const ExperimentOptions& opts);
// Score gap to the runner-up tree against the minimum edge reversal (p = 8, n = 50000).
ExperimentResult run_multivariate_gap(const ExperimentOptions& opts);
// Closed-form reversal bounds.
ExperimentResult run_closed_form_bounds(const ExperimentOptions& opts);
// Level and power of the substructure test (p = 4, n = 4000).
ExperimentResult run_test_level(const ExperimentOptions& opts);
// Entropy and mutual information estimators against closed forms.
ExperimentResult run_estimators(const ExperimentOptions& opts);
// CAT on single-rooted DAGs: SHD, SID and ancestor rates.
ExperimentResult run_dag_robustness(const ExperimentOptions& opts);
// Randomised invariant checks across all modules.
ExperimentResult run_properties(const ExperimentOptions& opts);

std::vector<std::string> experiment_names();
// Throws InvalidArgument for an unknown name.
ExperimentResult run_experiment(const std::string& name, const ExperimentOptions& opts);

double median(std::vector<double> values);

}  // namespace cat

#endif  // CAT_EXPERIMENTS_HPP
