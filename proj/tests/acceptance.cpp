#include <cstdio>
#include <string>
#include <vector>

#include "cat/experiments.hpp"

using namespace cat;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::string experiment;
    double time_limit;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "solver exactness", "solver-exactness", 30.0},
        {2, "worked example", "worked-example", 0.0},
        {3, "Gaussian tree recovery", "gauss-trees", 600.0},
        {4, "non-Gaussian crossover", "nongauss", 0.0},
        {5, "bivariate gap corners", "bivariate-gap", 0.0},
        {6, "multivariate gap vs edge reversal", "multivariate-gap", 0.0},
        {7, "closed-form bounds", "closed-form-bounds", 0.0},
        {8, "test level and power", "test-level", 0.0},
        {9, "estimator sanity", "estimators", 0.0},
        {10, "property suites", "properties", 0.0},
    };

    ExperimentOptions opts;
    opts.seed = 1;
    opts.coarse = true;

    int failed = 0;
    for (const Criterion& c : criteria) {
        bool pass = true;
        std::string detail;
        try {
            const ExperimentResult res = run_experiment(c.experiment, opts);
            for (const Check& check : res.checks) {
                if (!check.pass) {
                    pass = false;
                    if (!detail.empty()) detail += "; ";
                    detail += check.name + " (" + check.detail + ")";
                }
            }
            if (c.time_limit > 0.0 && res.seconds >= c.time_limit) {
                pass = false;
                if (!detail.empty()) detail += "; ";
                detail += "took " + std::to_string(res.seconds) + " s, limit " + std::to_string(c.time_limit) + " s";
            }
            if (pass) {
                for (const Check& check : res.checks) {
                    if (!detail.empty()) detail += "; ";
                    detail += check.name + (check.detail.empty() ? "" : " (" + check.detail + ")");
                }
            }
            std::printf("%s criterion %d: %s [%.1f s] %s\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
                        res.seconds, detail.c_str());
        } catch (const std::exception& e) {
            pass = false;
            std::printf("FAIL criterion %d: %s error: %s\n", c.number, c.title.c_str(), e.what());
        }
        std::fflush(stdout);
        failed += !pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
