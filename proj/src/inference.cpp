#include "cat/inference.hpp"

#include <cmath>
#include <limits>

#include "cat/error.hpp"

namespace cat {

namespace {

template <std::size_t N>
double horner(const double (&c)[N], double x) {
    double v = c[N - 1];
    for (std::size_t k = N - 1; k-- > 0;) v = v * x + c[k];
    return v;
}

}  // namespace

double normal_quantile(double prob) {
    if (!(prob > 0.0 && prob < 1.0)) throw InvalidArgument("quantile probability must lie in (0, 1)");
    static constexpr double a[] = {3.387132872796366608,   133.14166789178437745, 1971.5909503065514427,
                                   13731.693765509461125,  45921.953931549871457, 67265.770927008700853,
                                   33430.575583588128105,  2509.0809287301226727};
    static constexpr double b[] = {1.0,                    42.313330701600911252, 687.1870074920579083,
                                   5394.1960214247511077,  21213.794301586595867, 39307.89580009271061,
                                   28729.085735721942674,  5226.495278852545925};
    static constexpr double c[] = {1.42343711074968357734, 4.6303378461565452959,    5.7694972214606914055,
                                   3.64784832476320460504, 1.27045825245236838258,   0.24178072517745061177,
                                   0.0227238449892691845833, 7.7454501427834140764e-4};
    static constexpr double d[] = {1.0,                     2.05319162663775882187,   1.6763848301838038494,
                                   0.68976733498510000455,  0.14810397642748007459,   0.0151986665636164571966,
                                   5.475938084995344946e-4, 1.05075007164441684324e-9};
    static constexpr double e[] = {6.6579046435011037772,    5.4637849111641143699,     1.7848265399172913358,
                                   0.29656057182850489123,   0.026532189526576123093,   0.0012426609473880784386,
                                   2.71155556874348757815e-5, 2.01033439929228813265e-7};
    static constexpr double f[] = {1.0,                      0.59983220655588793769,    0.13692988092273580531,
                                   0.0148753612908506148525, 7.868691311456132591e-4,   1.8463183175100546818e-5,
                                   1.4215117583164458887e-7, 2.04426310338993978564e-15};
    const double q = prob - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q * horner(a, r) / horner(b, r);
    }
    double r = q < 0.0 ? prob : 1.0 - prob;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        value = horner(c, r) / horner(d, r);
    } else {
        r -= 5.0;
        value = horner(e, r) / horner(f, r);
    }
    return q < 0.0 ? -value : value;
}

double bonferroni_z(double alpha, std::size_t pairs) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
    if (pairs == 0) throw InvalidArgument("need at least one pair");
    return -normal_quantile(alpha / (2.0 * static_cast<double>(pairs)));
}

MomentStats moment_statistics(const Dataset& eval, const PredictorTable& f) {
    const std::size_t p = eval.p();
    const std::size_t n = eval.n();
    if (f.size() != p) throw DimensionMismatchError("predictor table and dataset sizes differ");
    if (n < 2) throw TooFewSamples("moment statistics need at least two evaluation rows");
    const std::size_t pairs = pair_count(p);
    Eigen::MatrixXd m(n, pairs);
    Eigen::MatrixXd v(n, p);
    for (std::size_t i = 0; i < p; ++i) {
        const auto col = eval.column(i);
        double mean = 0.0;
        for (double x : col) mean += x;
        mean /= static_cast<double>(n);
        for (std::size_t k = 0; k < n; ++k) v(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = (col[k] - mean) * (col[k] - mean);
    }
    for (std::size_t k = 0; k < pairs; ++k) {
        const Edge e = pair_edge(p, k);
        const auto r = residuals(eval, f(e.from, e.to), e.from, e.to);
        for (std::size_t row = 0; row < n; ++row) m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(k)) = r[row] * r[row];
    }
    MomentStats ms;
    ms.p = p;
    ms.n_eval = n;
    ms.mu = m.colwise().mean().transpose();
    ms.nu = v.colwise().mean().transpose();
    const Eigen::MatrixXd mc = m.rowwise() - ms.mu.transpose();
    const Eigen::MatrixXd vc = v.rowwise() - ms.nu.transpose();
    const double inv = 1.0 / static_cast<double>(n);
    ms.sigma_m = (mc.transpose() * mc) * inv;
    ms.sigma_v = (vc.transpose() * vc) * inv;
    ms.sigma_mv = (mc.transpose() * vc) * inv;
    return ms;
}

MomentStats moment_statistics(const Dataset& d, const ScoreOptions& opts) {
    if (d.p() < 2) throw InvalidArgument("need at least two variables");
    if (d.n() < 4) throw TooFewSamples("sample splitting needs at least four rows");
    const SplitData halves = split_halves(d);
    const PredictorTable f = fit_predictors(halves.train, opts.regression, opts.threads);
    return moment_statistics(halves.eval, f);
}

ConfidenceBounds confidence_bounds(const MomentStats& ms, double alpha) {
    const std::size_t p = ms.p;
    const std::size_t pairs = pair_count(p);
    if (p < 2 || static_cast<std::size_t>(ms.mu.size()) != pairs || static_cast<std::size_t>(ms.nu.size()) != p) {
        throw DimensionMismatchError("moment statistics have inconsistent sizes");
    }
    ConfidenceBounds cb;
    cb.alpha = alpha;
    cb.z = bonferroni_z(alpha, pairs);
    cb.lower = WeightMatrix(p);
    cb.upper = WeightMatrix(p);
    cb.center = WeightMatrix(p);
    cb.sigma = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    const double scale = cb.z / (2.0 * std::sqrt(static_cast<double>(ms.n_eval)));
    for (std::size_t k = 0; k < pairs; ++k) {
        const Edge e = pair_edge(p, k);
        const auto kk = static_cast<Eigen::Index>(k);
        const auto ii = static_cast<Eigen::Index>(e.to);
        const double mu = ms.mu(kk);
        const double nu = ms.nu(ii);
        if (mu <= 0.0 || nu <= 0.0) throw ZeroMomentError("a mean moment is zero");
        double var = ms.sigma_m(kk, kk) / (mu * mu) + ms.sigma_v(ii, ii) / (nu * nu) - 2.0 * ms.sigma_mv(kk, ii) / (mu * nu);
        if (var < 0.0) {
            var = 0.0;
            cb.clamped = true;
        }
        const double sigma = std::sqrt(var);
        const double center = 0.5 * std::log(mu / nu);
        cb.sigma(static_cast<Eigen::Index>(e.from), ii) = sigma;
        cb.center.set(e.from, e.to, center);
        cb.lower.set(e.from, e.to, center - scale * sigma);
        cb.upper.set(e.from, e.to, center + scale * sigma);
    }
    return cb;
}

TestResult test_substructure(const WeightMatrix& lower, const WeightMatrix& upper, const Substructure& r) {
    if (lower.size() != upper.size()) throw DimensionMismatchError("bound matrices differ in size");
    TestResult out;
    try {
        out.s_restricted = solve_constrained(lower, r).score;
    } catch (const InfeasibleError&) {
        out.s_restricted = std::numeric_limits<double>::infinity();
    }
    out.s_upper = solve(upper).score;
    out.reject = out.s_restricted > out.s_upper;
    return out;
}

TestReport test_substructure(const Dataset& d, const Substructure& r, double alpha, const ScoreOptions& opts) {
    r.check_nodes(d.p());
    check_scorable(d);
    const MomentStats ms = moment_statistics(d, opts);
    const ConfidenceBounds cb = confidence_bounds(ms, alpha);
    return {test_substructure(cb.lower, cb.upper, r), alpha, ms.n_eval, r};
}

}  // namespace cat
