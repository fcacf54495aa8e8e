#include "cat/entropy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/math/special_functions/digamma.hpp>

#include "cat/error.hpp"
#include "cat/rng.hpp"

namespace cat {

namespace {

constexpr std::size_t kBruteForceLimit = 256;
constexpr std::size_t kLeafSize = 16;
constexpr int kJitterRounds = 3;

double distance(const Samples& s, std::size_t a, std::size_t b) {
    if (s.d == 1) return std::abs(s.values[a] - s.values[b]);
    double sq = 0.0;
    for (std::size_t c = 0; c < s.d; ++c) {
        const double diff = s.values[a * s.d + c] - s.values[b * s.d + c];
        sq += diff * diff;
    }
    return std::sqrt(sq);
}

// k smallest values seen so far, kept sorted ascending
class Bounded {
public:
    explicit Bounded(int k) : m_k(static_cast<std::size_t>(k)) { m_v.reserve(m_k + 1); }
    bool full() const { return m_v.size() == m_k; }
    double worst() const { return m_v.back(); }
    void offer(double v) {
        if (full() && v >= worst()) return;
        m_v.insert(std::upper_bound(m_v.begin(), m_v.end(), v), v);
        if (m_v.size() > m_k) m_v.pop_back();
    }

private:
    std::size_t m_k;
    std::vector<double> m_v;
};

std::vector<double> kth_1d(const Samples& s, int k) {
    const std::size_t n = s.n;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s.values[a] < s.values[b]; });
    std::vector<double> out(n);
    for (std::size_t r = 0; r < n; ++r) {
        const double x = s.values[order[r]];
        std::size_t left = r, right = r + 1;
        double kth = 0.0;
        for (int step = 0; step < k; ++step) {
            const double dl = left > 0 ? x - s.values[order[left - 1]] : std::numeric_limits<double>::infinity();
            const double dr = right < n ? s.values[order[right]] - x : std::numeric_limits<double>::infinity();
            if (dl <= dr) {
                kth = dl;
                --left;
            } else {
                kth = dr;
                ++right;
            }
        }
        out[order[r]] = kth;
    }
    return out;
}

class KdTree {
public:
    explicit KdTree(const Samples& s) : m_s(s), m_index(s.n) {
        std::iota(m_index.begin(), m_index.end(), std::size_t{0});
        m_nodes.reserve(2 * s.n / kLeafSize + 2);
        build(0, s.n);
    }

    double kth(std::size_t query, int k) const {
        Bounded best(k);
        search(0, query, best);
        return best.worst();
    }

private:
    struct Box {
        std::size_t begin, end;
        int left = -1, right = -1;
        std::array<double, 3> lo{}, hi{};
    };

    int build(std::size_t begin, std::size_t end) {
        const int id = static_cast<int>(m_nodes.size());
        m_nodes.push_back(Box{begin, end});
        Box box{begin, end};
        for (std::size_t c = 0; c < m_s.d; ++c) {
            box.lo[c] = std::numeric_limits<double>::infinity();
            box.hi[c] = -std::numeric_limits<double>::infinity();
        }
        for (std::size_t t = begin; t < end; ++t) {
            for (std::size_t c = 0; c < m_s.d; ++c) {
                const double v = m_s(m_index[t], c);
                box.lo[c] = std::min(box.lo[c], v);
                box.hi[c] = std::max(box.hi[c], v);
            }
        }
        if (end - begin > kLeafSize) {
            std::size_t dim = 0;
            for (std::size_t c = 1; c < m_s.d; ++c) {
                if (box.hi[c] - box.lo[c] > box.hi[dim] - box.lo[dim]) dim = c;
            }
            const std::size_t mid = begin + (end - begin) / 2;
            std::nth_element(m_index.begin() + static_cast<std::ptrdiff_t>(begin),
                             m_index.begin() + static_cast<std::ptrdiff_t>(mid),
                             m_index.begin() + static_cast<std::ptrdiff_t>(end),
                             [&](std::size_t a, std::size_t b) { return m_s(a, dim) < m_s(b, dim); });
            box.left = build(begin, mid);
            box.right = build(mid, end);
        }
        m_nodes[static_cast<std::size_t>(id)] = box;
        return id;
    }

    double box_distance(const Box& box, std::size_t query) const {
        double sq = 0.0;
        for (std::size_t c = 0; c < m_s.d; ++c) {
            const double v = m_s(query, c);
            const double gap = v < box.lo[c] ? box.lo[c] - v : (v > box.hi[c] ? v - box.hi[c] : 0.0);
            sq += gap * gap;
        }
        return std::sqrt(sq);
    }

    void search(int id, std::size_t query, Bounded& best) const {
        const Box& box = m_nodes[static_cast<std::size_t>(id)];
        if (box.left < 0) {
            for (std::size_t t = box.begin; t < box.end; ++t) {
                const std::size_t other = m_index[t];
                if (other != query) best.offer(distance(m_s, query, other));
            }
            return;
        }
        const Box& a = m_nodes[static_cast<std::size_t>(box.left)];
        const Box& b = m_nodes[static_cast<std::size_t>(box.right)];
        double da = box_distance(a, query);
        double db = box_distance(b, query);
        int first = box.left, second = box.right;
        if (db < da) {
            std::swap(first, second);
            std::swap(da, db);
        }
        if (!best.full() || da <= best.worst()) search(first, query, best);
        if (!best.full() || db <= best.worst()) search(second, query, best);
    }

    const Samples& m_s;
    std::vector<std::size_t> m_index;
    std::vector<Box> m_nodes;
};

void check(const Samples& s, int k) {
    if (s.d < 1 || s.d > 3) throw InvalidArgument("entropy estimation supports dimensions 1 to 3");
    if (k < 1) throw InvalidArgument("k must be at least 1");
    if (s.values.size() != s.n * s.d) throw DimensionMismatchError("sample matrix has the wrong size");
    if (s.n <= static_cast<std::size_t>(k)) throw TooFewSamples("need more samples than neighbours");
    for (double v : s.values) {
        if (!std::isfinite(v)) throw NonFiniteInput("samples must be finite");
    }
}

double column_sd(const Samples& s, std::size_t c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < s.n; ++r) mean += s(r, c);
    mean /= static_cast<double>(s.n);
    double ss = 0.0;
    for (std::size_t r = 0; r < s.n; ++r) ss += (s(r, c) - mean) * (s(r, c) - mean);
    return std::sqrt(ss / static_cast<double>(s.n));
}

std::vector<double> standardized(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / n);
    std::vector<double> out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = sd > 0.0 ? (x[k] - mean) / sd : x[k] - mean;
    return out;
}

bool lexicographically_less(std::span<const double> a, std::span<const double> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Samples Samples::from_columns(std::initializer_list<std::span<const double>> columns) {
    Samples s;
    s.d = columns.size();
    if (s.d == 0) throw InvalidArgument("need at least one column");
    s.n = columns.begin()->size();
    for (const auto& c : columns) {
        if (c.size() != s.n) throw LengthMismatch("columns have different lengths");
    }
    s.values.resize(s.n * s.d);
    std::size_t col = 0;
    for (const auto& c : columns) {
        for (std::size_t r = 0; r < s.n; ++r) s.values[r * s.d + col] = c[r];
        ++col;
    }
    return s;
}

namespace detail {

std::vector<double> kth_neighbor_distances_brute(const Samples& s, int k) {
    check(s, k);
    std::vector<double> out(s.n);
    for (std::size_t a = 0; a < s.n; ++a) {
        Bounded best(k);
        for (std::size_t b = 0; b < s.n; ++b) {
            if (b != a) best.offer(distance(s, a, b));
        }
        out[a] = best.worst();
    }
    return out;
}

double log_unit_ball_volume(std::size_t d) {
    const double half = static_cast<double>(d) / 2.0;
    return half * std::log(std::numbers::pi) - std::lgamma(half + 1.0);
}

}  // namespace detail

std::vector<double> kth_neighbor_distances(const Samples& s, int k) {
    check(s, k);
    if (s.d == 1) return kth_1d(s, k);
    if (s.n <= kBruteForceLimit) return detail::kth_neighbor_distances_brute(s, k);
    const KdTree tree(s);
    std::vector<double> out(s.n);
    for (std::size_t a = 0; a < s.n; ++a) out[a] = tree.kth(a, k);
    return out;
}

double knn_entropy(const Samples& s, const EntropyConfig& cfg) {
    check(s, cfg.k);
    bool all_equal = true;
    for (std::size_t r = 1; r < s.n && all_equal; ++r) {
        for (std::size_t c = 0; c < s.d; ++c) {
            if (s(r, c) != s(0, c)) {
                all_equal = false;
                break;
            }
        }
    }
    if (all_equal) throw DegenerateSample("all samples are identical");

    std::vector<double> rho = kth_neighbor_distances(s, cfg.k);
    auto has_zero = [](const std::vector<double>& v) { return std::any_of(v.begin(), v.end(), [](double r) { return r == 0.0; }); };
    if (has_zero(rho)) {
        double scale = 0.0;
        for (std::size_t c = 0; c < s.d; ++c) scale = std::max(scale, column_sd(s, c));
        scale *= cfg.jitter;
        Rng rng(cfg.seed, 0x6a177e5ull);
        bool resolved = false;
        for (int round = 0; round <= kJitterRounds && !resolved; ++round, scale *= 10.0) {
            Samples jittered = s;
            for (double& v : jittered.values) v += scale * (2.0 * rng.uniform() - 1.0);
            rho = kth_neighbor_distances(jittered, cfg.k);
            resolved = !has_zero(rho);
        }
        if (!resolved) throw DegenerateSample("tied samples survive the jitter budget");
    }

    double sum_log = 0.0;
    for (double r : rho) sum_log += std::log(r);
    const double n = static_cast<double>(s.n);
    return boost::math::digamma(n) - boost::math::digamma(static_cast<double>(cfg.k)) +
           detail::log_unit_ball_volume(s.d) + static_cast<double>(s.d) * sum_log / n;
}

double knn_entropy(std::span<const double> x, const EntropyConfig& cfg) {
    return knn_entropy(Samples::from_columns({x}), cfg);
}

double mutual_information(std::span<const double> a, std::span<const double> b, const EntropyConfig& cfg) {
    if (a.size() != b.size()) throw LengthMismatch("mutual information inputs differ in length");
    std::vector<double> sa = standardized(a), sb = standardized(b);
    if (lexicographically_less(sb, sa)) std::swap(sa, sb);
    EntropyConfig c1 = cfg, c2 = cfg, c3 = cfg;
    c1.seed = splitmix64(cfg.seed ^ 1);
    c2.seed = splitmix64(cfg.seed ^ 2);
    c3.seed = splitmix64(cfg.seed ^ 3);
    return knn_entropy(Samples::from_columns({sa}), c1) + knn_entropy(Samples::from_columns({sb}), c2) -
           knn_entropy(Samples::from_columns({sa, sb}), c3);
}

double conditional_mutual_information(std::span<const double> x, std::span<const double> y,
                                      std::span<const double> z, const EntropyConfig& cfg) {
    if (x.size() != y.size() || x.size() != z.size()) throw LengthMismatch("inputs differ in length");
    std::vector<double> sx = standardized(x), sy = standardized(y);
    const std::vector<double> sz = standardized(z);
    if (lexicographically_less(sy, sx)) std::swap(sx, sy);
    EntropyConfig c1 = cfg, c2 = cfg, c3 = cfg, c4 = cfg;
    c1.seed = splitmix64(cfg.seed ^ 1);
    c2.seed = splitmix64(cfg.seed ^ 2);
    c3.seed = splitmix64(cfg.seed ^ 3);
    c4.seed = splitmix64(cfg.seed ^ 4);
    return knn_entropy(Samples::from_columns({sx, sz}), c1) + knn_entropy(Samples::from_columns({sy, sz}), c2) -
           knn_entropy(Samples::from_columns({sz}), c3) - knn_entropy(Samples::from_columns({sx, sy, sz}), c4);
}

}  // namespace cat
