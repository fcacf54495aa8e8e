#ifndef CAT_RNG_HPP
#define CAT_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

namespace cat {

/// Portable counter-based generator (Philox4x32-10).
///
/// A generator is identified by a 64-bit seed (the Philox key) and a 64-bit
/// stream id (the upper half of the 128-bit counter); the lower half counts
/// blocks. `split(id)` derives an independent child stream, so per-node or
/// per-edge streams can be handed out without sharing state:
///
///     child.stream = splitmix64(parent.stream ^ splitmix64(id + 1))
///
/// All derived quantities (uniforms, normals, integers) are computed with
/// explicit formulas rather than <random> distributions, whose algorithms are
/// implementation-defined, so a seed yields the same stream on every platform.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0, std::uint64_t stream = 0);

    Rng split(std::uint64_t id) const;

    std::uint64_t seed() const { return m_seed; }
    std::uint64_t stream() const { return m_stream; }

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    result_type operator()() { return next_u64(); }
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    // [0, 1)
    double uniform();
    // (0, 1), never returns an endpoint
    double uniform_open();
    double uniform(double lo, double hi);
    double normal();
    double normal(double mean, double sd);
    bool bernoulli(double prob);
    // uniform on {0, ..., n-1}; n > 0
    std::uint64_t uniform_index(std::uint64_t n);

private:
    void refill();

    std::uint64_t m_seed;
    std::uint64_t m_stream;
    std::uint64_t m_block = 0;
    std::array<std::uint32_t, 4> m_buffer{};
    int m_used = 4;
    bool m_has_spare = false;
    double m_spare = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

// Fisher-Yates with the portable generator.
std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);

}  // namespace cat

#endif  // CAT_RNG_HPP
