#ifndef EVAC_RNG_HPP
#define EVAC_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace evac {

// Deterministic RNG helper. mt19937_64 output is fully specified by the
// standard; the std::* distributions are not, so draws are hand-rolled here
// to keep run outputs bit-identical across platforms and library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double next_range(double lo, double hi) { return lo + (hi - lo) * next_u01(); }

    // Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = gen_();
        while (v >= limit) v = gen_();
        return v % n;
    }

    // Fisher-Yates; not std::shuffle, whose draw sequence is unspecified.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace evac

#endif
