#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sepgraph {

// mt19937_64 with hand-rolled bounded draw. std::uniform_int_distribution is
// implementation-defined, which would make seeded outputs differ across
// standard libraries; rejection sampling below is exact and portable.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next() { return eng(); }

    // Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~0ULL - (~0ULL % bound);
        for (;;) {
            std::uint64_t x = eng();
            if (x < limit) return x % bound;
        }
    }

    int range(int lo, int hi) {  // inclusive ends
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() {  // [0,1) with 53 random bits
        return static_cast<double>(eng() >> 11) * (1.0 / 9007199254740992.0);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }
};

}  // namespace sepgraph
