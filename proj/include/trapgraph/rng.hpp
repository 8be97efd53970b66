#pragma once
#include <cstdint>
#include <random>
#include <vector>

namespace trapgraph {

// splitmix64 step; used for seed derivation so that campaign trials are
// independently reproducible from (base seed, n, trial).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t n, std::uint64_t trial) {
    return splitmix64(splitmix64(splitmix64(base) ^ n) ^ trial);
}

// Deterministic cross-platform randomness. mt19937_64 output is pinned by the
// standard; the bounded draw and shuffle are hand-rolled because
// std::uniform_int_distribution and std::shuffle are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform draw from [0, bound) by rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    // Fisher-Yates; uniform over all permutations.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace trapgraph
