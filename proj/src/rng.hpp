#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace tabml::rng {

// splitmix64 finalizer, used to decorrelate derived stream seeds.
inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed of the index-th child stream derived from a parent seed. Trees,
// pairwise classifiers and split strata each get their own stream so results
// do not depend on evaluation order or thread scheduling.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
    return mix(seed ^ mix(index + 1));
}

// mt19937_64 plus hand-rolled distribution helpers. The standard specifies
// the engine output exactly but not the distributions, so the helpers here
// keep sequences identical across standard libraries.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform integer in [0, bound), bound > 0
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % bound;
    }

    // uniform double in [0, 1)
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform double in (0, 1)
    double unit_open() {
        double u;
        do {
            u = unit();
        } while (u == 0.0);
        return u;
    }

    // seeded Fisher-Yates shuffle
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices from [0, n), returned ascending
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        if (k > n) k = n;
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace tabml::rng
