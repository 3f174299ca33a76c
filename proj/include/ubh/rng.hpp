#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ubh {

// Deterministic RNG. All draws are implemented on top of the standardized
// mt19937_64 stream so that results are bit-identical across platforms;
// std::*_distribution is avoided because its output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform index in [0, n). Modulo bias is negligible for n << 2^64.
    std::size_t index(std::size_t n) { return std::size_t(next_u64() % n); }

    // Box-Muller; consumes exactly two uniforms per call.
    double normal(double mean, double sigma);

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // First k elements of a Fisher-Yates pass over 0..n-1, ascending.
    std::vector<int> sample_without_replacement(int n, int k);

private:
    std::mt19937_64 eng_;
};

}  // namespace ubh
