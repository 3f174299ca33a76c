#include "ubh/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ubh {

double Rng::normal(double mean, double sigma) {
    // Avoid log(0); uniform() can return exactly 0.
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(2.0 * M_PI * u2);
}

std::vector<int> Rng::sample_without_replacement(int n, int k) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    if (k > n) k = n;
    for (int i = 0; i < k; ++i) {
        std::size_t j = i + index(std::size_t(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace ubh
