#pragma once

#include <cstddef>
#include <vector>

namespace thetaq {

/// Indexing of Z_N^g, big endian (first coordinate most significant).
inline size_t zng_size(long N, size_t g) {
    size_t s = 1;
    for (size_t i = 0; i < g; ++i) s *= static_cast<size_t>(N);
    return s;
}

inline size_t zng_index(const std::vector<long>& mu, long N) {
    size_t idx = 0;
    for (long m : mu) {
        long r = m % N;
        if (r < 0) r += N;
        idx = idx * static_cast<size_t>(N) + static_cast<size_t>(r);
    }
    return idx;
}

inline std::vector<long> zng_from_index(size_t idx, long N, size_t g) {
    std::vector<long> mu(g, 0);
    for (size_t i = g; i-- > 0;) {
        mu[i] = static_cast<long>(idx % static_cast<size_t>(N));
        idx /= static_cast<size_t>(N);
    }
    return mu;
}

inline std::vector<std::vector<long>> zng_all(long N, size_t g) {
    const size_t total = zng_size(N, g);
    std::vector<std::vector<long>> out;
    out.reserve(total);
    for (size_t i = 0; i < total; ++i) out.push_back(zng_from_index(i, N, g));
    return out;
}

inline long dot(const std::vector<long>& a, const std::vector<long>& b) {
    long acc = 0;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace thetaq
