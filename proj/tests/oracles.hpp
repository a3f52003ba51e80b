// Brute-force reference implementations used as test ground truth. These must
// stay independent of the library code paths they check.
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracles {

// All x in [0, m) with x^2 = n (mod m), by exhaustion.
inline std::vector<long long> brute_sqrt_mod(long long n, long long m) {
    std::vector<long long> roots;
    long long r = ((n % m) + m) % m;
    for (long long x = 0; x < m; ++x)
        if ((__int128)x * x % m == r) roots.push_back(x);
    return roots;
}

// g(f) = sum_{l|f} l * prod_{p|l} (1 - chi(p)/p), evaluated exactly as
// sum_{l|f} (l / rad(l)) * prod_{p|l} (p - chi(p)); chi(p) supplied by the
// caller.
template <typename Chi>
long long divisor_sum_g(long long f, Chi&& chi) {
    long long total = 0;
    for (long long l = 1; l <= f; ++l) {
        if (f % l != 0) continue;
        long long term = l, rest = l;
        for (long long p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            term /= p;
            term *= p - chi(p);
            while (rest % p == 0) rest /= p;
        }
        if (rest > 1) {
            term /= rest;
            term *= rest - chi(rest);
        }
        total += term;
    }
    return total;
}

// Minimal positive (t, s) with t^2 - d s^2 = 4, searching s (s_cap bounds the
// search; nullopt when nothing found below the cap).
inline std::optional<std::pair<long long, long long>> brute_pell4(long long d, long long s_cap) {
    for (long long s = 1; s <= s_cap; ++s) {
        __int128 v = (__int128)d * s * s + 4;
        long long t = static_cast<long long>(std::sqrt(static_cast<double>((long long)v)));
        while ((__int128)t * t < v) ++t;
        while ((__int128)t * t > v) --t;
        if ((__int128)t * t == v) return std::make_pair(t, s);
    }
    return std::nullopt;
}

// Smallest (x, y), y >= 1, with x^2 - d y^2 = -4, below the cap.
inline std::optional<std::pair<long long, long long>> brute_neg_pell4(long long d, long long y_cap) {
    for (long long y = 1; y <= y_cap; ++y) {
        __int128 v = (__int128)d * y * y - 4;
        if (v < 0) continue;
        long long x = static_cast<long long>(std::sqrt(static_cast<double>((long long)v)));
        while ((__int128)x * x < v) ++x;
        while ((__int128)x * x > v) --x;
        if ((__int128)x * x == v) return std::make_pair(x, y);
    }
    return std::nullopt;
}

}  // namespace oracles
