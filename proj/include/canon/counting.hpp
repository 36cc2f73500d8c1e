#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>

namespace canon {

using bigint = boost::multiprecision::cpp_int;

inline bigint factorial(int n) {
    bigint r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline bigint binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline bigint catalan(int n) { return binomial(2 * n, n) / (n + 1); }

/// Fuss-Catalan number binom(kn, n) / ((k-1)n + 1).
inline bigint fuss_catalan(int n, int k) { return binomial(k * n, n) / ((k - 1) * n + 1); }

/// (kn)! / (k!)^n, the number of words over k copies of each of 1..n.
inline bigint multinomial_uniform(int n, int k) {
    bigint r = factorial(k * n);
    const bigint kf = factorial(k);
    for (int i = 0; i < n; ++i) r /= kf;
    return r;
}

/// Saturating conversion used when comparing sizes against a cap.
inline std::uint64_t saturate_u64(const bigint& v) {
    if (v > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(v);
}

} // namespace canon
