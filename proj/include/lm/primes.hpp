#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lm/field.hpp"

namespace lm {

/// All primes in [2, limit], ascending. limit < 2 yields an empty sequence.
inline std::vector<u64> sieve_primes(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

/// Primes p with lo <= p < hi. Endpoints are real-valued and compared exactly
/// against the integer primes; nothing is rounded.
inline std::vector<u64> primes_in_range(double lo, double hi) {
    std::vector<u64> out;
    if (!(hi > lo) || hi <= 2.0) return out;
    const u64 limit = static_cast<u64>(std::ceil(hi));
    for (u64 p : sieve_primes(limit)) {
        const double pd = static_cast<double>(p);
        if (pd >= lo && pd < hi) out.push_back(p);
    }
    return out;
}

/// Parameters for the prime-supply estimate over [N^(1/k), N^(1/(k-epsilon))).
struct PrimeRangeQuery {
    u64 N = 2;          // class count
    unsigned k = 2;     // digit count
    double epsilon = 0.1;
    unsigned count = 0; // requested number of primes (advisory)

    void validate() const {
        if (N < 2) throw std::invalid_argument("PrimeRangeQuery: N must be >= 2");
        if (k < 1) throw std::invalid_argument("PrimeRangeQuery: k must be >= 1");
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw std::invalid_argument("PrimeRangeQuery: epsilon must be in (0,1)");
        if (!(epsilon < static_cast<double>(k)))
            throw std::invalid_argument("PrimeRangeQuery: epsilon must be < k");
    }

    double lo() const { return std::pow(static_cast<double>(N), 1.0 / k); }
    double hi() const { return std::pow(static_cast<double>(N), 1.0 / (k - epsilon)); }
};

/// Prime Number Theorem estimate of how many primes live in the query's
/// interval: k * (N^(1/(k-eps)) - N^(1/k)) / ln N. Advisory only; the
/// constructions accept explicit prime lists regardless of this value.
inline double pnt_count_estimate(const PrimeRangeQuery& q) {
    q.validate();
    const double n = static_cast<double>(q.N);
    return q.k * (std::pow(n, 1.0 / (q.k - q.epsilon)) - std::pow(n, 1.0 / q.k)) / std::log(n);
}

} // namespace lm
