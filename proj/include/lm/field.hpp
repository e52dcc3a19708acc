#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lm/errors.hpp"

namespace lm {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Deterministic Miller-Rabin. The witness set {2,3,5,7,11,13,17,19,23,29,31,37}
/// is exact for every 64-bit input, so this is a primality proof, not a
/// probabilistic test.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    auto mul = [n](u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % n); };
    auto pow = [&](u64 base, u64 exp) {
        u64 acc = 1;
        while (exp) {
            if (exp & 1) acc = mul(acc, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return acc;
    };
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// An element of GF(p), p prime. Canonical representation 0 <= value < p.
class FieldElement {
public:
    FieldElement(u64 value, u64 p) : value_(0), p_(p) {
        if (!is_prime(p)) {
            throw std::invalid_argument("FieldElement: modulus " + std::to_string(p) + " is not prime");
        }
        value_ = value % p;
    }

    u64 value() const { return value_; }
    u64 modulus() const { return p_; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.p_ == b.p_ && a.value_ == b.value_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    u64 value_;
    u64 p_;
};

namespace detail {
inline void require_same_modulus(const FieldElement& a, const FieldElement& b, const char* op) {
    if (a.modulus() != b.modulus()) {
        throw std::invalid_argument(std::string(op) + ": modulus mismatch (" +
                                    std::to_string(a.modulus()) + " vs " +
                                    std::to_string(b.modulus()) + ")");
    }
}
} // namespace detail

inline FieldElement field_add(const FieldElement& a, const FieldElement& b) {
    detail::require_same_modulus(a, b, "field_add");
    u64 s = a.value() + b.value(); // p < 2^63, no overflow
    if (s >= a.modulus()) s -= a.modulus();
    return FieldElement(s, a.modulus());
}

inline FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
    detail::require_same_modulus(a, b, "field_mul");
    u128 prod = static_cast<u128>(a.value()) * b.value();
    return FieldElement(static_cast<u64>(prod % a.modulus()), a.modulus());
}

/// Multiplicative inverse via Fermat: a^(p-2) mod p.
inline FieldElement field_inv(const FieldElement& a) {
    if (a.value() == 0) {
        throw std::domain_error("field_inv: division by zero in GF(" + std::to_string(a.modulus()) + ")");
    }
    const u64 p = a.modulus();
    u64 base = a.value(), acc = 1, exp = p - 2;
    while (exp) {
        if (exp & 1) acc = static_cast<u64>(static_cast<u128>(acc) * base % p);
        base = static_cast<u64>(static_cast<u128>(base) * base % p);
        exp >>= 1;
    }
    return FieldElement(acc, p);
}

/// Polynomial over GF(p), coefficients stored lowest degree first:
/// a0 + a1*x + ... + a_{k-1}*x^{k-1}.
class FieldPolynomial {
public:
    FieldPolynomial(std::vector<u64> coefficients, u64 p) : p_(p) {
        if (!is_prime(p)) {
            throw std::invalid_argument("FieldPolynomial: modulus " + std::to_string(p) + " is not prime");
        }
        coeffs_.reserve(coefficients.size());
        for (u64 c : coefficients) coeffs_.push_back(c % p);
    }

    const std::vector<u64>& coefficients() const { return coeffs_; }
    u64 modulus() const { return p_; }

private:
    std::vector<u64> coeffs_;
    u64 p_;
};

/// Horner evaluation of f at x in GF(p).
inline FieldElement poly_eval(const FieldPolynomial& f, const FieldElement& x) {
    if (f.modulus() != x.modulus()) {
        throw std::invalid_argument("poly_eval: modulus mismatch");
    }
    const u64 p = f.modulus();
    u64 acc = 0;
    const auto& c = f.coefficients();
    for (std::size_t i = c.size(); i > 0; --i) {
        acc = static_cast<u64>((static_cast<u128>(acc) * x.value() + c[i - 1]) % p);
    }
    return FieldElement(acc, p);
}

} // namespace lm
