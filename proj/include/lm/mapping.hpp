#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lm/errors.hpp"
#include "lm/field.hpp"

namespace lm {

using Label = std::uint64_t;

/// One codeword: the image (f_1(y), ..., f_n(y)) of a label, one value per site.
using Codeword = std::vector<std::uint32_t>;

enum class MappingKind { mixed, simplex, ecoc, onehot };

inline const char* to_string(MappingKind k) {
    switch (k) {
        case MappingKind::mixed: return "mixed";
        case MappingKind::simplex: return "simplex";
        case MappingKind::ecoc: return "ecoc";
        case MappingKind::onehot: return "onehot";
    }
    return "?";
}

inline MappingKind mapping_kind_from_string(const std::string& s) {
    if (s == "mixed") return MappingKind::mixed;
    if (s == "simplex") return MappingKind::simplex;
    if (s == "ecoc") return MappingKind::ecoc;
    if (s == "onehot") return MappingKind::onehot;
    throw std::invalid_argument("unknown mapping kind: " + s);
}

/// Declarative description of a label mapping; the JSON spec-file mirrors this
/// struct field for field (unused fields stay empty/zero).
struct MappingSpec {
    MappingKind kind = MappingKind::onehot;
    Label N = 0;
    std::vector<u64> primes;          // mixed: site moduli p_1 < ... < p_n
    u64 p = 0;                        // simplex: field prime
    std::uint32_t k = 0;              // simplex: message length
    std::uint32_t n = 0;              // simplex/ecoc: code length
    std::vector<std::uint32_t> points; // simplex: evaluation points (default 1..n)
};

namespace detail {

// Saturating product; good enough for the >= N comparisons below.
inline u64 sat_mul(u64 a, u64 b) {
    u128 prod = static_cast<u128>(a) * b;
    return prod > UINT64_MAX ? UINT64_MAX : static_cast<u64>(prod);
}

inline u64 sat_pow(u64 base, std::uint32_t exp) {
    u64 acc = 1;
    for (std::uint32_t i = 0; i < exp; ++i) acc = sat_mul(acc, base);
    return acc;
}

} // namespace detail

/// A validated family of site-position functions f_i: Z/NZ -> Z/N_iZ.
/// Immutable after construction; all queries are pure.
class LabelMapping {
public:
    static LabelMapping mixed(Label N, std::vector<u64> primes) {
        MappingSpec s;
        s.kind = MappingKind::mixed;
        s.N = N;
        s.primes = std::move(primes);
        s.n = static_cast<std::uint32_t>(s.primes.size());
        return LabelMapping(std::move(s));
    }

    /// Reed-Solomon code over GF(p) applied to the p-adic digits of the label.
    /// Default evaluation points are 1..n; with k=2 this is the closed form
    /// f_i(x) = ((x mod p) + floor(x/p) * i) mod p.
    static LabelMapping simplex(Label N, u64 p, std::uint32_t k, std::uint32_t n,
                                std::vector<std::uint32_t> points = {}) {
        MappingSpec s;
        s.kind = MappingKind::simplex;
        s.N = N;
        s.p = p;
        s.k = k;
        s.n = n;
        s.points = std::move(points);
        return LabelMapping(std::move(s));
    }

    /// Binary code: site i is the i-th bit of the label, MSB first.
    static LabelMapping ecoc(Label N, std::uint32_t bits) {
        MappingSpec s;
        s.kind = MappingKind::ecoc;
        s.N = N;
        s.n = bits;
        return LabelMapping(std::move(s));
    }

    static LabelMapping onehot(Label N) {
        MappingSpec s;
        s.kind = MappingKind::onehot;
        s.N = N;
        s.n = 1;
        return LabelMapping(std::move(s));
    }

    explicit LabelMapping(MappingSpec spec) : spec_(std::move(spec)) {
        validate_and_finish();
    }

    const MappingSpec& spec() const { return spec_; }
    MappingKind kind() const { return spec_.kind; }
    Label num_classes() const { return spec_.N; }
    std::uint32_t length() const { return static_cast<std::uint32_t>(site_sizes_.size()); }
    const std::vector<std::uint32_t>& site_sizes() const { return site_sizes_; }
    std::uint32_t site_size(std::uint32_t i) const { return site_sizes_.at(i); }

    /// Smallest k such that any k site moduli already pin the label (mixed:
    /// product of the k smallest primes >= N; simplex: the RS message length).
    std::uint32_t effective_k() const { return effective_k_; }

    /// f_i(y) for site index i in [0, n).
    std::uint32_t site_value(std::uint32_t i, Label y) const {
        check_label(y);
        if (i >= length()) throw std::invalid_argument("site_value: site index out of range");
        switch (spec_.kind) {
            case MappingKind::mixed:
                return static_cast<std::uint32_t>(y % spec_.primes[i]);
            case MappingKind::simplex: {
                const u64 p = spec_.p;
                // Horner over the p-adic digits, highest digit first.
                u64 acc = 0;
                const u64 x = spec_.points[i] % p;
                for (std::uint32_t j = spec_.k; j > 0; --j) {
                    const u64 digit = digit_of(y, j - 1);
                    acc = (acc * x + digit) % p;
                }
                return static_cast<std::uint32_t>(acc);
            }
            case MappingKind::ecoc:
                return static_cast<std::uint32_t>((y >> (spec_.n - 1 - i)) & 1ULL);
            case MappingKind::onehot:
                return static_cast<std::uint32_t>(y);
        }
        throw std::logic_error("unreachable");
    }

    Codeword map_label(Label y) const {
        check_label(y);
        Codeword cw(length());
        for (std::uint32_t i = 0; i < length(); ++i) cw[i] = site_value(i, y);
        return cw;
    }

    /// Number of sites i with f_i(y1) == f_i(y2); equals n when y1 == y2.
    std::uint32_t agreeing_sites(Label y1, Label y2) const {
        check_label(y1);
        check_label(y2);
        std::uint32_t agree = 0;
        for (std::uint32_t i = 0; i < length(); ++i) {
            if (site_value(i, y1) == site_value(i, y2)) ++agree;
        }
        return agree;
    }

    /// Label whose codeword equals cw, if one exists. Reconstructs from the
    /// minimal determining prefix (CRT for mixed, Lagrange interpolation for
    /// simplex) and verifies the remaining sites.
    std::optional<Label> invert(const Codeword& cw) const {
        if (cw.size() != length()) {
            throw std::invalid_argument("invert: codeword length mismatch");
        }
        for (std::uint32_t i = 0; i < length(); ++i) {
            if (cw[i] >= site_sizes_[i]) return std::nullopt;
        }
        std::optional<Label> candidate;
        switch (spec_.kind) {
            case MappingKind::onehot:
                candidate = static_cast<Label>(cw[0]);
                break;
            case MappingKind::ecoc: {
                u64 x = 0;
                for (std::uint32_t i = 0; i < spec_.n; ++i) x = (x << 1) | cw[i];
                candidate = x;
                break;
            }
            case MappingKind::mixed:
                candidate = crt_reconstruct(cw);
                break;
            case MappingKind::simplex:
                candidate = rs_interpolate(cw);
                break;
        }
        if (!candidate || *candidate >= spec_.N) return std::nullopt;
        if (map_label(*candidate) != cw) return std::nullopt;
        return candidate;
    }

private:
    MappingSpec spec_;
    std::vector<std::uint32_t> site_sizes_;
    std::uint32_t effective_k_ = 1;

    void check_label(Label y) const {
        if (y >= spec_.N) {
            throw std::invalid_argument("label " + std::to_string(y) + " out of range [0, " +
                                        std::to_string(spec_.N) + ")");
        }
    }

    u64 digit_of(Label y, std::uint32_t j) const {
        u64 v = y;
        for (std::uint32_t t = 0; t < j; ++t) v /= spec_.p;
        return v % spec_.p;
    }

    void validate_and_finish() {
        if (spec_.N < 1) throw std::invalid_argument("LabelMapping: N must be >= 1");
        switch (spec_.kind) {
            case MappingKind::mixed: validate_mixed(); break;
            case MappingKind::simplex: validate_simplex(); break;
            case MappingKind::ecoc: validate_ecoc(); break;
            case MappingKind::onehot:
                spec_.n = 1;
                site_sizes_ = {static_cast<std::uint32_t>(spec_.N)};
                effective_k_ = 1;
                break;
        }
        if (spec_.N <= 100000) confirm_injective_exhaustively();
    }

    void validate_mixed() {
        if (spec_.primes.empty()) throw std::invalid_argument("mixed LM: prime list is empty");
        u64 prev = 0;
        u64 product = 1;
        for (u64 p : spec_.primes) {
            if (!is_prime(p)) {
                throw std::invalid_argument("mixed LM: " + std::to_string(p) + " is not prime");
            }
            if (p == prev) throw std::invalid_argument("mixed LM: duplicate prime " + std::to_string(p));
            if (p < prev) throw std::invalid_argument("mixed LM: primes must be ascending");
            prev = p;
            product = detail::sat_mul(product, p);
        }
        if (product < spec_.N) {
            throw not_injective_error("mixed LM: prime product " + std::to_string(product) +
                                      " < N = " + std::to_string(spec_.N));
        }
        spec_.n = static_cast<std::uint32_t>(spec_.primes.size());
        site_sizes_.assign(spec_.primes.begin(), spec_.primes.end());
        // Worst case for the separability bound: the k smallest primes.
        u64 acc = 1;
        effective_k_ = spec_.n;
        for (std::uint32_t i = 0; i < spec_.n; ++i) {
            acc = detail::sat_mul(acc, spec_.primes[i]);
            if (acc >= spec_.N) {
                effective_k_ = i + 1;
                break;
            }
        }
    }

    void validate_simplex() {
        if (!is_prime(spec_.p)) {
            throw std::invalid_argument("simplex LM: p = " + std::to_string(spec_.p) + " is not prime");
        }
        if (spec_.k < 1) throw std::invalid_argument("simplex LM: k must be >= 1");
        if (spec_.n < 1) throw std::invalid_argument("simplex LM: n must be >= 1");
        if (detail::sat_pow(spec_.p, spec_.k) < spec_.N) {
            throw not_injective_error("simplex LM: p^k < N (p = " + std::to_string(spec_.p) +
                                      ", k = " + std::to_string(spec_.k) + ", N = " +
                                      std::to_string(spec_.N) + ")");
        }
        if (spec_.n > spec_.p) {
            throw too_many_sites_error("simplex LM: n = " + std::to_string(spec_.n) +
                                       " exceeds p = " + std::to_string(spec_.p) +
                                       " distinct evaluation points");
        }
        if (spec_.points.empty()) {
            spec_.points.resize(spec_.n);
            for (std::uint32_t i = 0; i < spec_.n; ++i) spec_.points[i] = i + 1;
        }
        if (spec_.points.size() != spec_.n) {
            throw std::invalid_argument("simplex LM: expected " + std::to_string(spec_.n) +
                                        " evaluation points, got " + std::to_string(spec_.points.size()));
        }
        std::vector<std::uint32_t> reduced;
        reduced.reserve(spec_.n);
        for (std::uint32_t x : spec_.points) reduced.push_back(static_cast<std::uint32_t>(x % spec_.p));
        auto sorted = reduced;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("simplex LM: evaluation points are not distinct mod p");
        }
        spec_.points = std::move(reduced);
        site_sizes_.assign(spec_.n, static_cast<std::uint32_t>(spec_.p));
        effective_k_ = spec_.k;
    }

    void validate_ecoc() {
        if (spec_.n < 1) throw std::invalid_argument("ecoc LM: n must be >= 1");
        if (spec_.n > 63) throw std::invalid_argument("ecoc LM: n must be <= 63");
        if ((1ULL << spec_.n) < spec_.N) {
            throw not_injective_error("ecoc LM: 2^n < N (n = " + std::to_string(spec_.n) +
                                      ", N = " + std::to_string(spec_.N) + ")");
        }
        site_sizes_.assign(spec_.n, 2);
        // smallest k with 2^k >= N
        effective_k_ = 0;
        u64 acc = 1;
        while (acc < spec_.N) {
            acc = detail::sat_mul(acc, 2);
            ++effective_k_;
        }
        if (effective_k_ == 0) effective_k_ = 1;
    }

    // The structural checks above already imply injectivity; at desk scale we
    // additionally confirm it by enumeration.
    void confirm_injective_exhaustively() const {
        std::vector<Codeword> words;
        words.reserve(spec_.N);
        for (Label y = 0; y < spec_.N; ++y) words.push_back(map_label(y));
        std::sort(words.begin(), words.end());
        if (std::adjacent_find(words.begin(), words.end()) != words.end()) {
            throw not_injective_error("LabelMapping: duplicate codeword found by exhaustive check");
        }
    }

    std::optional<Label> crt_reconstruct(const Codeword& cw) const {
        // Fold in sites until the running modulus covers [0, N).
        u128 x = cw[0];
        u128 m = spec_.primes[0];
        for (std::uint32_t i = 1; i < spec_.n && m < spec_.N; ++i) {
            const u64 pi = spec_.primes[i];
            // Solve x + m*t = cw[i] (mod pi).
            const u64 m_mod = static_cast<u64>(m % pi);
            const u64 x_mod = static_cast<u64>(x % pi);
            const u64 rhs = (cw[i] + pi - x_mod) % pi;
            const FieldElement inv = field_inv(FieldElement(m_mod, pi));
            const u64 t = static_cast<u64>(static_cast<u128>(rhs) * inv.value() % pi);
            x += m * t;
            m *= pi;
        }
        if (x > UINT64_MAX) return std::nullopt;
        return static_cast<Label>(x);
    }

    std::optional<Label> rs_interpolate(const Codeword& cw) const {
        if (spec_.n < spec_.k) return std::nullopt;
        const u64 p = spec_.p;
        // Lagrange through the first k points gives the message polynomial.
        std::vector<u64> coeffs(spec_.k, 0);
        for (std::uint32_t j = 0; j < spec_.k; ++j) {
            // Basis polynomial L_j expanded into coefficients.
            std::vector<u64> basis = {1};
            u64 denom = 1;
            for (std::uint32_t t = 0; t < spec_.k; ++t) {
                if (t == j) continue;
                const u64 xt = spec_.points[t] % p;
                const u64 xj = spec_.points[j] % p;
                // basis *= (z - xt)
                std::vector<u64> next(basis.size() + 1, 0);
                for (std::size_t c = 0; c < basis.size(); ++c) {
                    next[c + 1] = (next[c + 1] + basis[c]) % p;
                    next[c] = (next[c] + static_cast<u64>(static_cast<u128>(basis[c]) * ((p - xt) % p) % p)) % p;
                }
                basis = std::move(next);
                denom = static_cast<u64>(static_cast<u128>(denom) * ((xj + p - xt) % p) % p);
            }
            const u64 scale =
                static_cast<u64>(static_cast<u128>(cw[j]) * field_inv(FieldElement(denom, p)).value() % p);
            for (std::size_t c = 0; c < basis.size() && c < coeffs.size(); ++c) {
                coeffs[c] = (coeffs[c] + static_cast<u64>(static_cast<u128>(basis[c]) * scale % p)) % p;
            }
        }
        // Digits back to the label.
        u128 x = 0;
        u128 pw = 1;
        for (std::uint32_t j = 0; j < spec_.k; ++j) {
            x += pw * coeffs[j];
            pw *= p;
        }
        if (x > UINT64_MAX) return std::nullopt;
        return static_cast<Label>(x);
    }
};

} // namespace lm
