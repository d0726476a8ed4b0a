#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "dirichlet/errors.hpp"

namespace dirichlet {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization: primes strictly increasing, empty iff n = 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;

    std::size_t distinct_count() const noexcept { return factors.size(); }

    unsigned total_exponent() const noexcept {
        unsigned s = 0;
        for (const auto& pp : factors) s += pp.exponent;
        return s;
    }

    bool square_free() const noexcept {
        for (const auto& pp : factors)
            if (pp.exponent > 1) return false;
        return true;
    }

    std::vector<std::uint64_t> primes() const {
        std::vector<std::uint64_t> out;
        out.reserve(factors.size());
        for (const auto& pp : factors) out.push_back(pp.prime);
        return out;
    }

    unsigned exponent_of(std::uint64_t p) const noexcept {
        for (const auto& pp : factors)
            if (pp.prime == p) return pp.exponent;
        return 0;
    }
};

// Trial division up to sqrt(n).
inline Factorization factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    Factorization out{n, {}};
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    if (n > 1) out.factors.push_back({n, 1});
    return out;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

// pi_k with pi_1 = 2.
inline std::uint64_t nth_prime(std::size_t k) {
    if (k == 0) throw DomainError("prime indices start at 1");
    std::uint64_t candidate = 1;
    while (k > 0) {
        ++candidate;
        if (is_prime(candidate)) --k;
    }
    return candidate;
}

// k with pi_k = p; 0 when p is not prime.
inline std::size_t prime_index(std::uint64_t p) {
    if (!is_prime(p)) return 0;
    std::size_t k = 0;
    for (std::uint64_t q = 2; q <= p; ++q)
        if (is_prime(q)) ++k;
    return k;
}

inline std::size_t distinct_prime_count(std::uint64_t n) { return factorize(n).distinct_count(); }

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

} // namespace dirichlet
