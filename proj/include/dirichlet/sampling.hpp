#pragma once

// Seeded random arithmetical functions for property checks and probes.
// Entries are small rationals a/b with a in [-3, 3], b in [1, 3].

#include <algorithm>
#include <cstdint>
#include <random>

#include "dirichlet/arith_func.hpp"

namespace dirichlet {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    Rational small_rational() {
        std::uniform_int_distribution<long> num(-3, 3);
        std::uniform_int_distribution<long> den(1, 3);
        return make_rational(num(rng_), den(rng_));
    }

    Rational nonzero_rational() {
        Rational q;
        do q = small_rational();
        while (sgn(q) == 0);
        return q;
    }

    std::size_t uniform(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    // Every entry drawn independently.
    ArithFunc dense(std::size_t n) {
        ArithFunc::ExactValues v(n);
        for (auto& q : v) q = small_rational();
        return ArithFunc(std::move(v));
    }

    // Norm exactly `norm_index` (<= n); entries after it nonzero with probability `density`.
    ArithFunc with_norm(std::size_t n, std::size_t norm_index, double density = 0.5) {
        ArithFunc::ExactValues v(n, Rational(0));
        v[norm_index - 1] = nonzero_rational();
        for (std::size_t i = norm_index; i < n; ++i)
            if (coin(density)) v[i] = nonzero_rational();
        return ArithFunc(std::move(v));
    }

    ArithFunc unit(std::size_t n) { return with_norm(n, 1); }

    // A nonzero element of the maximal ideal with norm in [2, max_norm].
    ArithFunc non_unit(std::size_t n, std::size_t max_norm) {
        return with_norm(n, uniform(2, std::min(max_norm, n)));
    }

    // Nonzero function whose norm is drawn from [1, max_norm].
    ArithFunc nonzero(std::size_t n, std::size_t max_norm) { return with_norm(n, uniform(1, std::min(max_norm, n))); }

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace dirichlet
