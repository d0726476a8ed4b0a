#pragma once

// Named arithmetical functions and additivity predicates.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "dirichlet/arith_func.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/factorize.hpp"
#include "dirichlet/witness.hpp"

namespace dirichlet {

enum class FunctionKind {
    mobius,
    euler_phi,
    mangoldt,
    liouville,
    ramanujan_tau,
    dedekind_psi,
    big_omega,
    distinct_prime_count,
    p_adic_valuation,
    log,
    identity_e,
    delta,
    unit_u,
    natural_N,
};

struct FunctionId {
    FunctionKind kind;
    // p for p_adic_valuation, m for delta; unused otherwise.
    std::uint64_t param = 0;

    static FunctionId of(FunctionKind kind, std::uint64_t param = 0) {
        FunctionId id{kind, param};
        id.validate();
        return id;
    }

    static FunctionId parse(std::string_view name, std::optional<std::uint64_t> param = std::nullopt) {
        for (const auto& [kind, text] : table()) {
            if (name != text) continue;
            const bool parametric = kind == FunctionKind::p_adic_valuation || kind == FunctionKind::delta;
            if (parametric && !param) throw DomainError(std::string(name) + " requires --param");
            if (!parametric && param) throw DomainError(std::string(name) + " takes no parameter");
            return of(kind, param.value_or(0));
        }
        throw DomainError("unknown function id '" + std::string(name) + "'");
    }

    std::string_view base_name() const {
        for (const auto& [kind_, text] : table())
            if (kind_ == kind) return text;
        return "?";
    }

    // e.g. "mobius", "delta(6)", "p_adic_valuation(2)".
    std::string name() const {
        std::string out(base_name());
        if (kind == FunctionKind::p_adic_valuation || kind == FunctionKind::delta)
            out += "(" + std::to_string(param) + ")";
        return out;
    }

    ScalarMode mode() const {
        return (kind == FunctionKind::mangoldt || kind == FunctionKind::log) ? ScalarMode::floating : ScalarMode::exact;
    }

    void validate() const {
        if (kind == FunctionKind::p_adic_valuation && !is_prime(param))
            throw DomainError("p_adic_valuation needs a prime parameter, got " + std::to_string(param));
        if (kind == FunctionKind::delta && param < 1) throw DomainError("delta needs m >= 1");
    }

    static const std::vector<std::pair<FunctionKind, std::string_view>>& table() {
        static const std::vector<std::pair<FunctionKind, std::string_view>> t = {
            {FunctionKind::mobius, "mobius"},
            {FunctionKind::euler_phi, "euler_phi"},
            {FunctionKind::mangoldt, "mangoldt"},
            {FunctionKind::liouville, "liouville"},
            {FunctionKind::ramanujan_tau, "ramanujan_tau"},
            {FunctionKind::dedekind_psi, "dedekind_psi"},
            {FunctionKind::big_omega, "big_omega"},
            {FunctionKind::distinct_prime_count, "distinct_prime_count"},
            {FunctionKind::p_adic_valuation, "p_adic_valuation"},
            {FunctionKind::log, "log"},
            {FunctionKind::identity_e, "identity_e"},
            {FunctionKind::delta, "delta"},
            {FunctionKind::unit_u, "unit_u"},
            {FunctionKind::natural_N, "natural_N"},
        };
        return t;
    }
};

namespace detail {

// Coefficients c_0..c_{len-1} of prod_{j >= 1} (1 - x^j)^24 mod x^len.
inline std::vector<mpz_class> eta_power_24(std::size_t len) {
    std::vector<mpz_class> euler(len, 0);
    euler[0] = 1;
    for (std::size_t j = 1; j < len; ++j)
        for (std::size_t i = len - 1; i >= j; --i) euler[i] -= euler[i - j];

    auto mul = [len](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
        std::vector<mpz_class> c(len, 0);
        for (std::size_t i = 0; i < len; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; i + j < len; ++j)
                if (b[j] != 0) c[i + j] += a[i] * b[j];
        }
        return c;
    };
    auto p2 = mul(euler, euler);
    auto p4 = mul(p2, p2);
    auto p8 = mul(p4, p4);
    auto p16 = mul(p8, p8);
    return mul(p16, p8);
}

template <class Fn>
ArithFunc tabulate_exact(std::size_t n, Fn fn) {
    ArithFunc::ExactValues v;
    v.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) v.push_back(fn(i));
    return ArithFunc(std::move(v));
}

template <class Fn>
ArithFunc tabulate_float(std::size_t n, Fn fn) {
    ArithFunc::FloatValues v;
    v.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) v.push_back(fn(i));
    return ArithFunc(std::move(v));
}

} // namespace detail

// Prefix f(1..n) of the named function. mangoldt and log come out in float
// mode, everything else exact.
inline ArithFunc generate(const FunctionId& id, std::size_t n) {
    if (n < 1) throw DomainError("truncation length must be >= 1");
    id.validate();
    switch (id.kind) {
    case FunctionKind::mobius:
        return detail::tabulate_exact(n, [](std::size_t i) {
            const auto fz = factorize(i);
            if (!fz.square_free()) return Rational(0);
            return Rational(fz.distinct_count() % 2 == 0 ? 1 : -1);
        });
    case FunctionKind::euler_phi:
        return detail::tabulate_exact(n, [](std::size_t i) {
            Rational r(static_cast<unsigned long>(i));
            for (auto p : factorize(i).primes()) r *= Rational(1) - Rational(1, static_cast<unsigned long>(p));
            r.canonicalize();
            return r;
        });
    case FunctionKind::dedekind_psi:
        return detail::tabulate_exact(n, [](std::size_t i) {
            Rational r(static_cast<unsigned long>(i));
            for (auto p : factorize(i).primes()) r *= Rational(1) + Rational(1, static_cast<unsigned long>(p));
            r.canonicalize();
            return r;
        });
    case FunctionKind::mangoldt:
        return detail::tabulate_float(n, [](std::size_t i) {
            const auto fz = factorize(i);
            return fz.distinct_count() == 1 ? std::log(static_cast<double>(fz.factors[0].prime)) : 0.0;
        });
    case FunctionKind::liouville:
        return detail::tabulate_exact(n, [](std::size_t i) {
            if (i == 1) return Rational(1);
            return Rational(factorize(i).total_exponent() % 2 == 0 ? 1 : -1);
        });
    case FunctionKind::ramanujan_tau: {
        const auto coeffs = detail::eta_power_24(n);
        ArithFunc::ExactValues v;
        v.reserve(n);
        for (const auto& c : coeffs) v.emplace_back(c);
        return ArithFunc(std::move(v));
    }
    case FunctionKind::big_omega:
        return detail::tabulate_exact(n, [](std::size_t i) { return Rational(factorize(i).total_exponent()); });
    case FunctionKind::distinct_prime_count:
        return detail::tabulate_exact(n, [](std::size_t i) {
            return Rational(static_cast<unsigned long>(factorize(i).distinct_count()));
        });
    case FunctionKind::p_adic_valuation:
        return detail::tabulate_exact(n, [p = id.param](std::size_t i) {
            unsigned e = 0;
            for (std::uint64_t k = i; k % p == 0; k /= p) ++e;
            return Rational(e);
        });
    case FunctionKind::log:
        return detail::tabulate_float(n, [](std::size_t i) { return std::log(static_cast<double>(i)); });
    case FunctionKind::identity_e:
        return ArithFunc::identity(n);
    case FunctionKind::delta:
        return ArithFunc::indicator(id.param, n);
    case FunctionKind::unit_u:
        return detail::tabulate_exact(n, [](std::size_t) { return Rational(1); });
    case FunctionKind::natural_N:
        return detail::tabulate_exact(n, [](std::size_t i) { return Rational(static_cast<unsigned long>(i)); });
    }
    throw DomainError("unhandled function id");
}

inline ArithFunc generate(FunctionKind kind, std::size_t n, std::uint64_t param = 0) {
    return generate(FunctionId::of(kind, param), n);
}

namespace detail {

inline Witness additivity_scan(const ArithFunc& f, bool coprime_only) {
    const std::size_t n = f.size();
    for (std::size_t a = 1; a <= n; ++a) {
        for (std::size_t b = 1; a * b <= n; ++b) {
            if (coprime_only && std::gcd(a, b) != 1) continue;
            if (!f(a * b).approx_equal(f(a) + f(b)))
                return Witness::non_member_pair(a, b, "f(" + std::to_string(a * b) + ") != f(" + std::to_string(a) +
                                                          ") + f(" + std::to_string(b) + ")");
        }
    }
    return Witness::member(coprime_only ? "additive on window" : "completely additive on window");
}

} // namespace detail

// f(mn) = f(m) + f(n) for coprime m, n with mn <= N; the first violating pair otherwise.
inline Witness is_additive(const ArithFunc& f) { return detail::additivity_scan(f, true); }

// As is_additive, over all pairs with mn <= N.
inline Witness is_completely_additive(const ArithFunc& f) { return detail::additivity_scan(f, false); }

} // namespace dirichlet
