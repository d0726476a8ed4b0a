#pragma once

// Classification of ring elements: units versus the maximal ideal, atom
// certificates, additivity, and norm facts about products of non-units.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dirichlet/arith_func.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/factorize.hpp"
#include "dirichlet/sampling.hpp"
#include "dirichlet/witness.hpp"
#include "dirichlet/zoo.hpp"

namespace dirichlet {

enum class AtomCertificate { prime_norm, composite_norm_next_nonzero, none };
enum class AdditiveClass { not_additive, additive, completely_additive };

inline std::string_view to_string(AtomCertificate c) {
    switch (c) {
    case AtomCertificate::prime_norm: return "prime_norm";
    case AtomCertificate::composite_norm_next_nonzero: return "composite_norm_next_nonzero";
    case AtomCertificate::none: return "none";
    }
    return "?";
}

inline std::string_view to_string(AdditiveClass c) {
    switch (c) {
    case AdditiveClass::not_additive: return "not_additive";
    case AdditiveClass::additive: return "additive";
    case AdditiveClass::completely_additive: return "completely_additive";
    }
    return "?";
}

struct ElementReport {
    bool is_unit = false;
    bool in_maximal = false;
    Norm norm;
    AtomCertificate atom_certificate = AtomCertificate::none;
    AdditiveClass additive_class = AdditiveClass::not_additive;
};

inline AdditiveClass additive_class(const ArithFunc& f) {
    if (is_completely_additive(f).is_member()) return AdditiveClass::completely_additive;
    if (is_additive(f).is_member()) return AdditiveClass::additive;
    return AdditiveClass::not_additive;
}

// Atom certificates follow the two sufficient criteria for a non-unit f
// with norm c:
//   c prime: any product g * h of non-units vanishes at c.
//   c composite and f(c + 1) != 0: any product of non-units with norm
//   c = ab vanishes at ab + 1.
// Anything else is reported as none; atomicity is not decided from a prefix.
inline ElementReport classify(const ArithFunc& f) {
    const Norm nf = norm(f);
    if (nf.is_zero()) throw DomainError("classify: function is zero on the window");
    ElementReport r;
    r.is_unit = !f.is_zero_at(1);
    r.in_maximal = !r.is_unit;
    r.norm = nf;
    if (!r.is_unit) {
        const std::size_t c = nf.value();
        if (is_prime(c))
            r.atom_certificate = AtomCertificate::prime_norm;
        else if (c + 1 <= f.size() && !f.is_zero_at(c + 1))
            r.atom_certificate = AtomCertificate::composite_norm_next_nonzero;
    }
    r.additive_class = additive_class(f);
    return r;
}

// For non-units f, g: (f * g)(p) = 0 at every prime p <= N, hence norm(f * g)
// is never a prime. Returns member on confirmation, otherwise the offending index.
inline Witness check_nonprime_norm_product(const ArithFunc& f, const ArithFunc& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("check_nonprime_norm_product needs nonzero functions");
    if (!f.is_zero_at(1) || !g.is_zero_at(1)) throw DomainError("check_nonprime_norm_product needs non-units");
    const ArithFunc h = convolve(f, g);
    std::size_t scanned = 0;
    for (auto p : primes_up_to(h.size())) {
        ++scanned;
        if (!h.is_zero_at(p)) return Witness::non_member_at(p, "(f*g)(p) != 0 at a prime");
    }
    const Norm nh = norm(h);
    if (nh.is_zero()) return Witness::member("product zero at truncation; " + std::to_string(scanned) + " primes scanned");
    if (is_prime(nh.value())) return Witness::non_member_at(nh.value(), "prime norm");
    return Witness::member("norm " + nh.to_string() + " composite; " + std::to_string(scanned) + " primes scanned");
}

// Samples pairs of units and checks closure, commutativity, identity and
// inverses on the window. Returns the first failing sample number.
inline Witness units_group_probe(std::size_t samples, std::uint64_t seed, std::size_t n) {
    Sampler sampler(seed);
    const ArithFunc e = ArithFunc::identity(n);
    for (std::size_t s = 1; s <= samples; ++s) {
        const auto f = sampler.unit(n);
        const auto g = sampler.unit(n);
        const auto fg = convolve(f, g);
        auto fail = [s](const char* what) { return Witness::non_member_at(s, what); };
        if (fg(1).rational() != f(1).rational() * g(1).rational() || fg.is_zero_at(1)) return fail("closure");
        if (fg != convolve(g, f)) return fail("commutativity");
        if (convolve(e, f) != f) return fail("identity");
        const auto fi = invert(f);
        if (fi.is_zero_at(1) || convolve(f, fi) != e) return fail("inverse");
        if (invert(fg) != convolve(invert(g), fi)) return fail("inverse of product");
    }
    return Witness::member(std::to_string(samples) + " unit pairs checked");
}

// Bounds for the exhaustive factorization search.
struct FactorSearchBounds {
    std::vector<long> coefficients{-1, 0, 1};
    std::size_t window = 16;
};

// All integer-valued non-units of length `window` with norm exactly `norm_index`
// and entries from the coefficient set on norm_index..window/2. Values past
// window/2 cannot reach the window in a product with another non-unit, so
// they are left zero.
inline std::vector<std::vector<long>> nonunit_candidates(std::size_t norm_index, const FactorSearchBounds& bounds) {
    const std::size_t reach = bounds.window / 2;
    std::vector<std::vector<long>> out;
    if (norm_index < 2 || norm_index > reach) return out;
    std::vector<long> lead;
    for (long c : bounds.coefficients)
        if (c != 0) lead.push_back(c);

    std::vector<long> v(bounds.window, 0);
    auto rec = [&](auto&& self, std::size_t index) -> void {
        if (index > reach) {
            out.push_back(v);
            return;
        }
        const auto& choices = index == norm_index ? lead : bounds.coefficients;
        for (long c : choices) {
            v[index - 1] = c;
            self(self, index + 1);
        }
        v[index - 1] = 0;
    };
    rec(rec, norm_index);
    return out;
}

// Integer Dirichlet product on 1..window.
inline std::vector<long> convolve_small(const std::vector<long>& g, const std::vector<long>& h) {
    const std::size_t n = std::min(g.size(), h.size());
    std::vector<long> out(n, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        if (g[i - 1] == 0) continue;
        for (std::size_t j = 1; i * j <= n; ++j) out[i * j - 1] += g[i - 1] * h[j - 1];
    }
    return out;
}

// Exhaustive search for non-units g, h within `bounds` with g * h = f on
// 1..min(N_f, bounds.window). Returns the first pair found.
inline std::optional<std::pair<ArithFunc, ArithFunc>> find_factorization(const ArithFunc& f, const FactorSearchBounds& bounds) {
    const std::size_t w = std::min(f.size(), bounds.window);
    if (!f.is_exact()) throw ModeMismatch("factorization search requires exact mode");
    std::vector<long> target(w);
    for (std::size_t i = 1; i <= w; ++i) {
        const Rational& q = f.exact()[i - 1];
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
        target[i - 1] = q.get_num().get_si();
    }
    std::size_t c = 0;
    for (std::size_t i = 1; i <= w; ++i)
        if (target[i - 1] != 0) { c = i; break; }
    if (c < 4) return std::nullopt;  // unit, zero, or prime norm 2, 3

    FactorSearchBounds local = bounds;
    local.window = w;
    for (std::size_t a = 2; a * 2 <= c; ++a) {
        if (c % a != 0) continue;
        const auto gs = nonunit_candidates(a, local);
        const auto hs = nonunit_candidates(c / a, local);
        for (const auto& g : gs)
            for (const auto& h : hs)
                if (convolve_small(g, h) == target) {
                    auto to_func = [](const std::vector<long>& v) { return ArithFunc::from_ints(v); };
                    return std::pair{to_func(g), to_func(h)};
                }
    }
    return std::nullopt;
}

} // namespace dirichlet
