#pragma once

// Executable checks of the structural statements about the ring of
// arithmetical functions, run at a finite truncation. Each check is keyed by
// the statement it exercises so a failure points at it directly.

#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "dirichlet/arith_func.hpp"
#include "dirichlet/factorize.hpp"
#include "dirichlet/ideals.hpp"
#include "dirichlet/sampling.hpp"
#include "dirichlet/structure.hpp"
#include "dirichlet/zoo.hpp"

namespace dirichlet {

struct VerifyConfig {
    std::size_t n = 128;
    std::uint64_t seed = 7;
    std::size_t samples = 20;
    FactorSearchBounds atom_bounds{};
};

struct CheckResult {
    std::string statement;
    bool passed = false;
    std::string detail;
};

// Additive function with random values at prime powers; completely additive
// when `complete`, with f(p^a) = a f(p).
inline ArithFunc random_additive(std::size_t n, Sampler& sampler, bool complete) {
    std::vector<Rational> at_prime_power(n + 1, Rational(0));
    for (auto p : primes_up_to(n)) {
        const Rational fp = sampler.small_rational();
        unsigned a = 1;
        for (std::uint64_t q = p; q <= n; q *= p, ++a) at_prime_power[q] = complete ? Rational(fp * a) : sampler.small_rational();
    }
    ArithFunc::ExactValues v(n, Rational(0));
    for (std::size_t i = 2; i <= n; ++i) {
        Rational s = 0;
        for (const auto& pp : factorize(i).factors) {
            std::uint64_t q = 1;
            for (unsigned a = 0; a < pp.exponent; ++a) q *= pp.prime;
            s += at_prime_power[q];
        }
        v[i - 1] = s;
    }
    return ArithFunc(std::move(v));
}

namespace detail {

struct CheckFailure {
    std::string what;
};

inline void expect(bool cond, const std::string& what) {
    if (!cond) throw CheckFailure{what};
}

inline std::vector<CheckResult> run_checks(const VerifyConfig& cfg) {
    const std::size_t n = cfg.n;
    const std::size_t small = std::min<std::size_t>(n, 64);
    const std::size_t k = cfg.samples;
    std::vector<CheckResult> results;

    auto run = [&](std::string statement, const std::function<std::string(Sampler&)>& body) {
        Sampler sampler(cfg.seed + results.size());
        CheckResult r{std::move(statement), false, {}};
        try {
            r.detail = body(sampler);
            r.passed = true;
        } catch (const CheckFailure& f) {
            r.detail = f.what;
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    };

    run("Ring: (A, +, *) is a commutative ring with identity e", [&](Sampler& s) {
        const auto e = ArithFunc::identity(small);
        for (std::size_t t = 0; t < k; ++t) {
            const auto f = s.dense(small), g = s.dense(small), h = s.dense(small);
            expect(convolve(f, g) == convolve(g, f), "commutativity");
            expect(convolve(convolve(f, g), h) == convolve(f, convolve(g, h)), "associativity");
            expect(convolve(f, add(g, h)) == add(convolve(f, g), convolve(f, h)), "distributivity");
            expect(convolve(e, f) == f, "identity");
        }
        return std::to_string(k) + " triples, N=" + std::to_string(small);
    });

    run("Invertibility criterion: f is invertible iff f(1) != 0", [&](Sampler& s) {
        const auto e = ArithFunc::identity(n);
        for (std::size_t t = 0; t < k; ++t) {
            const auto f = s.with_norm(n, s.coin() ? 1 : s.uniform(2, 5));
            bool inverted = true;
            try {
                expect(convolve(f, invert(f)) == e, "f * f^-1 != e");
            } catch (const NonUnit&) {
                inverted = false;
            }
            expect(inverted == !f.is_zero_at(1), "invert succeeded/failed against f(1)");
        }
        return std::to_string(k) + " functions, N=" + std::to_string(n);
    });

    run("The units G form an abelian group under *", [&](Sampler&) {
        const auto w = units_group_probe(k, cfg.seed, small);
        expect(w.is_member(), "unit probe failed at sample " + std::to_string(w.index.value_or(0)) + ": " + w.note);
        return w.note;
    });

    run("Examples: Omega, zeta, Lambda, nu_p, log non-invertible; mu, phi, lambda, tau, psi invertible", [&](Sampler&) {
        for (auto kind : {FunctionKind::big_omega, FunctionKind::distinct_prime_count, FunctionKind::mangoldt, FunctionKind::log})
            expect(classify(generate(kind, n)).in_maximal, std::string(FunctionId::of(kind).base_name()) + " is a unit");
        for (std::uint64_t p : {2, 3, 5})
            expect(classify(generate(FunctionKind::p_adic_valuation, n, p)).in_maximal, "nu_p is a unit");
        for (auto kind : {FunctionKind::mobius, FunctionKind::euler_phi, FunctionKind::liouville, FunctionKind::ramanujan_tau,
                          FunctionKind::dedekind_psi})
            expect(classify(generate(kind, n)).is_unit, std::string(FunctionId::of(kind).base_name()) + " is not a unit");
        return std::string("10 named functions classified");
    });

    run("Additive or completely additive functions are non-invertible", [&](Sampler& s) {
        std::vector<ArithFunc> fs = {generate(FunctionKind::big_omega, n), generate(FunctionKind::distinct_prime_count, n),
                                     generate(FunctionKind::p_adic_valuation, n, 2)};
        for (std::size_t t = 0; t < k; ++t) fs.push_back(random_additive(n, s, t % 2 == 0));
        for (const auto& f : fs) {
            expect(is_additive(f).is_member(), "sample is not additive");
            if (!f.is_zero()) expect(classify(f).in_maximal, "additive function classified as a unit");
        }
        expect(classify(generate(FunctionKind::log, n)).additive_class == AdditiveClass::completely_additive, "log");
        return std::to_string(fs.size()) + " additive functions";
    });

    run("Add(A) is a group under pointwise addition", [&](Sampler& s) {
        expect(is_additive(ArithFunc::zero(n)).is_member(), "zero function");
        for (std::size_t t = 0; t < k; ++t) {
            const auto f = random_additive(n, s, false), g = random_additive(n, s, false);
            expect(is_additive(add(f, g)).is_member(), "f + g not additive");
            expect(is_additive(negate(f)).is_member(), "-f not additive");
        }
        return std::to_string(k) + " pairs";
    });

    run("Lambda and log are non-invertible but Lambda is not additive", [&](Sampler&) {
        const auto lam = generate(FunctionKind::mangoldt, n);
        expect(lam.is_zero_at(1), "Lambda(1) != 0");
        const auto w = is_additive(lam);
        expect(w.is_non_member(), "Lambda passed the additivity scan");
        return "Lambda violates additivity at (" + std::to_string(w.pair->first) + "," + std::to_string(w.pair->second) + ")";
    });

    run("A is a local ring with maximal ideal m = A \\ G", [&](Sampler& s) {
        const auto mx = IdealSpec::maximal();
        for (std::size_t t = 0; t < k; ++t) {
            const auto f = s.nonzero(n, 4);
            const auto r = classify(f);
            expect(r.is_unit != r.in_maximal, "unit / maximal dichotomy");
            const auto a = s.non_unit(n, 4), b = s.non_unit(n, 4), h = s.dense(n);
            expect(is_member(mx, add(a, b)) && is_member(mx, convolve(h, a)), "m not closed");
        }
        return std::to_string(k) + " samples";
    });

    run("m is an essential ideal", [&](Sampler& s) {
        const auto d2 = ArithFunc::indicator(2, n);
        for (std::size_t t = 0; t < k; ++t) {
            const auto f = s.nonzero(n, n / 2);
            const auto x = convolve(d2, f);
            expect(!x.is_zero() && is_member(IdealSpec::maximal(), x), "delta_2 * f not a nonzero element of m");
        }
        return std::to_string(k) + " principal ideals meet m";
    });

    run("I_n is an ideal and I_1 > I_2 > ... is a strict descending chain (not Artinian)", [&](Sampler& s) {
        for (std::size_t t = 0; t < k; ++t) {
            const auto spec = IdealSpec::norm_threshold(s.uniform(1, 8));
            const auto a = random_member(spec, n, s), b = random_member(spec, n, s), h = s.dense(n);
            expect(is_member(spec, add(a, b)) && is_member(spec, convolve(h, a)), "I_n closure");
        }
        const auto c = chain(ChainFamily::I_descending, 8, small);
        expect(c.verified(), "I chain separator failed");
        return "closure + chain I_1..I_8";
    });

    run("The norm is a multiplicative monoid homomorphism", [&](Sampler& s) {
        expect(norm(ArithFunc::identity(n)) == Norm(1), "norm(e) != 1");
        const auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
        for (std::size_t t = 0; t < k; ++t) {
            const auto f = s.nonzero(n, root), g = s.nonzero(n, root);
            expect(norm(convolve(f, g)).value() == norm(f).value() * norm(g).value(), "norm(f*g) != norm f * norm g");
        }
        return std::to_string(k) + " pairs";
    });

    run("A has no non-trivial idempotents", [&](Sampler&) {
        constexpr std::size_t w = 8;
        std::size_t idempotents = 0;
        std::vector<long> v(w, 0);
        for (std::size_t code = 0; code < 6561; ++code) {
            std::size_t c = code;
            for (auto& x : v) { x = static_cast<long>(c % 3) - 1; c /= 3; }
            if (convolve_small(v, v) != v) continue;
            ++idempotents;
            const bool zero = std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
            const bool e = v[0] == 1 && std::all_of(v.begin() + 1, v.end(), [](long x) { return x == 0; });
            expect(zero || e, "non-trivial idempotent found");
        }
        return std::to_string(idempotents) + " idempotents among 3^8 functions (0 and e)";
    });

    run("For every c there is an atom with norm c", [&](Sampler&) {
        for (std::size_t c = 2; c <= 12; ++c) {
            ArithFunc::ExactValues v(cfg.atom_bounds.window, Rational(0));
            v[c - 1] = 1;
            v[c] = 1;
            const ArithFunc f(std::move(v));
            const auto r = classify(f);
            const auto want = is_prime(c) ? AtomCertificate::prime_norm : AtomCertificate::composite_norm_next_nonzero;
            expect(r.atom_certificate == want, "certificate for c=" + std::to_string(c));
            expect(!find_factorization(f, cfg.atom_bounds), "factorization found for c=" + std::to_string(c));
        }
        return std::string("c = 2..12 certified, no factorization in search bounds");
    });

    run("If f is a non-unit with f(p) != 0 for a prime p, f is an atom", [&](Sampler& s) {
        for (std::size_t t = 0; t < k; ++t) {
            const auto g = s.non_unit(n, 6), h = s.non_unit(n, 6);
            for (auto p : primes_up_to(n)) expect(convolve(g, h).is_zero_at(p), "(g*h)(p) != 0");
        }
        // norm 4 with a nonzero value at a later prime
        for (std::uint64_t p : {5, 7, 11, 13}) {
            ArithFunc::ExactValues v(cfg.atom_bounds.window, Rational(0));
            v[3] = 1;
            v[p - 1] = 1;
            expect(!find_factorization(ArithFunc(std::move(v)), cfg.atom_bounds), "factorization found");
        }
        return std::to_string(k) + " non-unit products vanish at every prime";
    });

    run("P_m is a prime ideal", [&](Sampler& s) {
        for (std::uint64_t m : {6, 12, 30}) {
            const auto spec = IdealSpec::coprime(m);
            for (std::size_t t = 0; t < k; ++t) {
                const auto a = random_member(spec, n, s), b = random_member(spec, n, s), h = s.dense(n);
                expect(is_member(spec, add(a, b)) && is_member(spec, convolve(h, a)), "P_m closure");
                const auto f = s.nonzero(n, 3), g = s.nonzero(n, 3);
                const auto wf = member(spec, f), wg = member(spec, g);
                if (!wf.is_non_member() || !wg.is_non_member() || *wf.index * *wg.index > n) continue;
                const auto i = *wf.index, j = *wg.index;
                expect(convolve(f, g)(i * j).rational() == f(i).rational() * g(j).rational(), "prime-product witness");
            }
            expect(probe_prime(spec, k, cfg.seed, n).witness.is_undecided(), "counterexample to primality of P_m");
        }
        return std::string("m = 6, 12, 30");
    });

    run("P_p = <delta_p> is a principal prime ideal", [&](Sampler& s) {
        for (std::uint64_t p : {2, 3, 5}) {
            expect(is_member(IdealSpec::coprime(p), ArithFunc::indicator(p, n)), "delta_p not in P_p");
            for (std::size_t t = 0; t < k; ++t) {
                const auto f = random_member(IdealSpec::coprime(p), n, s);
                const auto g = principal_quotient(p, f).extended(n);
                expect(convolve(ArithFunc::indicator(p, n), g) == f, "delta_p * g != f");
            }
        }
        return std::string("p = 2, 3, 5");
    });

    run("P_m = <delta_q1, ..., delta_qk> needs k generators", [&](Sampler& s) {
        for (std::uint64_t m : {6, 12, 30}) {
            const std::size_t w = std::min<std::size_t>(n, 2 * m * m);
            for (std::size_t t = 0; t < k; ++t) {
                const auto f = random_member(IdealSpec::coprime(m), w, s);
                expect(reconstruct(decompose_P_m(m, f)) == f, "reconstruction");
            }
            const auto rows = generator_evaluations(m, w);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < rows.size(); ++j) expect(rows[i][j] == (i == j ? 1 : 0), "evaluation basis");
        }
        return std::string("m = 6, 12, 30");
    });

    run("A is not a Bezout domain", [&](Sampler& s) {
        const auto d2 = ArithFunc::indicator(2, small), d3 = ArithFunc::indicator(3, small);
        const auto p6 = IdealSpec::coprime(6);
        expect(is_member(p6, d2) && is_member(p6, d3), "delta_2, delta_3 in P_6");
        expect(!is_member(p6, ArithFunc::indicator(5, small)), "P_6 = A");
        std::size_t tried = 0;
        auto check = [&](const ArithFunc& g) {
            if (g.is_zero() || !g.is_zero_at(1)) return;
            ++tried;
            expect(!try_divide(d2, g) || !try_divide(d3, g), "single generator of delta_2 and delta_3");
        };
        for (std::size_t i = 1; i <= small; ++i) check(ArithFunc::indicator(i, small));
        for (std::size_t t = 0; t < 5 * k; ++t) check(s.nonzero(small, 4));
        return std::to_string(tried) + " non-unit candidates fail to generate both";
    });

    run("J_Q is a prime ideal", [&](Sampler& s) {
        for (const auto& q : std::vector<std::vector<std::uint64_t>>{{2, 3}, {2, 5, 7}}) {
            const auto spec = IdealSpec::prime_products(q);
            for (std::size_t t = 0; t < k; ++t) {
                const auto a = random_member(spec, n, s), b = random_member(spec, n, s), h = s.dense(n);
                expect(is_member(spec, add(a, b)) && is_member(spec, convolve(h, a)), "J_Q closure");
                const auto f = s.nonzero(n, 4), g = s.nonzero(n, 4);
                const auto wf = member(spec, f), wg = member(spec, g);
                if (!wf.is_non_member() || !wg.is_non_member() || *wf.index * *wg.index > n) continue;
                const auto i = *wf.index, j = *wg.index;
                expect(convolve(f, g)(i * j).rational() == f(i).rational() * g(j).rational(), "prime-product witness");
            }
            expect(probe_prime(spec, k, cfg.seed, n).witness.is_undecided(), "counterexample to primality of J_Q");
        }
        return std::string("Q = {2,3}, {2,5,7}");
    });

    run("J_Q = P_m when the complement of Q is finite", [&](Sampler& s) {
        for (const auto& excluded : std::vector<std::vector<std::uint64_t>>{{2}, {2, 3}, {3, 5, 7}}) {
            std::uint64_t m = 1;
            for (auto q : excluded) m *= q;
            const auto j = IdealSpec::prime_products(excluded, PrimeSetMode::complement);
            const auto p = IdealSpec::coprime(m);
            for (std::size_t i = 1; i <= n; ++i) {
                const auto d = ArithFunc::indicator(i, n);
                expect(is_member(j, d) == is_member(p, d), "oracles disagree on delta_" + std::to_string(i));
            }
            for (std::size_t t = 0; t < k; ++t) {
                const auto f = s.nonzero(n, 4);
                expect(is_member(j, f) == is_member(p, f), "oracles disagree on a random function");
            }
        }
        return std::string("complements {2}, {2,3}, {3,5,7}");
    });

    run("P_p <= P_m <= J_Q <= J_q for p | m, Q coprime to m, q in Q", [&](Sampler& s) {
        const auto pp = IdealSpec::coprime(2), pm = IdealSpec::coprime(6);
        const auto jq = IdealSpec::prime_products({5, 7}), jq1 = IdealSpec::prime_products({5});
        auto implies = [&](const ArithFunc& f) {
            if (is_member(pp, f)) expect(is_member(pm, f), "P_p not in P_m");
            if (is_member(pm, f)) expect(is_member(jq, f), "P_m not in J_Q");
            if (is_member(jq, f)) expect(is_member(jq1, f), "J_Q not in J_q");
        };
        for (std::size_t i = 1; i <= n; ++i) implies(ArithFunc::indicator(i, n));
        for (std::size_t t = 0; t < k; ++t) {
            implies(random_member(pp, n, s));
            implies(random_member(pm, n, s));
            implies(random_member(jq, n, s));
        }
        return std::string("p=2, m=6, Q={5,7}, q=5");
    });

    run("P_m1 = P_m2 iff m1 and m2 have the same prime divisors", [&](Sampler&) {
        std::size_t pairs = 0;
        for (std::uint64_t a = 2; a <= 30; ++a)
            for (std::uint64_t b = a; b <= 30; ++b) {
                bool agree = true;
                for (std::size_t i = 1; i <= small && agree; ++i) {
                    const auto d = ArithFunc::indicator(i, small);
                    agree = is_member(IdealSpec::coprime(a), d) == is_member(IdealSpec::coprime(b), d);
                }
                expect(agree == (factorize(a).primes() == factorize(b).primes()), "P_" + std::to_string(a) + " vs P_" + std::to_string(b));
                ++pairs;
            }
        return std::to_string(pairs) + " pairs m1, m2 <= 30";
    });

    run("A principal prime ideal is minimal (norm descent)", [&](Sampler& s) {
        expect(divisibility_depth(ArithFunc::indicator(8, small), ArithFunc::indicator(2, small)) == 3, "depth(delta_8, delta_2)");
        for (std::size_t t = 0; t < k; ++t) {
            const auto f = s.non_unit(small, 3);
            const auto h = convolve(s.nonzero(small, 3), power(f, static_cast<unsigned>(s.uniform(0, 2))));
            if (h.is_zero()) continue;
            const unsigned depth = divisibility_depth(h, f);
            expect(std::pow(static_cast<double>(norm(f).value()), depth) <= static_cast<double>(norm(h).value()), "depth bound");
        }
        return std::to_string(k) + " pairs respect depth <= log_norm(f) norm(h)";
    });

    run("K_n ideals form a strict ascending chain of non-prime ideals (not Noetherian)", [&](Sampler& s) {
        for (std::size_t t = 0; t < k; ++t) {
            const auto spec = IdealSpec::prime_tail(s.uniform(1, 6));
            const auto a = random_member(spec, n, s), b = random_member(spec, n, s), h = s.dense(n);
            expect(is_member(spec, add(a, b)) && is_member(spec, convolve(h, a)), "K_n closure");
        }
        expect(chain(ChainFamily::K_ascending, 8, small).verified(), "K chain separator");
        for (std::size_t i = 1; i <= 3; ++i)
            expect(probe_prime(IdealSpec::prime_tail(i), 0, cfg.seed, small).witness.is_non_member(), "K_n witness");
        return std::string("closure, chain K_1..K_8, witnesses for K_1..K_3");
    });

    run("Infinite Krull dimension (strict chains of prime ideals)", [&](Sampler&) {
        expect(chain(ChainFamily::P_ascending, 5, small).verified(), "P chain");
        expect(chain(ChainFamily::J_descending, 5, small).verified(), "J chain");
        return std::string("P_2 < ... < P_2310 and J_{2} > ... > J_{2,...,11}");
    });

    run("norm(f * g) is not a prime for non-units f, g", [&](Sampler& s) {
        for (std::size_t t = 0; t < k; ++t) {
            const auto w = check_nonprime_norm_product(s.non_unit(n, 8), s.non_unit(n, 8));
            expect(w.is_member(), "prime index hit at " + std::to_string(w.index.value_or(0)));
        }
        return std::to_string(k) + " pairs";
    });

    run("P_{m,k} is a semi-prime ideal for square-free m", [&](Sampler& s) {
        const std::size_t w = std::min<std::size_t>(n, 512);
        for (auto [m, kk] : std::vector<std::pair<std::uint64_t, std::size_t>>{{6, 1}, {30, 1}, {30, 2}}) {
            const auto spec = IdealSpec::gcd_count(m, kk);
            for (std::size_t t = 0; t < k; ++t) {
                const auto a = random_member(spec, w, s), h = s.dense(w);
                expect(is_member(spec, add(a, random_member(spec, w, s))) && is_member(spec, convolve(h, a)), "closure");
                const auto f = s.nonzero(w, 3);
                const auto r = probe_semiprime(m, kk, f, 2, w);
                expect(r.holds, "f^r entered P(m,k)");
            }
        }
        return std::string("(m,k) = (6,1), (30,1), (30,2)");
    });

    run("P_{m,k} is not prime for 1 <= k < zeta(m)", [&](Sampler&) {
        for (auto [m, kk] : std::vector<std::pair<std::uint64_t, std::size_t>>{{6, 1}, {30, 1}, {30, 2}}) {
            const auto p = probe_prime(IdealSpec::gcd_count(m, kk), 0, cfg.seed, n);
            expect(p.witness.is_non_member(), "no witness for P(" + std::to_string(m) + "," + std::to_string(kk) + ")");
        }
        return std::string("delta_alpha * delta_beta witnesses");
    });

    run("P_{m,0} = P_m and P_{m,k} = {0} for k >= zeta(m)", [&](Sampler&) {
        for (std::uint64_t m : {6, 30, 210}) {
            const auto zeta = factorize(m).distinct_count();
            for (std::size_t i = 1; i <= n; ++i) {
                const auto d = ArithFunc::indicator(i, n);
                expect(is_member(IdealSpec::gcd_count(m, 0), d) == is_member(IdealSpec::coprime(m), d), "P_{m,0} != P_m");
                expect(!is_member(IdealSpec::gcd_count(m, zeta), d), "P_{m,zeta} contains an indicator");
            }
        }
        return std::string("m = 6, 30, 210");
    });

    run("Function definitions: mu = u^-1 and phi = mu * N", [&](Sampler&) {
        const auto mu = generate(FunctionKind::mobius, n);
        expect(invert(generate(FunctionKind::unit_u, n)) == mu, "mu != u^-1");
        expect(convolve(mu, generate(FunctionKind::natural_N, n)) == generate(FunctionKind::euler_phi, n), "phi != mu * N");
        return "N=" + std::to_string(n);
    });

    return results;
}

} // namespace detail

inline std::vector<CheckResult> verify_statements(const VerifyConfig& cfg) {
    if (cfg.n < 32) throw DomainError("verification needs a window of at least 32");
    return detail::run_checks(cfg);
}

} // namespace dirichlet
