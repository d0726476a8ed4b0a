#include <gtest/gtest.h>

#include "dirichlet/ideals.hpp"
#include "dirichlet/zoo.hpp"
#include "oracles.hpp"

using namespace dirichlet;

namespace {

ArithFunc delta(std::size_t m, std::size_t n) { return ArithFunc::indicator(m, n); }

// Oracle membership: evaluates the vanishing predicate from the definitions.
bool oracle_in_P(std::uint64_t m, const ArithFunc& f) {
    for (std::size_t i = 1; i <= f.size(); ++i)
        if (oracle::euclid_gcd(m, i) == 1 && !f.is_zero_at(i)) return false;
    return true;
}

bool oracle_in_Pk(std::uint64_t m, std::size_t k, const ArithFunc& f) {
    for (std::size_t i = 1; i <= f.size(); ++i)
        if (oracle::distinct_primes(oracle::euclid_gcd(m, i)) <= static_cast<long>(k) && !f.is_zero_at(i)) return false;
    return true;
}

} // namespace

TEST(Member, Examples) {
    const std::size_t n = 16;
    EXPECT_TRUE(is_member(IdealSpec::coprime(6), delta(2, n)));
    EXPECT_TRUE(is_member(IdealSpec::coprime(6), delta(3, n)));
    const auto w = member(IdealSpec::coprime(6), delta(5, n));
    ASSERT_TRUE(w.is_non_member());
    EXPECT_EQ(*w.index, 5u);

    EXPECT_TRUE(is_member(IdealSpec::maximal(), delta(2, n)));
    EXPECT_EQ(*member(IdealSpec::maximal(), ArithFunc::identity(n)).index, 1u);

    EXPECT_TRUE(is_member(IdealSpec::norm_threshold(3), delta(3, n)));
    EXPECT_EQ(*member(IdealSpec::norm_threshold(3), delta(2, n)).index, 2u);
    EXPECT_THROW(member(IdealSpec::norm_threshold(20), delta(2, n)), WindowTooSmall);

    // K(3) vanishes at 1 and at primes >= 5.
    EXPECT_TRUE(is_member(IdealSpec::prime_tail(3), delta(3, n)));
    EXPECT_EQ(*member(IdealSpec::prime_tail(3), delta(7, n)).index, 7u);

    // J({2,3}) vanishes on 1, 2, 3, 4, 6, 8, 9, 12, 16.
    const auto j = IdealSpec::prime_products({2, 3});
    EXPECT_TRUE(is_member(j, delta(5, n)));
    EXPECT_TRUE(is_member(j, delta(10, n)));
    EXPECT_EQ(*member(j, delta(12, n)).index, 12u);
    EXPECT_EQ(*member(j, ArithFunc::identity(n)).index, 1u);

    EXPECT_THROW(IdealSpec::gcd_count(12, 1), DomainError);
}

TEST(Member, ParseRoundTrip) {
    for (const char* text : {"I(5)", "m", "P(6)", "P(6,1)", "J(2,3)", "Jc(2,3)", "K(3)"})
        EXPECT_EQ(IdealSpec::parse(text).to_string(), text);
    EXPECT_THROW(IdealSpec::parse("Q(2)"), DomainError);
}

TEST(Member, AgreesWithOracle) {
    Sampler rng(21);
    for (int t = 0; t < 200; ++t) {
        const auto f = rng.with_norm(64, rng.uniform(1, 64), 0.1);
        for (std::uint64_t m : {2u, 6u, 12u, 30u, 35u}) EXPECT_EQ(is_member(IdealSpec::coprime(m), f), oracle_in_P(m, f));
        for (std::size_t k : {0u, 1u, 2u}) EXPECT_EQ(is_member(IdealSpec::gcd_count(30, k), f), oracle_in_Pk(30, k, f));
    }
}

TEST(PrincipalQuotient, Examples) {
    EXPECT_EQ(principal_quotient(2, delta(6, 12)), delta(3, 6));
    try {
        principal_quotient(3, delta(2, 12));
        FAIL() << "expected NotMember";
    } catch (const NotMember& e) {
        EXPECT_EQ(e.index(), 2u);
    }
    EXPECT_THROW(principal_quotient(4, delta(4, 12)), DomainError);
}

TEST(PrincipalQuotient, RoundTrip) {
    Sampler rng(22);
    const std::size_t n = 210;
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        for (int t = 0; t < 20; ++t) {
            const auto f = random_member(IdealSpec::coprime(p), n, rng);
            const auto g = principal_quotient(p, f);
            EXPECT_EQ(g.size(), n / p);
            EXPECT_EQ(convolve(delta(p, n), g.extended(n)), f);
        }
    }
}

TEST(Decompose, Examples) {
    const std::size_t n = 36;
    const auto d = decompose_P_m(6, add(delta(2, n), delta(3, n)));
    ASSERT_EQ(d.primes, (std::vector<std::uint64_t>{2, 3}));
    EXPECT_EQ(d.cofactors[0], ArithFunc::identity(n));
    EXPECT_EQ(d.cofactors[1], ArithFunc::identity(n));

    Sampler rng(23);
    const auto f12 = random_member(IdealSpec::coprime(12), 144, rng);
    EXPECT_EQ(reconstruct(decompose_P_m(12, f12)), f12);

    const auto fp = random_member(IdealSpec::coprime(7), 50, rng);
    const auto dp = decompose_P_m(7, fp);
    ASSERT_EQ(dp.generators.size(), 1u);
    EXPECT_EQ(dp.cofactors[0].truncated(50 / 7), principal_quotient(7, fp));

    EXPECT_THROW(decompose_P_m(6, delta(5, n)), NotMember);
}

TEST(Decompose, GeneratorBasisIsIdentity) {
    const auto rows = generator_evaluations(30, 64);
    ASSERT_EQ(rows.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(rows[i][j], i == j ? 1 : 0);
}

TEST(Chain, Examples) {
    const auto p = chain(ChainFamily::P_ascending, 3, 64);
    ASSERT_EQ(p.links.size(), 2u);
    EXPECT_EQ(p.links[0].separator_index, 3u);
    EXPECT_EQ(p.links[1].separator_index, 5u);
    EXPECT_TRUE(p.verified());

    const auto i = chain(ChainFamily::I_descending, 4, 16);
    ASSERT_EQ(i.links.size(), 3u);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(i.links[k].separator_index, k + 1);
    EXPECT_TRUE(i.verified());

    const auto k = chain(ChainFamily::K_ascending, 3, 64);
    ASSERT_EQ(k.links.size(), 2u);
    EXPECT_EQ(k.links[0].separator_index, 2u);
    EXPECT_EQ(k.links[1].separator_index, 3u);
    EXPECT_TRUE(k.verified());

    EXPECT_TRUE(chain(ChainFamily::J_descending, 5, 64).verified());
    EXPECT_THROW(chain(ChainFamily::K_ascending, 8, 10), WindowTooSmall);
    EXPECT_THROW(chain(ChainFamily::P_ascending, 1, 10), DomainError);
}

TEST(Chain, DotOutput) {
    const auto dot = to_dot(chain(ChainFamily::P_ascending, 2, 16));
    EXPECT_EQ(dot, "digraph P_ascending {\n"
                   "  n0 [label=\"P(2)\"];\n"
                   "  n1 [label=\"P(6)\"];\n"
                   "  n0 -> n1 [label=\"delta(3)\"];\n"
                   "}\n");
}

TEST(ProbePrime, Examples) {
    const auto k3 = probe_prime(IdealSpec::prime_tail(3), 0, 1, 64);
    EXPECT_TRUE(k3.witness.is_non_member());
    ASSERT_TRUE(k3.left && k3.right);
    EXPECT_TRUE(is_member(IdealSpec::prime_tail(3), convolve(*k3.left, *k3.right)));

    const auto p61 = probe_prime(IdealSpec::gcd_count(6, 1), 0, 1, 64);
    ASSERT_TRUE(p61.witness.is_non_member());
    EXPECT_EQ(*p61.left, delta(2, 64));
    EXPECT_EQ(*p61.right, delta(3, 64));

    const auto p6 = probe_prime(IdealSpec::coprime(6), 500, 7, 128);
    EXPECT_TRUE(p6.witness.is_undecided());
    EXPECT_TRUE(probe_prime(IdealSpec::prime_products({2, 3}), 200, 7, 128).witness.is_undecided());
    EXPECT_TRUE(probe_prime(IdealSpec::maximal(), 200, 7, 64).witness.is_undecided());

    // I(5) is not prime: delta_2 * delta_3 = delta_6 lies in I(5).
    const auto i5 = probe_prime(IdealSpec::norm_threshold(5), 0, 1, 64);
    ASSERT_TRUE(i5.witness.is_non_member());
    EXPECT_EQ(*i5.witness.pair, std::make_pair(std::size_t{2}, std::size_t{3}));
}

TEST(ProbeSemiprime, Examples) {
    const auto r = probe_semiprime(6, 1, delta(2, 8), 3, 8);
    EXPECT_FALSE(r.vacuous);
    EXPECT_EQ(r.base_index, 2u);
    EXPECT_EQ(r.least_failing, (std::vector<std::size_t>{2, 4, 8}));
    EXPECT_TRUE(r.holds);

    const auto v = probe_semiprime(6, 1, delta(6, 16), 3, 16);
    EXPECT_TRUE(v.vacuous);
    EXPECT_TRUE(v.holds);

    auto vals = std::vector<long>(16, 0);
    vals[1] = 1;
    vals[6] = -2;
    const auto r30 = probe_semiprime(30, 2, ArithFunc::from_ints(vals), 2, 16);
    EXPECT_EQ(r30.least_failing, (std::vector<std::size_t>{2, 4}));
    EXPECT_TRUE(r30.holds);

    EXPECT_THROW(probe_semiprime(6, 1, delta(5, 16), 2, 16), WindowTooSmall);
}

TEST(ProbeSemiprime, RandomNonMembers) {
    Sampler rng(24);
    int checked = 0;
    while (checked < 20) {
        const auto f = rng.non_unit(512, 3);
        if (is_member(IdealSpec::gcd_count(6, 1), f)) continue;
        const auto r = probe_semiprime(6, 1, f, 3, 512);
        EXPECT_TRUE(r.holds);
        ++checked;
    }
}

TEST(DivisibilityDepth, Examples) {
    EXPECT_EQ(divisibility_depth(delta(8, 32), delta(2, 32)), 3u);
    EXPECT_EQ(divisibility_depth(delta(6, 32), delta(2, 32)), 1u);
    EXPECT_EQ(divisibility_depth(delta(3, 32), delta(2, 32)), 0u);
    EXPECT_THROW(divisibility_depth(delta(3, 32), ArithFunc::identity(32)), DomainError);
}

TEST(DivisibilityDepth, BoundedByNormLog) {
    Sampler rng(25);
    for (int t = 0; t < 30; ++t) {
        const auto f = rng.non_unit(64, 3);
        const auto h = convolve(f, rng.nonzero(64, 4));
        if (h.is_zero()) continue;
        const unsigned d = divisibility_depth(h, f);
        std::size_t p = 1;
        for (unsigned i = 0; i < d; ++i) p *= norm(f).value();
        EXPECT_LE(p, norm(h).value());
        EXPECT_GE(d, 1u);
    }
}

// Property checks on the ideal families.

TEST(IdealProperties, ClosedUnderAdditionAndMultiples) {
    Sampler rng(26);
    const std::size_t n = 96;
    const std::vector<IdealSpec> specs = {IdealSpec::maximal(),        IdealSpec::norm_threshold(7),
                                          IdealSpec::coprime(6),       IdealSpec::coprime(35),
                                          IdealSpec::prime_products({2, 5}), IdealSpec::prime_tail(2),
                                          IdealSpec::gcd_count(30, 1)};
    for (const auto& s : specs) {
        for (int t = 0; t < 15; ++t) {
            const auto f = random_member(s, n, rng), g = random_member(s, n, rng);
            EXPECT_TRUE(is_member(s, add(f, g))) << s.to_string();
            EXPECT_TRUE(is_member(s, convolve(rng.dense(n), f))) << s.to_string();
        }
    }
}

TEST(IdealProperties, ComplementModeMatchesCoprime) {
    // J in complement mode over the primes of m vanishes where gcd(m, i) = 1.
    Sampler rng(27);
    for (int t = 0; t < 50; ++t) {
        const auto f = rng.with_norm(64, rng.uniform(1, 64), 0.1);
        EXPECT_EQ(is_member(IdealSpec::prime_products({2, 3}, PrimeSetMode::complement), f),
                  is_member(IdealSpec::coprime(6), f));
    }
}

TEST(IdealProperties, InclusionChain) {
    // P(m, k) grows smaller as k grows; P(m, 0) = P(m); all lie in the maximal ideal.
    Sampler rng(28);
    for (int t = 0; t < 100; ++t) {
        const auto f = rng.with_norm(64, rng.uniform(1, 64), 0.1);
        const bool p0 = is_member(IdealSpec::gcd_count(30, 0), f);
        const bool p1 = is_member(IdealSpec::gcd_count(30, 1), f);
        const bool p2 = is_member(IdealSpec::gcd_count(30, 2), f);
        EXPECT_EQ(p0, is_member(IdealSpec::coprime(30), f));
        EXPECT_TRUE(!p2 || p1);
        EXPECT_TRUE(!p1 || p0);
        EXPECT_TRUE(!p0 || is_member(IdealSpec::maximal(), f));
    }
}

TEST(IdealProperties, FullCountRejectsNonzeroIndicators) {
    for (std::size_t i = 1; i <= 64; ++i) {
        EXPECT_FALSE(is_member(IdealSpec::gcd_count(6, 2), delta(i, 64))) << i;
        EXPECT_EQ(is_member(IdealSpec::gcd_count(6, 0), delta(i, 64)), is_member(IdealSpec::coprime(6), delta(i, 64)));
    }
}

TEST(IdealProperties, EachGeneratorIsEssential) {
    // Dropping delta_q from the generators of P(m) leaves delta_q uncovered:
    // delta_q is not in the ideal of the remaining primes.
    const std::size_t n = 64;
    const std::vector<std::uint64_t> qs{2, 3, 5};
    for (std::size_t skip = 0; skip < qs.size(); ++skip) {
        std::uint64_t rest = 1;
        for (std::size_t i = 0; i < qs.size(); ++i)
            if (i != skip) rest *= qs[i];
        EXPECT_FALSE(is_member(IdealSpec::coprime(rest), delta(qs[skip], n)));
        EXPECT_TRUE(is_member(IdealSpec::coprime(30), delta(qs[skip], n)));
    }
}
