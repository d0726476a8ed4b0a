#include <gtest/gtest.h>

#include "dirichlet/arith_func.hpp"
#include "dirichlet/sampling.hpp"
#include "dirichlet/zoo.hpp"
#include "oracles.hpp"

using namespace dirichlet;

namespace {

ArithFunc delta(std::size_t m, std::size_t n) { return ArithFunc::indicator(m, n); }

ArithFunc unit_u(std::size_t n) { return ArithFunc::from_ints(std::vector<long>(n, 1)); }

} // namespace

TEST(Scalar, ExactValuesAreCanonical) {
    const Scalar s = Scalar::exact(4, -6);
    EXPECT_EQ(s.rational().get_num(), -2);
    EXPECT_EQ(s.rational().get_den(), 3);
    EXPECT_EQ(s.to_string(), "-2/3");
}

TEST(Scalar, MixedModesRejected) {
    EXPECT_THROW((void)(Scalar::exact(1) + Scalar(1.0)), ModeMismatch);
    EXPECT_THROW((void)(Scalar(2.0) * Scalar::exact(1, 2)), ModeMismatch);
    EXPECT_FALSE(Scalar::exact(1) == Scalar(1.0));
}

TEST(Make, IdentityOfLengthOne) {
    const auto f = ArithFunc::make({Scalar::exact(1)});
    EXPECT_EQ(f.size(), 1u);
    EXPECT_EQ(f, ArithFunc::identity(1));
}

TEST(Make, PrimeTailWitnessShape) {
    const auto f = ArithFunc::make({Scalar(0), Scalar(1), Scalar(1), Scalar(1)});
    EXPECT_EQ(f.size(), 4u);
    EXPECT_TRUE(f.is_zero_at(1));
    for (std::size_t i = 2; i <= 4; ++i) EXPECT_EQ(f(i), Scalar(1));
}

TEST(Make, Errors) {
    EXPECT_THROW(ArithFunc::make({}), DomainError);
    EXPECT_THROW(ArithFunc::make({Scalar(1), Scalar(0.0), Scalar(-1)}), ModeMismatch);
}

TEST(Add, Examples) {
    const std::size_t n = 12;
    EXPECT_EQ(add(ArithFunc::identity(n), ArithFunc::zero(n)), ArithFunc::identity(n));
    const auto s = add(delta(2, n), delta(3, n));
    for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(s.is_zero_at(i), i != 2 && i != 3) << i;
    Sampler rng(1);
    const auto f = rng.dense(n);
    EXPECT_TRUE(add(f, negate(f)).is_zero());
}

TEST(Add, ResultHasShorterLength) {
    EXPECT_EQ(add(ArithFunc::zero(5), ArithFunc::zero(9)).size(), 5u);
    EXPECT_EQ(convolve(ArithFunc::zero(9), ArithFunc::zero(5)).size(), 5u);
}

TEST(Add, ModeMismatch) {
    EXPECT_THROW(add(ArithFunc::zero(3), ArithFunc::zero(3, ScalarMode::floating)), ModeMismatch);
    EXPECT_THROW(convolve(ArithFunc::zero(3), ArithFunc::zero(3, ScalarMode::floating)), ModeMismatch);
}

TEST(Convolve, IdentityAndIndicators) {
    Sampler rng(2);
    const auto f = rng.dense(40);
    EXPECT_EQ(convolve(ArithFunc::identity(40), f), f);
    EXPECT_EQ(convolve(delta(2, 40), delta(3, 40)), delta(6, 40));
    EXPECT_EQ(convolve(delta(5, 20), delta(7, 20)), ArithFunc::zero(20));  // 35 lies past the window
}

TEST(Convolve, MobiusTimesUnitIsIdentity) {
    const std::size_t n = 64;
    // Oracle: sum_{d | n} mu(d) computed from the case definition.
    std::vector<mpq_class> expected(n);
    for (std::size_t m = 1; m <= n; ++m) {
        long s = 0;
        for (std::size_t d = 1; d <= m; ++d)
            if (m % d == 0) s += oracle::mobius(d);
        expected[m - 1] = s;
    }
    const auto got = convolve(generate(FunctionKind::mobius, n), unit_u(n));
    EXPECT_EQ(got.exact(), expected);
    EXPECT_EQ(got, ArithFunc::identity(n));
}

TEST(Convolve, MatchesNaiveDivisorSum) {
    Sampler rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto f = rng.dense(50), g = rng.dense(50);
        EXPECT_EQ(convolve(f, g).exact(), oracle::naive_convolve(f.exact(), g.exact()));
    }
}

TEST(Convolve, LengthOneIsScalarProduct) {
    const auto f = ArithFunc::make({Scalar::exact(2, 3)});
    const auto g = ArithFunc::make({Scalar::exact(-3, 5)});
    EXPECT_EQ(convolve(f, g)(1), Scalar::exact(-2, 5));
}

TEST(Invert, Examples) {
    EXPECT_EQ(invert(ArithFunc::identity(30)), ArithFunc::identity(30));
    const std::size_t n = 64;
    std::vector<mpq_class> mu(n);
    for (std::size_t i = 1; i <= n; ++i) mu[i - 1] = oracle::mobius(i);
    EXPECT_EQ(invert(unit_u(n)).exact(), mu);
    EXPECT_THROW(invert(generate(FunctionKind::big_omega, 32)), NonUnit);
}

TEST(Invert, FloatModeWithinTolerance) {
    auto f = ArithFunc(ArithFunc::FloatValues{1.5, 0.25, -1.0, 2.0, 0.5, 0.0, 3.0, 1.0});
    const auto prod = convolve(f, invert(f));
    EXPECT_TRUE(prod.agrees_with(ArithFunc::identity(8, ScalarMode::floating)));
}

TEST(Norm, Examples) {
    EXPECT_EQ(norm(ArithFunc::identity(10)), Norm(1));
    EXPECT_EQ(norm(delta(6, 10)), Norm(6));
    EXPECT_EQ(norm(generate(FunctionKind::mangoldt, 10)), Norm(2));
    EXPECT_TRUE(norm(ArithFunc::zero(10)).is_zero());
    EXPECT_TRUE(norm(delta(11, 10)).is_zero());  // support past the window
}

TEST(Power, Examples) {
    Sampler rng(4);
    const auto f = rng.dense(20);
    EXPECT_EQ(power(f, 0), ArithFunc::identity(20));
    EXPECT_EQ(power(f, 1), f);
    EXPECT_EQ(power(delta(2, 20), 3), delta(8, 20));
}

TEST(Power, NormIsMultiplicative) {
    const std::size_t n = 128;
    Sampler rng(5);
    for (std::size_t a = 1; a <= 3; ++a) {
        for (unsigned r = 0; r <= 4; ++r) {
            const auto f = rng.with_norm(n, a);
            // Oracle: repeated naive convolution.
            std::vector<mpq_class> p = ArithFunc::identity(n).exact();
            for (unsigned i = 0; i < r; ++i) p = oracle::naive_convolve(p, f.exact());
            const auto pr = power(f, r);
            EXPECT_EQ(pr.exact(), p);
            std::size_t expected = 1;
            for (unsigned i = 0; i < r; ++i) expected *= a;
            if (expected <= n) {
                EXPECT_EQ(norm(pr).value(), expected) << "a=" << a << " r=" << r;
            }
        }
    }
}

TEST(TryDivide, Examples) {
    const std::size_t n = 60;
    const auto self = try_divide(delta(5, n), delta(5, n));
    ASSERT_TRUE(self);
    EXPECT_EQ(*self.quotient, ArithFunc::identity(n));

    Sampler rng(6);
    const auto f = add(convolve(delta(3, n), rng.dense(n)), ArithFunc::zero(n));  // f in P_3
    const auto q = try_divide(f, delta(3, n));
    ASSERT_TRUE(q);
    for (std::size_t i = 1; i * 3 <= n; ++i) EXPECT_EQ((*q.quotient)(i), f(3 * i));

    const auto fail = try_divide(delta(3, n), delta(2, n));
    EXPECT_FALSE(fail);
    EXPECT_EQ(fail.failing_index, 3u);
}

TEST(TryDivide, NoQuotientReachesThree) {
    // (delta_2 * g)(3) = sum_{d | 3} delta_2(d) g(3/d) vanishes for every g.
    Sampler rng(7);
    for (int t = 0; t < 50; ++t) {
        const auto g = rng.dense(3);
        EXPECT_EQ(oracle::naive_convolve(ArithFunc::indicator(2, 3).exact(), g.exact())[2], 0);
    }
}

TEST(TryDivide, Errors) {
    EXPECT_THROW(try_divide(ArithFunc::identity(5), ArithFunc::zero(5)), ZeroDivisor);
    EXPECT_THROW(try_divide(ArithFunc::identity(5), ArithFunc::identity(5, ScalarMode::floating)), ModeMismatch);
    EXPECT_THROW(try_divide(ArithFunc::identity(5, ScalarMode::floating), ArithFunc::identity(5, ScalarMode::floating)),
                 ModeMismatch);
}

// Property checks over seeded random samples.

TEST(RingProperties, AxiomsAtTruncation) {
    Sampler rng(11);
    const std::size_t n = 64;
    for (int t = 0; t < 25; ++t) {
        const auto f = rng.dense(n), g = rng.dense(n), h = rng.dense(n);
        EXPECT_EQ(convolve(f, g), convolve(g, f));
        EXPECT_EQ(convolve(convolve(f, g), h), convolve(f, convolve(g, h)));
        EXPECT_EQ(convolve(f, add(g, h)), add(convolve(f, g), convolve(f, h)));
        EXPECT_EQ(convolve(ArithFunc::identity(n), f), f);
    }
}

TEST(RingProperties, InverseRoundTrip) {
    Sampler rng(12);
    for (int t = 0; t < 25; ++t) {
        const auto f = rng.unit(96);
        EXPECT_EQ(convolve(f, invert(f)), ArithFunc::identity(96));
    }
}

TEST(RingProperties, NormMultiplicativeAndDomain) {
    Sampler rng(13);
    const std::size_t n = 100;
    for (int t = 0; t < 50; ++t) {
        const auto f = rng.nonzero(n, 10), g = rng.nonzero(n, 10);
        const auto i = norm(f).value(), j = norm(g).value();
        if (i * j > n) continue;
        const auto fg = convolve(f, g);
        EXPECT_FALSE(fg.is_zero());
        EXPECT_EQ(norm(fg).value(), i * j);
        EXPECT_EQ(fg(i * j), f(i) * g(j));
    }
}

TEST(RingProperties, NoNontrivialIdempotents) {
    // Exhaustive over N = 8, entries in {-1, 0, 1}.
    const std::size_t n = 8;
    std::size_t found = 0;
    for (std::size_t code = 0; code < 6561; ++code) {
        std::vector<long> v(n);
        std::size_t c = code;
        for (auto& x : v) {
            x = static_cast<long>(c % 3) - 1;
            c /= 3;
        }
        const auto f = ArithFunc::from_ints(v);
        if (convolve(f, f) != f) continue;
        ++found;
        EXPECT_TRUE(f.is_zero() || f == ArithFunc::identity(n));
    }
    EXPECT_EQ(found, 2u);
}

TEST(RingProperties, DivisionSoundness) {
    Sampler rng(14);
    const std::size_t n = 80;
    for (int t = 0; t < 40; ++t) {
        const auto f = rng.nonzero(n, 4);
        const bool multiple = t % 2 == 0;
        const auto h = multiple ? convolve(f, rng.dense(n)) : rng.dense(n);
        const auto r = try_divide(h, f);
        if (multiple) {
            EXPECT_TRUE(r) << t;
        }
        if (r) {
            EXPECT_EQ(convolve(f, *r.quotient), h);
        }
    }
}
