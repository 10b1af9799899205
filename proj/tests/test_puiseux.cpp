#include "tropreal/parser.hpp"
#include "tropreal/puiseux.hpp"

#include <gtest/gtest.h>

using namespace tropreal;

namespace {

// Exact value of a series at t = u^12; exponent denominators must divide 12.
Rational at(const PuiseuxSeries& s, const Rational& u) {
    Rational total = 0;
    for (const auto& term : s.terms()) {
        Rational k = term.exp * 12;
        EXPECT_EQ(k.get_den(), 1) << "exponent denominator does not divide 12";
        long e = k.get_num().get_si();
        Rational p = 1;
        Rational base = e >= 0 ? u : Rational(1 / u);
        for (long i = 0; i < std::labs(e); ++i) p *= base;
        total += term.coeff * p;
    }
    return total;
}

int rsign(const Rational& r) { return sgn(r); }

PuiseuxSampler morphism_sampler(std::uint64_t seed) {
    SamplerConfig cfg;
    cfg.max_terms = 6;
    cfg.exponent_denominator_bound = 4;
    cfg.seed = seed;
    return PuiseuxSampler(cfg);
}

PuiseuxSeries T(long long p, long long q = 1) { return PuiseuxSeries::monomial(1, make_rational(p, q)); }

}  // namespace

TEST(PsArith, Examples) {
    PuiseuxSeries a = T(1, 2) - PuiseuxSeries(2) * T(1);
    EXPECT_EQ(a + (-T(1, 2)), PuiseuxSeries(-2) * T(1));
    EXPECT_EQ((PuiseuxSeries(1) + T(1)) * (PuiseuxSeries(1) - T(1)), PuiseuxSeries(1) - T(2));
    EXPECT_TRUE((-PuiseuxSeries()).is_zero());
    EXPECT_EQ((PuiseuxSeries(1) + T(1)).pow(3), parse_series("1 + 3t + 3t^2 + t^3"));
    EXPECT_EQ(T(1).pow(0), PuiseuxSeries(1));
}

TEST(PsArith, HomomorphicUnderSubstitution) {
    auto s = morphism_sampler(11);
    const Rational u = make_rational(3, 7), w = make_rational(-5, 2);
    for (int i = 0; i < 3000; ++i) {
        PuiseuxSeries a = s.series(), b = s.series();
        for (const Rational& x : {u, w}) {
            EXPECT_EQ(at(a + b, x), at(a, x) + at(b, x));
            EXPECT_EQ(at(a * b, x), at(a, x) * at(b, x));
            EXPECT_EQ(at(-a, x), -at(a, x));
        }
        EXPECT_TRUE((a * b).is_normalized());
        EXPECT_TRUE((a + b).is_normalized());
    }
}

TEST(SignedTrop, Examples) {
    EXPECT_EQ(signed_trop(PuiseuxSeries(2) - T(1)), SignedTropVal(Sign::Positive, Valuation(0)));
    EXPECT_EQ(signed_trop(PuiseuxSeries(-3) * T(-1) + PuiseuxSeries(5)), SignedTropVal(Sign::Negative, Valuation(-1)));
    EXPECT_EQ(signed_trop(PuiseuxSeries()), SignedTropVal::zero());
}

TEST(SignedTrop, MorphismIntoRealTropicalHyperfield) {
    auto s = morphism_sampler(12);
    for (int i = 0; i < 5000; ++i) {
        PuiseuxSeries a = s.series(), b = s.series();
        if (i % 3 == 0) b = b - PuiseuxSeries::monomial(b.leading().coeff + a.leading().coeff, b.leading().exp) +
                            PuiseuxSeries::monomial(-a.leading().coeff, a.leading().exp);
        EXPECT_EQ(signed_trop(a * b), rt_mul(signed_trop(a), signed_trop(b)));
        EXPECT_TRUE(rt_add(signed_trop(a), signed_trop(b)).contains(signed_trop(a + b))) << a << " , " << b;
    }
}

TEST(PsCmp, Examples) {
    EXPECT_EQ(ps_cmp(T(1), make_rational(1, 2)), std::strong_ordering::less);
    EXPECT_EQ(ps_cmp(T(1), T(1)), std::strong_ordering::equal);
    EXPECT_EQ(ps_cmp(-T(-2), PuiseuxSeries(1000)), std::strong_ordering::less);
}

TEST(PsCmp, AgreesWithSmallSubstitution) {
    auto s = morphism_sampler(13);
    const Rational tiny = make_rational(1, 1000000);
    for (int i = 0; i < 3000; ++i) {
        PuiseuxSeries a = s.series(), b = s.series();
        int expect = rsign(at(a - b, tiny));
        auto c = ps_cmp(a, b);
        int got = c == std::strong_ordering::less ? -1 : (c == std::strong_ordering::equal ? 0 : 1);
        EXPECT_EQ(got, expect) << a << " vs " << b;
    }
}

TEST(PsCmp, OrderProperties) {
    auto s = morphism_sampler(14);
    for (int i = 0; i < 2000; ++i) {
        PuiseuxSeries a = s.series(), b = s.series(), c = s.series();
        if (ps_cmp(a, b) == std::strong_ordering::less) {
            EXPECT_EQ(ps_cmp(a + c, b + c), std::strong_ordering::less);
        }
        // 0 <= a <= b implies val(a) >= val(b)
        PuiseuxSeries x = a.sign() == Sign::Negative ? -a : a, y = b.sign() == Sign::Negative ? -b : b;
        if (ps_cmp(x, y) != std::strong_ordering::greater) {
            EXPECT_GE(x.valuation(), y.valuation());
        }
    }
}

TEST(PsSample, ConstantConfig) {
    SamplerConfig cfg;
    cfg.max_terms = 1;
    cfg.exponent_range = {0, 0};
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        cfg.seed = seed;
        PuiseuxSeries x = ps_sample(cfg);
        ASSERT_EQ(x.size(), 1u);
        EXPECT_EQ(x.leading().exp, 0);
    }
}

TEST(PsSample, DeterministicAndBounded) {
    SamplerConfig cfg;
    cfg.seed = 99;
    PuiseuxSampler a(cfg), b(cfg);
    for (int i = 0; i < 1000; ++i) {
        PuiseuxSeries x = a.series();
        EXPECT_EQ(x, b.series());
        EXPECT_GE(x.valuation(), Valuation(-2));
        EXPECT_LE(x.valuation(), Valuation(2));
        EXPECT_TRUE(x.is_normalized());
        EXPECT_LE(x.size(), 3u);
    }
}

TEST(PsSample, RejectsBadConfig) {
    SamplerConfig cfg;
    cfg.exponent_range = {1, 0};
    EXPECT_THROW(PuiseuxSampler{cfg}, std::invalid_argument);
}

TEST(PuiseuxSeries, NormalForm) {
    auto s = PuiseuxSeries::from_terms({{2, 1}, {make_rational(1, 2), 3}, {2, -1}, {0, 0}});
    EXPECT_EQ(s, PuiseuxSeries::monomial(3, make_rational(1, 2)));
    PuiseuxSeries again = PuiseuxSeries::from_terms(s.terms());
    EXPECT_EQ(again, s);
}

TEST(PuiseuxSeries, TextRoundTrip) {
    PuiseuxSeries s = parse_series("2 - 1/3*t^(1/2) + t^2");
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s.terms()[1].coeff, make_rational(-1, 3));
    EXPECT_EQ(s.terms()[1].exp, make_rational(1, 2));
    EXPECT_EQ(parse_series(s.str()), s);
    EXPECT_THROW(parse_series("2 +"), ParseError);
}
