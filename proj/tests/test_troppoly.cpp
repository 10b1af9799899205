#include "tropreal/parser.hpp"

#include <gtest/gtest.h>

using namespace tropreal;

namespace {

SignedTropVal sv(int s, long long p, long long q = 1) { return {sign_from_int(s), Valuation(make_rational(p, q))}; }

PolyK circle_f() { return parse_polynomial("(x-2)^2 + (y-2)^2 - 1", 2); }

/// Random polynomial with Puiseux coefficients and small exponents.
PolyK random_poly(PuiseuxSampler& s, std::size_t n, bool laurent) {
    PolyK f(n);
    long long terms = s.uniform(1, 5);
    for (long long i = 0; i < terms; ++i) {
        Exponent e(n);
        for (auto& d : e) d = s.uniform(laurent ? -2 : 0, 3);
        f.add_term(e, s.series());
    }
    return f;
}

}  // namespace

TEST(TropR, Examples) {
    TropPoly F = trop_r(circle_f());
    EXPECT_EQ(F.str(), "X^2 (+) Y^2 (+) -X (+) -Y (+) 1");
    EXPECT_EQ(F.terms().at(Exponent{2, 0}), sv(1, 0));
    EXPECT_EQ(F.terms().at(Exponent{1, 0}), sv(-1, 0));
    EXPECT_EQ(F.terms().at(Exponent{0, 0}), sv(1, 0));
    EXPECT_EQ(F.terms().size(), 5u);
    EXPECT_EQ(trop_r(parse_polynomial("2x + 3y - 5", 2)).str(), "X (+) Y (+) -1");
    TropPoly G = trop_r(parse_polynomial("(t+1)*x", 1));
    EXPECT_EQ(G.terms().at(Exponent{1}), sv(1, 0));
}

TEST(TropR, CancelledCoefficientsDrop) {
    EXPECT_TRUE(trop_r(parse_polynomial("x - x + 0*y", 2)).is_zero());
    EXPECT_EQ(trop_r(parse_polynomial("7", 1)).str(), "1");
}

TEST(TropEval, Examples) {
    TropPoly F = trop_r(parse_polynomial("x + y - 1", 2));
    EXPECT_EQ(trop_eval(F, {sv(1, -1), SignedTropVal::zero()}), HyperValue::point(sv(1, -1)));
    EXPECT_EQ(trop_eval(trop_r(circle_f()), {sv(1, 0), sv(1, 0)}), HyperValue::balanced(0));
    TropPoly L(1);
    L.set_term({-1}, sv(1, 0));
    EXPECT_THROW(trop_eval(L, {SignedTropVal::zero()}), NegativeExponentAtZero);
}

TEST(TropSat, Examples) {
    TropPoly C = trop_r(circle_f());
    EXPECT_TRUE(trop_sat(C, {sv(1, 0), sv(1, 0)}, Relation::Le));
    EXPECT_FALSE(trop_sat(C, {sv(1, 0), sv(1, 0)}, Relation::Gt));
    EXPECT_FALSE(trop_sat(trop_r(parse_polynomial("x + y - 1", 2)), {sv(1, 1), sv(1, 1)}, Relation::Ge));
}

TEST(EvalK, Examples) {
    PolyK h = parse_polynomial("2x + 3y - 5", 2);
    PuiseuxSeries t = PuiseuxSeries::t();
    EXPECT_EQ(eval_k(h, {t, PuiseuxSeries(1)}), PuiseuxSeries(2) * t - PuiseuxSeries(2));
    EXPECT_EQ(eval_k(circle_f(), {PuiseuxSeries(2), PuiseuxSeries(2)}), PuiseuxSeries(-1));
    EXPECT_EQ(eval_k(circle_f(), {PuiseuxSeries(2) + t, PuiseuxSeries(2)}), t * t - PuiseuxSeries(1));
    EXPECT_THROW(eval_k(parse_polynomial("x^(-1)", 1), {PuiseuxSeries()}), NegativeExponentAtZero);
}

TEST(TropFamily, Examples) {
    PuiseuxSeries t = PuiseuxSeries::t();
    PolyK x = parse_polynomial("x", 1);
    auto a = trop_family({x, parse_polynomial("x + 1", 1)}, {t - PuiseuxSeries(1)});
    EXPECT_EQ(a, (std::vector<SignedTropVal>{sv(-1, 0), sv(1, 1)}));
    EXPECT_EQ(trop_family({PolyK::constant(1, 1)}, {t}), std::vector<SignedTropVal>{sv(1, 0)});
    auto b = trop_family({x, parse_polynomial("x^2", 1)}, {t});
    EXPECT_EQ(b[1], rt_mul(b[0], b[0]));
}

// The value |f(p)|^sgn always lies in trop_r(f)(|p|^sgn); the strict and weak
// one-sided implications follow.
TEST(TropEval, FundamentalMembership) {
    SamplerConfig cfg;
    cfg.seed = 5;
    cfg.zero_probability = 0.15;
    PuiseuxSampler s(cfg);
    for (int i = 0; i < 3000; ++i) {
        std::size_t n = static_cast<std::size_t>(s.uniform(1, 3));
        PolyK f = random_poly(s, n, false);
        if (i % 4 == 0) f = f - f.pow(1) + random_poly(s, n, false) * random_poly(s, n, false);
        PointK p = s.point(n);
        TropPoint z = signed_trop(p);
        SignedTropVal v = signed_trop(eval_k(f, p));
        HyperValue h = trop_eval(trop_r(f), z);
        EXPECT_TRUE(h.contains(v)) << f << " at " << point_str(p);
        if (trop_sat(trop_r(f), z, Relation::Gt)) {
            EXPECT_EQ(v.sign(), Sign::Positive);
        }
        if (v.sign() != Sign::Negative) {
            EXPECT_TRUE(trop_sat(trop_r(f), z, Relation::Ge));
        }
    }
}

TEST(TropEval, LaurentMembership) {
    SamplerConfig cfg;
    cfg.seed = 6;
    cfg.max_terms = 1;  // monomial coordinates so inverses exist
    PuiseuxSampler s(cfg);
    for (int i = 0; i < 1000; ++i) {
        PolyK f = random_poly(s, 2, true);
        PointK p = s.point(2);
        EXPECT_TRUE(trop_eval(trop_r(f), signed_trop(p)).contains(signed_trop_at(f, p))) << f;
    }
}

TEST(TropR, MultiplicativeOnDisjointSupport) {
    SamplerConfig cfg;
    cfg.seed = 8;
    PuiseuxSampler s(cfg);
    for (int i = 0; i < 500; ++i) {
        PolyK f(2), g(2);
        for (int k = 0; k < 3; ++k) {
            f.add_term({s.uniform(0, 3), 0}, s.series());
            g.add_term({0, s.uniform(0, 3)}, s.series());
        }
        EXPECT_EQ(trop_r(f * g), mul_disjoint(trop_r(f), trop_r(g)));
    }
}

TEST(Parser, GrammarAndErrors) {
    PolyK f = parse_polynomial("x1^2*x3 - 1/2*t^(1/3)*x2 + 3", 3);
    EXPECT_EQ(f.nvars(), 3u);
    EXPECT_EQ(f.terms().size(), 3u);
    EXPECT_EQ(parse_polynomial(f.str(), 3), f);
    EXPECT_EQ(parse_polynomial("(x+y)^2", 2), parse_polynomial("x^2 + 2*x*y + y^2", 2));
    EXPECT_EQ(parse_polynomial("2x+3y-5"), parse_polynomial("2*x + 3*y - 5", 2));
    EXPECT_THROW(parse_polynomial("x +* y", 2), ParseError);
    EXPECT_THROW(parse_polynomial("x4", 2), ParseError);
    EXPECT_THROW(parse_polynomial("(x", 1), ParseError);
    EXPECT_EQ(parse_trop_point("((+,0),(-,1/2),(0,inf))"), (TropPoint{sv(1, 0), sv(-1, 1, 2), SignedTropVal::zero()}));
}
