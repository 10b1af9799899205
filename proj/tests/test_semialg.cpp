#include "tropreal/scenarios.hpp"

#include <gtest/gtest.h>

using namespace tropreal;
namespace sc = tropreal::scenarios;

namespace {

PuiseuxSeries num(long long p, long long q = 1) { return PuiseuxSeries(make_rational(p, q)); }
PuiseuxSeries t() { return PuiseuxSeries::t(); }
SignedTropVal sv(int s, long long p, long long q = 1) { return {sign_from_int(s), Valuation(make_rational(p, q))}; }

SADescription one_var(const std::string& poly, Relation rel) {
    return SADescription::conjunction(1, {{parse_polynomial(poly, 1), rel}});
}

PolyUnion half_line(long long sign) {  // sign * V1 <= 0
    Polyhedron P(1);
    P.add(AffineForm{{sign}, 0}, false);
    return {1, {P}};
}

}  // namespace

TEST(SaMember, Examples) {
    auto S = sc::circle();
    EXPECT_TRUE(sa_member(S, {num(2), num(2)}));
    EXPECT_TRUE(sa_member(S, {num(2) + t(), num(2)}));
    EXPECT_FALSE(sa_member(S, {num(0), num(0)}));
    EXPECT_THROW(sa_member(S, {num(2)}), DimensionMismatch);
}

TEST(SaMember, DisjunctionsAndLaurent) {
    SADescription S{1, {{{parse_polynomial("x - 1", 1), Relation::Gt}}, {{parse_polynomial("x + 1", 1), Relation::Lt}}}};
    EXPECT_TRUE(sa_member(S, {num(2)}));
    EXPECT_TRUE(sa_member(S, {num(-2)}));
    EXPECT_FALSE(sa_member(S, {num(0)}));
    EXPECT_TRUE(sa_member(S, {num(1) + t()}));  // x - 1 = t > 0
    EXPECT_FALSE(sa_member(S, {num(1) - t()}));
    auto L = one_var("x^(-1) - 1", Relation::Gt);
    EXPECT_TRUE(sa_member(L, {t()}));
    EXPECT_THROW(sa_member(L, {num(0)}), NegativeExponentAtZero);
    EXPECT_FALSE(sa_member_safe(L, {num(0)}));
}

TEST(SaSampleTrop, Examples) {
    auto cloud = sa_sample_trop(sc::circle(), 10000, sc::circle_sampler(1));
    ASSERT_EQ(cloud.size(), 1u);
    EXPECT_TRUE(cloud.contains({SignedTropVal::one(), SignedTropVal::one()}));

    SamplerConfig cfg;
    cfg.seed = 2;
    auto pos = sa_sample_trop(one_var("x", Relation::Gt), 2000, cfg);
    EXPECT_GT(pos.size(), 0u);
    for (const auto& [z, w] : pos.points) EXPECT_EQ(z[0].sign(), Sign::Positive);

    EXPECT_EQ(sa_sample_trop(one_var("1", Relation::Lt), 1000, cfg).size(), 0u);
}

TEST(SaSampleTrop, WitnessesAreVerified) {
    SamplerConfig cfg;
    cfg.seed = 3;
    for (const auto& n : sc::all()) {
        auto cloud = sa_sample_trop(n.set, 1500, cfg);
        for (const auto& [z, w] : cloud.points) {
            EXPECT_TRUE(sa_member(n.set, w)) << n.name;
            EXPECT_EQ(signed_trop(w), z) << n.name;
            EXPECT_TRUE(outer_contains(n.set, z)) << n.name << " " << point_str(z);
        }
    }
}

TEST(SaOuter, Examples) {
    EXPECT_TRUE(union_equal(sa_outer(sc::circle(), Orthant::positive(2)), sc::circle_segments()));
    EXPECT_TRUE(union_equal(sa_outer(sc::halfplane(), Orthant::positive(2)), sc::halfplane_expected()));
    SADescription all{2, {{}}};
    for (const auto& o : Orthant::all(2))
        EXPECT_TRUE(union_equal(sa_outer(all, o), PolyUnion::whole(o.support().size())));
}

TEST(SaOuter, StrictConditionsRelaxToClosedRegions) {
    // x - 1 > 0 has points with |x| = 1 (x = 1 + t), so the outer region must keep V1 = 0.
    auto S = one_var("x - 1", Relation::Gt);
    EXPECT_TRUE(union_equal(sa_outer(S, Orthant::positive(1)), half_line(1)));
    auto N = one_var("x - 1", Relation::Ne);
    EXPECT_TRUE(union_equal(sa_outer(N, Orthant::positive(1)), PolyUnion::whole(1)));
}

TEST(Sandwich, Scenarios) {
    SandwichConfig cfg{sc::circle_sampler(4), 2000, 500};
    auto circle = sa_sandwich_check(sc::circle(), cfg);
    EXPECT_TRUE(circle.ok());
    for (const auto& p : circle.pieces) EXPECT_FALSE(p.full_dimensional);
    auto half = sa_sandwich_check(sc::halfplane(), cfg);
    EXPECT_TRUE(half.ok());
    for (const auto& p : half.pieces) EXPECT_TRUE(p.full_dimensional && p.witnessed);
    EXPECT_TRUE(sa_sandwich_check(sc::cubic(), cfg).ok());
    SADescription two{1, {{{parse_polynomial("x", 1), Relation::Le}}, {{parse_polynomial("x", 1), Relation::Ge}}}};
    EXPECT_THROW(sa_sandwich_check(two, cfg), ShapeMismatch);
    EXPECT_THROW(sa_sandwich_check(one_var("x", Relation::Eq), cfg), ShapeMismatch);
}

TEST(LiftInequality, CircleNeedsTheTrueSupport) {
    LiftConfig cfg;
    cfg.sampler = sc::circle_sampler(5);
    TropPoly F = trop_r(parse_polynomial("x - 1", 2));
    // F >= 0 fails on the outer segment {V1 > 0, V2 = 0}, where -1 dominates
    EXPECT_THROW(lift_inequality(F, sc::circle(), Orthant::positive(2), cfg), PreconditionFailed);
    cfg.support = sc::origin();
    LiftResult r = lift_inequality(F, sc::circle(), Orthant::positive(2), cfg);
    EXPECT_EQ(r.f, parse_polynomial("x - 1/2", 2));
    EXPECT_EQ(r.epsilon, make_rational(1, 2));
    EXPECT_EQ(trop_r(r.f), F);
}

TEST(LiftInequality, NoNegativeTerms) {
    LiftConfig cfg;
    TropPoly one(2);
    one.set_term({0, 0}, SignedTropVal::one());
    LiftResult r = lift_inequality(one, sc::circle(), Orthant::positive(2), cfg);
    EXPECT_EQ(r.f, PolyK::constant(2, 1));
    EXPECT_FALSE(r.searched);
}

TEST(LiftInequality, Guards) {
    LiftConfig cfg;
    TropPoly F = trop_r(parse_polynomial("x - 1", 2));
    EXPECT_THROW(lift_inequality(F, sc::halfplane(), Orthant::positive(2), cfg), PreconditionFailed);
    EXPECT_THROW(lift_inequality(F, sc::circle(), Orthant::parse("+-"), cfg), PreconditionFailed);
}

TEST(FiniteBasis, Examples) {
    LiftConfig cfg;
    cfg.sampler = sc::circle_sampler(6);
    auto r = finite_basis(sc::origin(), sc::circle(), Orthant::positive(2), cfg);
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.polys.size(), 4u);
    for (std::size_t i = 0; i < r.polys.size(); ++i)
        EXPECT_EQ(trop_r(r.polys[i]), open_poly_to_trop(reflect(r.complement[i])).negated());
    EXPECT_TRUE(union_equal(basis_region(r.polys, Orthant::positive(2)), sc::origin()));

    auto whole = finite_basis(PolyUnion::whole(2), sc::circle(), Orthant::positive(2), cfg);
    EXPECT_TRUE(whole.verified);
    EXPECT_TRUE(whole.polys.empty());

    auto line = finite_basis(half_line(1), one_var("x - 1", Relation::Ge), Orthant::positive(1), cfg);
    EXPECT_TRUE(line.verified);
    ASSERT_EQ(line.polys.size(), 1u);
    EXPECT_EQ(trop_r(line.polys[0]).str(), "X (+) -1");
}

TEST(WitnessSearch, Examples) {
    auto cfg = sc::circle_sampler(7);
    auto w = witness_search(sc::circle(), {SignedTropVal::one(), SignedTropVal::one()}, 1000, cfg);
    ASSERT_TRUE(w.witness);
    EXPECT_TRUE(sa_member(sc::circle(), *w.witness));

    // |x| = e^-1 is impossible on the circle; the outer segment still contains it.
    auto none = witness_search(sc::circle(), {sv(1, 1), sv(1, 0)}, 1000, cfg);
    EXPECT_FALSE(none.witness);
    auto out = witness_search(sc::circle(), {sv(1, -1), sv(1, 0)}, 1000, cfg);
    EXPECT_FALSE(out.witness);
    EXPECT_TRUE(out.excluded_by_outer);
    EXPECT_EQ(out.attempts, 0u);

    auto five = witness_search(one_var("x", Relation::Gt), {sv(1, 5)}, 100, cfg);
    ASSERT_TRUE(five.witness);
    EXPECT_EQ(signed_trop((*five.witness)[0]), sv(1, 5));
}

TEST(Connectivity, Scenarios) {
    for (const char* n : {"circle", "halfplane", "cubic"})
        EXPECT_TRUE(connectivity(sa_outer_all(sc::by_name(n))).connected()) << n;
    // two far-apart intervals on the positive half line stay disconnected
    SADescription S{1, {{{parse_polynomial("x - t^2", 1), Relation::Le}}, {{parse_polynomial("x - t^(-2)", 1), Relation::Ge}}}};
    Polyhedron lo(1), hi(1);
    lo.add(AffineForm{{-1}, 2}, false);
    hi.add(AffineForm{{1}, 2}, false);
    OrthantRegions R{{Orthant::positive(1), PolyUnion{1, {lo, hi}}}};
    EXPECT_FALSE(connectivity(R).connected());
    EXPECT_GT(connectivity(sa_outer_all(S)).nodes.size(), 0u);
}

TEST(BallCertificate, IntersectionFamily) {
    auto cert = certify_ball_bound({sc::intersection_f(), sc::intersection_g(-2)});
    ASSERT_TRUE(cert);
    EXPECT_GT(cert->radius_squared, 0);
    EXPECT_FALSE(certify_ball_bound({sc::intersection_f(), sc::intersection_g(make_rational(-1, 2))}));
    // the certified ball really contains sampled points of S
    SamplerConfig cfg;
    cfg.seed = 8;
    PuiseuxSampler s(cfg);
    auto pts = sa_sample_points(sc::intersection(-2), 200, 200000, s);
    for (const auto& p : pts) {
        PuiseuxSeries r2 = p[0] * p[0] + p[1] * p[1] - PuiseuxSeries(cert->radius_squared);
        EXPECT_NE(r2.sign(), Sign::Positive) << point_str(p);
    }
    EXPECT_EQ(sc::intersection_vertex(-2), SignedTropVal::one());
    EXPECT_EQ(sc::intersection_vertex(make_rational(-1, 2)), sv(-1, 0));
}

TEST(SADescription, Validation) {
    SADescription bad{2, {{{parse_polynomial("x", 1), Relation::Ge}}}};
    EXPECT_THROW(bad.validate(), DimensionMismatch);
    SADescription none{2, {}};
    EXPECT_THROW(none.validate(), Error);
}
