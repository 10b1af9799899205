#include "tropreal/polyhedra.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace tropreal;

namespace {

AffineForm F(std::vector<long long> a, long long b = 0, long long q = 1) { return {std::move(a), make_rational(b, q)}; }

Polyhedron poly(std::size_t n, std::vector<std::pair<AffineForm, bool>> cs) {
    Polyhedron P(n);
    for (auto& [f, s] : cs) P.add(f, s);
    return P;
}

RationalPoint pt(std::initializer_list<long long> xs) {
    RationalPoint p;
    for (auto x : xs) p.push_back(Rational(static_cast<long>(x)));
    return p;
}

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t s) : g(s) {}
    long long operator()(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(g); }
    AffineForm form(std::size_t n) {
        AffineForm f;
        do {
            f.normal.assign(n, 0);
            for (auto& a : f.normal) a = (*this)(-3, 3);
        } while (f.is_constant());
        f.offset = make_rational((*this)(-8, 8), (*this)(1, 2));
        return f;
    }
};

// Vertex oracle for closed polyhedra in the plane intersected with a box.
bool closed_2d_nonempty(const Polyhedron& P) {
    const auto& cs = P.constraints();
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            const auto& a = cs[i].form;
            const auto& b = cs[j].form;
            Rational det = Rational(static_cast<long>(a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0]));
            if (det == 0) continue;
            // a.n . x = -a.c, b.n . x = -b.c
            Rational x = (-a.offset * static_cast<long>(b.normal[1]) + b.offset * static_cast<long>(a.normal[1])) / det;
            Rational y = (-b.offset * static_cast<long>(a.normal[0]) + a.offset * static_cast<long>(b.normal[0])) / det;
            RationalPoint p{x, y};
            if (P.contains(p)) return true;
        }
    return false;
}

}  // namespace

TEST(PolyContains, Examples) {
    EXPECT_TRUE(poly_contains(poly(2, {{F({1, 0}), false}, {F({0, 1}), false}}), pt({-1, -1})));
    EXPECT_FALSE(poly_contains(poly(1, {{F({1}), true}}), pt({0})));
    EXPECT_TRUE(poly_contains(poly(1, {{F({1}), false}}), pt({0})));
    EXPECT_THROW(poly_contains(poly(1, {{F({1}), false}}), pt({0, 0})), DimensionMismatch);
}

TEST(PolyIsEmpty, Examples) {
    EXPECT_TRUE(poly_is_empty(poly(1, {{F({1}), true}, {F({-1}, 1), true}})));
    Polyhedron zero = poly(1, {{F({1}), false}, {F({-1}), false}});
    EXPECT_FALSE(poly_is_empty(zero));
    EXPECT_EQ(*poly_point(zero), pt({0}));
    EXPECT_TRUE(poly_is_empty(poly(1, {{F({1}), true}, {F({-1}), true}})));
}

TEST(PolyIsEmpty, AgreesWithVertexOracle) {
    Rng r(21);
    int nonempty = 0;
    for (int i = 0; i < 1500; ++i) {
        Polyhedron P = poly(2, {{F({1, 0}, -6), false}, {F({-1, 0}, -6), false}, {F({0, 1}, -6), false},
                                {F({0, -1}, -6), false}});
        for (long long k = r(1, 4); k > 0; --k) P.add(r.form(2), false);
        bool oracle = closed_2d_nonempty(P);
        EXPECT_EQ(!poly_is_empty(P), oracle) << P.str();
        if (auto p = poly_point(P)) {
            EXPECT_TRUE(P.contains(*p));
            ++nonempty;
        }
    }
    EXPECT_GT(nonempty, 100);
}

TEST(PolyIsEmpty, StrictWitnessesAreInterior) {
    Rng r(22);
    for (int i = 0; i < 1500; ++i) {
        std::size_t n = static_cast<std::size_t>(r(1, 3));
        Polyhedron P(n);
        for (long long k = r(1, 6); k > 0; --k) P.add(r.form(n), r(0, 1) == 1);
        auto p = poly_point(P);
        EXPECT_EQ(p.has_value(), !poly_is_empty(P));
        if (p) {
            EXPECT_TRUE(P.contains(*p)) << P.str();
        }
        if (!p) {  // no small grid point may lie inside an empty polyhedron
            RationalPoint x(n);
            for (int j = 0; j < 200; ++j) {
                for (auto& v : x) v = make_rational(r(-40, 40), 4);
                EXPECT_FALSE(P.contains(x)) << P.str();
            }
        }
    }
}

TEST(EnumerateCells, Examples) {
    EXPECT_EQ(enumerate_cells({F({1})}), (std::vector<SignVector>{{-1}, {0}, {1}}));
    auto cells = enumerate_cells({F({1}), F({1}, -1)});
    std::set<SignVector> got(cells.begin(), cells.end());
    EXPECT_EQ(got, (std::set<SignVector>{{-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}}));
    EXPECT_EQ(enumerate_cells({}).size(), 1u);
}

TEST(EnumerateCells, PartitionOfTheSpace) {
    Rng r(23);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = static_cast<std::size_t>(r(1, 3));
        std::vector<AffineForm> forms;
        for (long long k = r(1, 4); k > 0; --k) forms.push_back(r.form(n));
        auto cells = arrangement_cells(forms, n);
        std::set<SignVector> listed;
        for (const auto& c : cells) {
            EXPECT_TRUE(cell_polyhedron(forms, c.signs, n).contains(c.witness));
            listed.insert(c.signs);
        }
        EXPECT_EQ(listed.size(), cells.size());
        RationalPoint x(n);
        for (int j = 0; j < 300; ++j) {
            for (auto& v : x) v = make_rational(r(-20, 20), r(1, 2));
            SignVector s;
            for (const auto& f : forms) s.push_back(sgn(f(x)));
            EXPECT_TRUE(listed.count(s));
        }
    }
}

TEST(ComplementOfUnion, Examples) {
    PolyUnion half{1, {poly(1, {{F({1}), false}})}};
    auto c = complement_of_union(half);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_TRUE(union_equal(PolyUnion{1, c}, PolyUnion{1, {poly(1, {{F({-1}), true}})}}));

    PolyUnion origin{2, {poly(2, {{F({1, 0}), false}, {F({-1, 0}), false}, {F({0, 1}), false}, {F({0, -1}), false}})}};
    auto co = complement_of_union(origin);
    Rng r(24);
    for (int j = 0; j < 1000; ++j) {
        RationalPoint x{make_rational(r(-3, 3), r(1, 3)), make_rational(r(-3, 3), r(1, 3))};
        EXPECT_NE(origin.contains(x), (PolyUnion{2, co}.contains(x)));
    }
    auto whole = complement_of_union(PolyUnion{3, {}});
    ASSERT_EQ(whole.size(), 1u);
    EXPECT_TRUE(whole.front().constraints().empty());
    EXPECT_THROW(complement_of_union(PolyUnion{1, {poly(1, {{F({1}), true}})}}), NotClosedInput);
}

TEST(OpenPolyToTrop, Examples) {
    auto check = [](const Polyhedron& P) {
        TropPoly G = open_poly_to_trop(P);
        Rng r(25);
        RationalPoint X(P.dim());
        for (int j = 0; j < 1000; ++j) {
            for (auto& v : X) v = make_rational(r(-12, 12), r(1, 4));
            RationalPoint V = X;
            for (auto& v : V) v = -v;
            EXPECT_EQ(P.contains(X), trop_sat(G, embed(Orthant::positive(P.dim()), V), Relation::Gt));
        }
        return G;
    };
    EXPECT_EQ(check(poly(1, {{F({1}), true}})).str(), "-X (+) 1");
    EXPECT_EQ(check(poly(2, {{F({1, 0}), true}, {F({0, 1}), true}})).str(), "-X (+) -Y (+) 1");
    // X - 1 < 0: the x term has log-value X - 1, so valuation 1
    TropPoly G = check(poly(1, {{F({1}, -1), true}}));
    EXPECT_EQ(G.terms().at(Exponent{1}), SignedTropVal(Sign::Negative, Valuation(1)));
    EXPECT_THROW(open_poly_to_trop(poly(1, {{F({1}), true}, {F({-1}), true}})), EmptyPolyhedron);
    EXPECT_THROW(open_poly_to_trop(poly(1, {{F({1}), false}})), NotClosedInput);
}

TEST(TropRegion, Examples) {
    TropPoly H(2);
    H.set_term({1, 0}, SignedTropVal::one());
    H.set_term({0, 1}, SignedTropVal::one());
    H.set_term({0, 0}, rt_neg(SignedTropVal::one()));
    PolyUnion expect{2, {poly(2, {{F({1, 0}), false}}), poly(2, {{F({0, 1}), false}})}};
    EXPECT_TRUE(union_equal(trop_region(H, Orthant::positive(2), Relation::Ge), expect));

    TropPoly C(2);
    for (auto e : {Exponent{2, 0}, Exponent{0, 2}, Exponent{0, 0}}) C.set_term(e, SignedTropVal::one());
    for (auto e : {Exponent{1, 0}, Exponent{0, 1}}) C.set_term(e, rt_neg(SignedTropVal::one()));
    Polyhedron a(2), b(2);
    a.add_equality(F({1, 0}));
    a.add(F({0, -1}), false);
    b.add_equality(F({0, 1}));
    b.add(F({-1, 0}), false);
    EXPECT_TRUE(union_equal(trop_region(C, Orthant::positive(2), Relation::Le), PolyUnion{2, {a, b}}));

    TropPoly one(2);
    one.set_term({0, 0}, SignedTropVal::one());
    for (const auto& o : Orthant::all(2))
        EXPECT_TRUE(union_equal(trop_region(one, o, Relation::Gt), PolyUnion::whole(o.support().size())));

    TropPoly inv(1);
    inv.set_term({-1}, SignedTropVal::one());
    EXPECT_THROW(trop_region(inv, Orthant::parse("0"), Relation::Ge), NegativeExponentAtZero);
}

TEST(TropRegion, CoherentWithEvaluation) {
    Rng r(26);
    for (int i = 0; i < 300; ++i) {
        std::size_t n = static_cast<std::size_t>(r(1, 3));
        TropPoly G(n);
        for (long long k = r(1, 5); k > 0; --k) {
            Exponent e(n);
            for (auto& d : e) d = r(0, 3);
            G.set_term(e, {r(0, 1) ? Sign::Positive : Sign::Negative, Valuation(make_rational(r(-4, 4), 2))});
        }
        Orthant o;
        for (std::size_t k = 0; k < n; ++k) o.sigma.push_back(static_cast<int>(r(-1, 1)));
        for (Relation rel : {Relation::Eq, Relation::Ge, Relation::Gt, Relation::Le, Relation::Lt, Relation::Ne}) {
            PolyUnion R = trop_region(G, o, rel);
            RationalPoint V(o.support().size());
            for (int j = 0; j < 30; ++j) {
                for (auto& v : V) v = make_rational(r(-8, 8), r(1, 2));
                EXPECT_EQ(R.contains(V), trop_sat(G, embed(o, V), rel)) << G.str() << " " << relation_symbol(rel);
            }
        }
    }
}

TEST(Polyhedra, DimensionRecessionProjection) {
    Polyhedron seg(2);
    seg.add_equality(F({1, 0}));
    seg.add(F({0, -1}), false);
    EXPECT_EQ(poly_dimension(seg), 1);
    EXPECT_TRUE(poly_recedes_along(seg, pt({0, 1})));
    EXPECT_FALSE(poly_recedes_along(seg, pt({0, -1})));
    EXPECT_FALSE(poly_is_bounded(seg));
    EXPECT_EQ(poly_dimension(poly(1, {{F({1}), true}, {F({-1}), true}})), -1);

    Polyhedron tri = poly(2, {{F({-1, 0}), false}, {F({0, -1}), false}, {F({1, 1}, -2), false}});
    EXPECT_TRUE(poly_is_bounded(tri));
    auto proj = poly_project_out(tri, {1});
    ASSERT_TRUE(proj);
    EXPECT_TRUE(proj->contains(pt({2})));
    EXPECT_FALSE(proj->contains(pt({3})));
    EXPECT_EQ(poly_dimension(tri), 2);
}

TEST(Polyhedra, UnionAlgebra) {
    Rng r(27);
    for (int i = 0; i < 40; ++i) {
        PolyUnion a{2, {}}, b{2, {}};
        for (long long k = r(1, 2); k > 0; --k) {
            Polyhedron P(2);
            for (long long j = r(1, 3); j > 0; --j) P.add(r.form(2), r(0, 1) == 1);
            (k % 2 ? a : b).pieces.push_back(P);
        }
        PolyUnion diff = union_subtract(a, b), inter = union_intersect(a, b), join = union_join(a, b);
        RationalPoint x(2);
        for (int j = 0; j < 200; ++j) {
            for (auto& v : x) v = make_rational(r(-20, 20), r(1, 3));
            EXPECT_EQ(diff.contains(x), a.contains(x) && !b.contains(x));
            EXPECT_EQ(inter.contains(x), a.contains(x) && b.contains(x));
            EXPECT_EQ(join.contains(x), a.contains(x) || b.contains(x));
        }
        EXPECT_TRUE(union_includes(join, a));
        EXPECT_TRUE(union_equal(union_join(diff, inter), a));
    }
}

TEST(Orthant, ParseAndEnumerate) {
    EXPECT_EQ(Orthant::parse("+-0").str(), "+-0");
    EXPECT_EQ(Orthant::all(2).size(), 9u);
    EXPECT_EQ(Orthant::all(3).size(), 27u);
    EXPECT_THROW(Orthant::parse("+x"), ParseError);
    TropPoint z = embed(Orthant::parse("-0+"), pt({1, 2}));
    EXPECT_EQ(orthant_of(z).str(), "-0+");
    EXPECT_EQ(valuation_coords(z), pt({1, 2}));
}
