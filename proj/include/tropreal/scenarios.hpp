#pragma once

/**
 * @file scenarios.hpp
 * @brief Built-in worked examples: the circle, the two half-plane-like
 * sets, the rectangle pattern and the intersection family.
 */

#include "tropreal/parser.hpp"
#include "tropreal/semialg.hpp"
#include "tropreal/svg.hpp"

#include <string>
#include <vector>

namespace tropreal::scenarios {

inline SADescription single(const std::string& poly, Relation rel) {
    return SADescription::conjunction(2, {{parse_polynomial(poly, 2), rel}});
}

/// (x-2)^2 + (y-2)^2 <= 1; its tropicalization is the single point ((+,0),(+,0)).
inline SADescription circle() { return single("(x-2)^2 + (y-2)^2 - 1", Relation::Le); }

inline SamplerConfig circle_sampler(std::uint64_t seed = 0) {
    SamplerConfig cfg;
    cfg.exponent_range = {-1, 1};
    cfg.exponent_denominator_bound = 2;
    cfg.coeff_range = {-4, 4};
    cfg.seed = seed;
    return cfg;
}

inline SADescription halfplane() { return single("2x + 3y - 5", Relation::Ge); }

inline TropPoly halfplane_trop() { return trop_r(parse_polynomial("x + y - 1", 2)); }

/// x^3 + 2y - x^2 - y^2 - 1 >= 0.
inline SADescription cubic() { return single("x^3 + 2y - x^2 - y^2 - 1", Relation::Ge); }

inline TropPoly cubic_trop() { return trop_r(parse_polynomial("x^3 + 2y - x^2 - y^2 - 1", 2)); }

/// The isolated point (0, 1) of the cubic set.
inline TropPoint cubic_isolated_point() { return {SignedTropVal::zero(), SignedTropVal::one()}; }

/// A rational point in the middle of the segment {V2 = 0, V1 > 0} of (+,+).
inline RationalPoint cubic_segment_point() { return {make_rational(7, 10), Rational(0)}; }

/// xy(-1 (+) 2/x (+) x/4 (+) 1/y (+) y/2) in base-2 valuations, where the
/// constant 2 has valuation -1.
inline TropPoly rectangle_trop() {
    return trop_r(parse_polynomial("-x*y + t^(-1)*y + t^2*x^2*y + x + t*x*y^2", 2));
}

/// The open rectangle -2 < V1 < -1, -1 < V2 < 0 (magnitudes 2 < x < 4, 1 < y < 2).
inline PolyUnion rectangle_expected() {
    Polyhedron P(2);
    P.add(AffineForm{{1, 0}, 1}, true);    // V1 < -1
    P.add(AffineForm{{-1, 0}, -2}, true);  // V1 > -2
    P.add(AffineForm{{0, 1}, 0}, true);    // V2 < 0
    P.add(AffineForm{{0, -1}, -1}, true);  // V2 > -1
    return {2, {P}};
}

inline PolyK intersection_f() { return parse_polynomial("1 - (x - y)^2", 2); }

inline PolyK intersection_g(const Rational& c) {
    PolyK g = parse_polynomial("2x^2 + 2x - x*y", 2);
    return g + PolyK::monomial({0, 2}, PuiseuxSeries(c));
}

inline SADescription intersection(const Rational& c) {
    return SADescription::conjunction(2, {{intersection_f(), Relation::Ge}, {intersection_g(c), Relation::Ge}});
}

/// a = -1 / |c+1|^sgn.
inline SignedTropVal intersection_vertex(const Rational& c) {
    return rt_neg(rt_inv(signed_trop(PuiseuxSeries(Rational(c + 1)))));
}

/// {V1 = 0, V2 >= 0} u {V1 >= 0, V2 = 0}.
inline PolyUnion circle_segments() {
    Polyhedron a(2), b(2);
    a.add_equality(AffineForm{{1, 0}, 0});
    a.add(AffineForm{{0, -1}, 0}, false);
    b.add_equality(AffineForm{{0, 1}, 0});
    b.add(AffineForm{{-1, 0}, 0}, false);
    return {2, {a, b}};
}

/// {V1 <= 0} u {V2 <= 0}.
inline PolyUnion halfplane_expected() {
    Polyhedron a(2), b(2);
    a.add(AffineForm{{1, 0}, 0}, false);
    b.add(AffineForm{{0, 1}, 0}, false);
    return {2, {a, b}};
}

/// The single point V = (0, 0).
inline PolyUnion origin(std::size_t dim = 2) {
    Polyhedron P(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        AffineForm f{std::vector<long long>(dim, 0), 0};
        f.normal[k] = 1;
        P.add_equality(f);
    }
    return {dim, {P}};
}

struct Named {
    std::string name;
    SADescription set;
};

inline std::vector<Named> all() {
    return {{"circle", circle()},
            {"halfplane", halfplane()},
            {"cubic", cubic()},
            {"intersection-c=-2", intersection(-2)},
            {"intersection-c=-1/2", intersection(make_rational(-1, 2))}};
}

inline SADescription by_name(const std::string& name) {
    for (auto& n : all())
        if (n.name == name) return n.set;
    throw ParseError("unknown scenario '" + name + "'");
}

}  // namespace tropreal::scenarios
