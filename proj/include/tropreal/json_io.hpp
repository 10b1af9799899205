#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of every public value type (nlohmann::json, ADL hooks).
 *
 * Rationals travel as strings "p/q". Polynomials and series also accept the
 * text grammar of parser.hpp wherever a JSON object is expected.
 */

#include "tropreal/parser.hpp"
#include "tropreal/semialg.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace tropreal {

using Json = nlohmann::json;

namespace detail {

inline Rational rational_from(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return make_rational(j.get<long long>());
    throw ParseError("expected a rational as \"p/q\" or an integer");
}

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace detail

// ---------------------------------------------------------------- hyperfield

inline void to_json(Json& j, const SignedTropVal& a) { j = Json{{"sign", to_int(a.sign())}, {"val", a.val().str()}}; }

inline void from_json(const Json& j, SignedTropVal& a) {
    if (j.is_string()) {
        a = parse_signed(j.get<std::string>());
        return;
    }
    int s = detail::field(j, "sign").get<int>();
    if (s < -1 || s > 1) throw ParseError("sign must be -1, 0 or 1");
    const Json& v = detail::field(j, "val");
    Valuation val = v.is_string() ? parse_valuation(v.get<std::string>()) : Valuation(detail::rational_from(v));
    if ((s == 0) != val.is_infinite()) throw ParseError("sign 0 must come with valuation inf and only then");
    a = SignedTropVal(sign_from_int(s), val);
}

inline void to_json(Json& j, const HyperValue& h) {
    if (h.is_point()) {
        j = h.as_point();
        j["kind"] = "point";
    } else {
        j = Json{{"kind", "balanced"}, {"val", to_string(h.bound())}};
    }
}

// ---------------------------------------------------------------- sampler settings

inline void to_json(Json& j, const SamplerConfig& c) {
    j = Json{{"max_terms", c.max_terms},
             {"exponent_denominator_bound", c.exponent_denominator_bound},
             {"exponent_range", {to_string(c.exponent_range.lo), to_string(c.exponent_range.hi)}},
             {"coeff_range", {to_string(c.coeff_range.lo), to_string(c.coeff_range.hi)}},
             {"coeff_denominator_bound", c.coeff_denominator_bound},
             {"zero_probability", c.zero_probability}};
}

/// Missing fields keep their defaults; the seed always comes from the command line.
inline void from_json(const Json& j, SamplerConfig& c) {
    auto range = [](const Json& r) {
        if (!r.is_array() || r.size() != 2) throw ParseError("a range is a two-element array");
        return RationalInterval{detail::rational_from(r[0]), detail::rational_from(r[1])};
    };
    c.max_terms = j.value("max_terms", c.max_terms);
    c.exponent_denominator_bound = j.value("exponent_denominator_bound", c.exponent_denominator_bound);
    c.coeff_denominator_bound = j.value("coeff_denominator_bound", c.coeff_denominator_bound);
    c.zero_probability = j.value("zero_probability", c.zero_probability);
    if (j.contains("exponent_range")) c.exponent_range = range(j.at("exponent_range"));
    if (j.contains("coeff_range")) c.coeff_range = range(j.at("coeff_range"));
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("sampler: ") + e.what());
    }
}

// ---------------------------------------------------------------- series and polynomials

inline void to_json(Json& j, const PuiseuxSeries& s) {
    Json terms = Json::array();
    for (const auto& t : s.terms()) terms.push_back({{"exp", to_string(t.exp)}, {"coeff", to_string(t.coeff)}});
    j = Json{{"terms", terms}};
}

inline void from_json(const Json& j, PuiseuxSeries& s) {
    if (j.is_string()) {
        s = parse_series(j.get<std::string>());
        return;
    }
    if (j.is_number_integer()) {
        s = PuiseuxSeries(make_rational(j.get<long long>()));
        return;
    }
    std::vector<PuiseuxSeries::Term> terms;
    for (const auto& t : detail::field(j, "terms"))
        terms.push_back({detail::rational_from(detail::field(t, "exp")), detail::rational_from(detail::field(t, "coeff"))});
    s = PuiseuxSeries::from_terms(std::move(terms));
}

inline void to_json(Json& j, const PolyK& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"exps", e}, {"coeff", c}});
    j = Json{{"nvars", f.nvars()}, {"terms", terms}, {"text", f.str()}};
}

inline void from_json(const Json& j, PolyK& f) {
    if (j.is_string()) {
        f = parse_polynomial(j.get<std::string>());
        return;
    }
    std::size_t n = detail::field(j, "nvars").get<std::size_t>();
    if (!j.contains("terms") && j.contains("text")) {
        f = parse_polynomial(j.at("text").get<std::string>(), n);
        return;
    }
    PolyK out(n);
    for (const auto& t : detail::field(j, "terms")) {
        auto e = detail::field(t, "exps").get<Exponent>();
        if (e.size() != n) throw ParseError("exponent vector length differs from nvars");
        out.add_term(std::move(e), detail::field(t, "coeff").get<PuiseuxSeries>());
    }
    f = std::move(out);
}

inline void to_json(Json& j, const TropPoly& F) {
    Json terms = Json::array();
    for (const auto& [e, c] : F.terms()) terms.push_back({{"exps", e}, {"coeff", c}});
    j = Json{{"nvars", F.nvars()}, {"terms", terms}, {"text", F.str()}};
}

inline void from_json(const Json& j, TropPoly& F) {
    std::size_t n = detail::field(j, "nvars").get<std::size_t>();
    TropPoly out(n);
    for (const auto& t : detail::field(j, "terms")) {
        auto e = detail::field(t, "exps").get<Exponent>();
        if (e.size() != n) throw ParseError("exponent vector length differs from nvars");
        out.set_term(std::move(e), detail::field(t, "coeff").get<SignedTropVal>());
    }
    F = std::move(out);
}

// ---------------------------------------------------------------- polyhedra

inline void to_json(Json& j, const Constraint& c) {
    j = Json{{"normal", c.form.normal}, {"offset", to_string(c.form.offset)}, {"strict", c.strict}};
}

inline void from_json(const Json& j, Constraint& c) {
    c.form.normal = detail::field(j, "normal").get<std::vector<long long>>();
    c.form.offset = j.contains("offset") ? detail::rational_from(j.at("offset")) : Rational(0);
    c.strict = j.value("strict", false);
}

inline void to_json(Json& j, const Polyhedron& P) { j = Json{{"dim", P.dim()}, {"constraints", P.constraints()}}; }

inline void from_json(const Json& j, Polyhedron& P) {
    std::size_t dim = detail::field(j, "dim").get<std::size_t>();
    P = Polyhedron(dim, detail::field(j, "constraints").get<std::vector<Constraint>>());
}

/// A union is a plain list of polyhedra; the empty list needs the dimension given separately.
inline Json union_to_json(const PolyUnion& U) {
    Json arr = Json::array();
    for (const auto& p : U.pieces) arr.push_back(p);
    return arr;
}

inline PolyUnion union_from_json(const Json& j, std::optional<std::size_t> dim = std::nullopt) {
    const Json& list = j.is_object() ? detail::field(j, "pieces") : j;
    if (j.is_object() && j.contains("dim")) dim = j.at("dim").get<std::size_t>();
    PolyUnion U;
    for (const auto& p : list) U.pieces.push_back(p.get<Polyhedron>());
    if (!U.pieces.empty()) U.dim = U.pieces.front().dim();
    else if (dim) U.dim = *dim;
    else throw ParseError("empty union without a dimension");
    for (const auto& p : U.pieces)
        if (p.dim() != U.dim) throw ParseError("union pieces differ in dimension");
    return U;
}

inline void to_json(Json& j, const Orthant& o) { j = o.str(); }
inline void from_json(const Json& j, Orthant& o) { o = Orthant::parse(j.get<std::string>()); }

inline Json regions_to_json(const OrthantRegions& R) {
    Json out = Json::object();
    for (const auto& [o, U] : R) out[o.str()] = union_to_json(U);
    return out;
}

// ---------------------------------------------------------------- semialgebraic

inline void to_json(Json& j, const SignCondition& c) { j = Json{{"poly", c.poly}, {"rel", relation_symbol(c.rel)}}; }

inline void from_json(const Json& j, SignCondition& c) {
    c.poly = detail::field(j, "poly").get<PolyK>();
    c.rel = parse_relation(detail::field(j, "rel").get<std::string>());
}

inline void to_json(Json& j, const SADescription& S) { j = Json{{"nvars", S.nvars}, {"disjuncts", S.disjuncts}}; }

inline void from_json(const Json& j, SADescription& S) {
    S.nvars = detail::field(j, "nvars").get<std::size_t>();
    S.disjuncts.clear();
    for (const auto& conj : detail::field(j, "disjuncts")) {
        std::vector<SignCondition> cs;
        for (const auto& c : conj) {
            SignCondition sc;
            sc.poly = PolyK(S.nvars);
            const Json& pj = detail::field(c, "poly");
            sc.poly = pj.is_string() ? parse_polynomial(pj.get<std::string>(), S.nvars) : pj.get<PolyK>();
            sc.rel = parse_relation(detail::field(c, "rel").get<std::string>());
            cs.push_back(std::move(sc));
        }
        S.disjuncts.push_back(std::move(cs));
    }
    S.validate();
}

inline Json point_to_json(const PointK& p) {
    Json arr = Json::array();
    for (const auto& x : p) arr.push_back(x.str());
    return arr;
}

inline Json cloud_to_json(const SampleCloud& c) {
    Json pts = Json::array();
    for (const auto& [z, w] : c.points) pts.push_back({{"point", z}, {"text", point_str(z)}, {"witness", point_to_json(w)}});
    return Json{{"nvars", c.nvars}, {"points", pts}};
}

inline Json sandwich_to_json(const SandwichReport& r) {
    Json pieces = Json::array();
    for (const auto& p : r.pieces)
        pieces.push_back({{"orthant", p.orthant},
                          {"index", p.index},
                          {"dimension", p.dimension},
                          {"full_dimensional", p.full_dimensional},
                          {"witnessed", p.witnessed},
                          {"flagged", p.flagged}});
    Json outside = Json::array();
    for (const auto& z : r.outside_outer) outside.push_back(point_str(z));
    return Json{{"inner_points", r.inner_points}, {"inner_outside_outer", outside}, {"pieces", pieces}, {"ok", r.ok()}};
}

inline Json connectivity_to_json(const ConnectivityReport& r) {
    Json nodes = Json::array();
    for (const auto& [o, i] : r.nodes) nodes.push_back({{"orthant", o}, {"piece", i}});
    return Json{{"nodes", nodes}, {"edges", r.edges}, {"components", r.components}, {"connected", r.connected()}};
}

// ---------------------------------------------------------------- files

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

}  // namespace tropreal
