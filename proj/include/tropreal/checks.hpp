#pragma once

/**
 * @file checks.hpp
 * @brief Property suites run by `tropreal check` and the acceptance binary.
 *
 * Every suite draws its cases from hand-rolled generators seeded by the
 * caller, so a (suite, seed, size) triple always reproduces the same report.
 */

#include "tropreal/json_io.hpp"
#include "tropreal/scenarios.hpp"
#include "tropreal/svg.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace tropreal::checks {

struct UnknownSuite : Error {
    using Error::Error;
};

struct Outcome {
    std::string name;
    bool pass = true;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<Outcome> outcomes;
    double seconds = 0;

    bool ok() const {
        return std::all_of(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return o.pass; });
    }
};

struct CheckOptions {
    std::uint64_t seed = 0;
    std::size_t size = 0;  // 0 picks the suite default
    std::string svg_dir;   // figures are written here when set
};

inline std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 14695981039346656037ULL) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

inline Json outcome_json(const Outcome& o) {
    Json j{{"name", o.name}, {"pass", o.pass}, {"cases", o.cases}, {"failures", o.failures}};
    if (!o.detail.empty()) j["detail"] = o.detail;
    return j;
}

inline std::string outcome_line(const Outcome& o) {
    std::string s = std::string(o.pass ? "PASS" : "FAIL") + "  " + o.name;
    if (o.cases) s += "  (" + std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases) + ")";
    if (!o.detail.empty()) s += "  " + o.detail;
    return s;
}

// ---------------------------------------------------------------- generators

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    /// Small rational k/d with d in 1..max_den and |k/d| <= bound.
    Rational small_rational(long long bound, long long max_den) {
        long long d = uniform(1, max_den);
        return make_rational(uniform(-bound * d, bound * d), d);
    }

    SignedTropVal signed_value() {
        if (chance(1.0 / 7)) return SignedTropVal::zero();
        return {chance(0.5) ? Sign::Positive : Sign::Negative, small_rational(3, 2)};
    }

    Valuation valuation() { return chance(1.0 / 7) ? Valuation::infinity() : Valuation(small_rational(3, 2)); }

    TropSet trop_set() { return TropSet::from(valuation(), chance(0.3)); }

    SignSet sign_set() { return {static_cast<std::uint8_t>(uniform(1, 7))}; }

    Sign sign() { return sign_from_int(static_cast<int>(uniform(-1, 1))); }

    /// Random tropical polynomial; exponents in [emin, emax].
    TropPoly trop_poly(std::size_t n, std::size_t max_terms, long long emin, long long emax) {
        TropPoly F(n);
        std::size_t terms = static_cast<std::size_t>(uniform(1, static_cast<long long>(max_terms)));
        for (std::size_t i = 0; i < terms; ++i) {
            Exponent e(n);
            for (auto& x : e) x = uniform(emin, emax);
            F.set_term(e, {chance(0.5) ? Sign::Positive : Sign::Negative, small_rational(2, 2)});
        }
        return F;
    }

    Orthant orthant(std::size_t n) {
        Orthant o;
        for (std::size_t k = 0; k < n; ++k) o.sigma.push_back(static_cast<int>(uniform(-1, 1)));
        return o;
    }

    RationalPoint point(std::size_t n, long long bound, long long max_den) {
        RationalPoint x(n);
        for (auto& v : x) v = small_rational(bound, max_den);
        return x;
    }

    AffineForm form(std::size_t n) {
        AffineForm f;
        do {
            f.normal.assign(n, 0);
            for (auto& a : f.normal) a = uniform(-2, 2);
        } while (f.is_constant());
        f.offset = small_rational(3, 2);
        return f;
    }

    Polyhedron polyhedron(std::size_t n, std::size_t max_facets, bool strict) {
        Polyhedron P(n);
        std::size_t m = static_cast<std::size_t>(uniform(1, static_cast<long long>(max_facets)));
        for (std::size_t i = 0; i < m; ++i) P.add(form(n), strict);
        return P;
    }

private:
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------- helpers

class Tally {
public:
    explicit Tally(std::string name) { o_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& what = {}) {
        ++o_.cases;
        if (ok) return;
        ++o_.failures;
        o_.pass = false;
        if (o_.detail.empty() && what) o_.detail = "first failure: " + what();
    }

    Outcome done(std::string note = {}) {
        if (!note.empty()) o_.detail = o_.detail.empty() ? note : o_.detail + "; " + note;
        return o_;
    }

private:
    Outcome o_;
};

inline Outcome single(std::string name, bool ok, std::string detail = {}) {
    Outcome o;
    o.name = std::move(name);
    o.pass = ok;
    o.cases = 1;
    o.failures = ok ? 0 : 1;
    o.detail = std::move(detail);
    return o;
}

inline std::size_t pick(const CheckOptions& opt, std::size_t def) { return opt.size ? opt.size : def; }

// ---------------------------------------------------------------- suites

inline std::vector<Outcome> hyperfield_axioms(const CheckOptions& opt) {
    Gen g(opt.seed);
    std::size_t n = pick(opt, 10000);
    std::size_t small = std::max<std::size_t>(n / 10, 1);
    Tally comm("RT commutativity"), assoc("RT associativity (set equality)"), dist("RT distributivity"),
        inv("RT unique additive inverse"), ident("RT identities");
    for (std::size_t i = 0; i < n; ++i) {
        auto a = g.signed_value(), b = g.signed_value(), c = g.signed_value();
        auto s = [&] { return a.str() + " " + b.str() + " " + c.str(); };
        comm.check(rt_add(a, b) == rt_add(b, a), s);
        auto A = HyperValue::point(a), B = HyperValue::point(b), C = HyperValue::point(c);
        assoc.check(rt_add(rt_add(A, B), C) == rt_add(A, rt_add(B, C)), s);
        dist.check(rt_mul(a, rt_add(b, c)) == rt_add(rt_mul(a, b), rt_mul(a, c)), s);
        bool zero_in = rt_add(a, b).contains(SignedTropVal::zero());
        inv.check(zero_in == (b == rt_neg(a)), s);
        inv.check(rt_add(a, rt_neg(a)).contains(SignedTropVal::zero()), s);
        ident.check(rt_add(a, SignedTropVal::zero()) == HyperValue::point(a) && rt_mul(a, SignedTropVal::one()) == a, s);
    }
    Tally tcomm("T commutativity"), tassoc("T associativity"), tdist("T distributivity"), tinv("T inverse");
    for (std::size_t i = 0; i < small; ++i) {
        auto a = g.trop_set(), b = g.trop_set(), c = g.trop_set();
        auto s = [&] { return a.str() + " " + b.str() + " " + c.str(); };
        tcomm.check(t_add(a, b) == t_add(b, a), s);
        tassoc.check(t_add(t_add(a, b), c) == t_add(a, t_add(b, c)), s);
        Valuation x(g.small_rational(3, 2));
        tdist.check(t_mul(x, t_add(a, b)) == t_add(t_mul(x, a), t_mul(x, b)), s);
        // every element is its own negative in T
        tinv.check(x.is_infinite() || t_add(x, x).contains(Valuation::infinity()), s);
    }
    Tally scomm("S commutativity"), sassoc("S associativity"), sdist("S distributivity"), sinv("S inverse");
    for (std::size_t i = 0; i < small; ++i) {
        auto a = g.sign_set(), b = g.sign_set(), c = g.sign_set();
        auto s = [&] { return a.str() + " " + b.str() + " " + c.str(); };
        scomm.check(s_add(a, b) == s_add(b, a), s);
        sassoc.check(s_add(s_add(a, b), c) == s_add(a, s_add(b, c)), s);
        Sign x = g.sign();
        sdist.check(s_mul(x, s_add(a, b)) == s_add(s_mul(x, a), s_mul(x, b)), s);
        Sign y = g.sign(), z = g.sign();
        sinv.check(s_add(y, z).contains(Sign::Zero) == (z == -y), s);
    }
    Tally proj("RT sums project into T and S sums");
    for (std::size_t i = 0; i < small; ++i) {
        auto a = g.signed_value(), b = g.signed_value();
        HyperValue h = rt_add(a, b);
        TropSet t = t_add(a.val(), b.val());
        SignSet s = s_add(a.sign(), b.sign());
        TropSet ft = forget_sign(h);
        SignSet fs = forget_valuation(h);
        bool in_t = t.ray ? ft.lo >= t.lo : (!ft.ray && ft.lo == t.lo);
        bool ok = in_t && (fs.mask & ~s.mask) == 0;
        proj.check(ok, [&] { return a.str() + " + " + b.str(); });
    }
    return {comm.done(), assoc.done(), dist.done(), inv.done(), ident.done(), tcomm.done(), tassoc.done(), tdist.done(),
            tinv.done(), scomm.done(), sassoc.done(), sdist.done(), sinv.done(), proj.done()};
}

inline std::vector<Outcome> morphism(const CheckOptions& opt) {
    std::size_t n = pick(opt, 10000);
    SamplerConfig cfg;
    cfg.max_terms = 6;
    cfg.exponent_denominator_bound = 4;
    cfg.seed = opt.seed;
    PuiseuxSampler sampler(cfg);
    Gen g(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    Tally prod("|ab| = |a| |b|"), sum("|a+b| in |a| (+) |b|"), cancel("sums with cancelling leading terms");
    for (std::size_t i = 0; i < n; ++i) {
        PuiseuxSeries a = sampler.series(), b = sampler.series();
        bool cancelling = g.chance(0.25);
        if (cancelling) {  // b starts with -lead(a): the interesting case for containment
            auto terms = b.terms();
            terms.front() = {a.leading().exp, -a.leading().coeff};
            b = PuiseuxSeries::from_terms(terms);
        }
        auto s = [&] { return "a = " + a.str() + ", b = " + b.str(); };
        prod.check(signed_trop(a * b) == rt_mul(signed_trop(a), signed_trop(b)), s);
        bool in = rt_add(signed_trop(a), signed_trop(b)).contains(signed_trop(a + b));
        sum.check(in, s);
        if (cancelling) cancel.check(in, s);
    }
    return {prod.done(), sum.done(), cancel.done()};
}

inline std::vector<Outcome> region_coherence(const CheckOptions& opt) {
    Gen g(opt.seed);
    std::size_t n = pick(opt, 1000);
    Tally t("region membership = pointwise evaluation");
    std::size_t done = 0;
    while (done < n) {
        std::size_t nv = static_cast<std::size_t>(g.uniform(1, 3));
        TropPoly F = g.trop_poly(nv, 5, -1, 3);
        Orthant o = g.orthant(nv);
        Relation rel = static_cast<Relation>(g.uniform(0, 5));
        PolyUnion R;
        try {
            R = trop_region(F, o, rel);
        } catch (const NegativeExponentAtZero&) {
            continue;
        }
        for (int j = 0; j < 20 && done < n; ++j, ++done) {
            RationalPoint V = g.point(o.support().size(), 3, 2);
            bool in = R.contains(V);
            bool sat = trop_sat(F, embed(o, V), rel);
            t.check(in == sat, [&] { return F.str() + " " + relation_symbol(rel) + " at " + point_str(embed(o, V)); });
        }
    }
    return {t.done()};
}

inline std::vector<Outcome> complement(const CheckOptions& opt) {
    Gen g(opt.seed);
    std::size_t instances = pick(opt, 50);
    Tally t("complement pieces cover exactly the complement"), open("complement pieces are open");
    for (std::size_t i = 0; i < instances; ++i) {
        std::size_t dim = static_cast<std::size_t>(g.uniform(1, 3));
        PolyUnion T{dim, {}};
        long long pieces = g.uniform(0, 3);
        for (long long p = 0; p < pieces; ++p) T.pieces.push_back(g.polyhedron(dim, 6, false));
        auto C = complement_of_union(T);
        open.check(std::all_of(C.begin(), C.end(), [](const Polyhedron& P) { return P.is_open(); }));
        PolyUnion CU{dim, C};
        for (int j = 0; j < 1000; ++j) {
            RationalPoint x = g.point(dim, 4, 2);
            t.check(T.contains(x) != CU.contains(x), [&] { return "T = " + T.str() + " at a sampled point"; });
        }
    }
    return {t.done(), open.done()};
}

inline std::vector<Outcome> fp_lemma(const CheckOptions& opt) {
    Gen g(opt.seed);
    std::size_t instances = pick(opt, 50);
    Tally t("P = log{F_P > 0} pointwise");
    std::size_t made = 0;
    while (made < instances) {
        std::size_t dim = static_cast<std::size_t>(g.uniform(1, 3));
        Polyhedron P = g.polyhedron(dim, 5, true);
        if (poly_is_empty(P)) continue;
        ++made;
        TropPoly F = open_poly_to_trop(P);
        for (int j = 0; j < 1000; ++j) {
            RationalPoint X = g.point(dim, 4, 2);
            RationalPoint V = X;
            for (auto& v : V) v = -v;
            bool sat = trop_sat(F, embed(Orthant::positive(dim), V), Relation::Gt);
            t.check(sat == P.contains(X), [&] { return "P = " + P.str() + ", F = " + F.str(); });
        }
    }
    return {t.done()};
}

/// Box x_k in [t^{a_k}, t^{b_k}] (b_k < a_k) for the lift suite; outer region is prod [b_k, a_k].
inline SADescription lift_box(std::size_t n, const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<SignCondition> cs;
    for (std::size_t k = 0; k < n; ++k) {
        PolyK x = PolyK::variable(n, k);
        cs.push_back({x - PolyK::constant(n, PuiseuxSeries::monomial(1, a[k])), Relation::Ge});
        cs.push_back({PolyK::constant(n, PuiseuxSeries::monomial(1, b[k])) - x, Relation::Ge});
    }
    return SADescription::conjunction(n, std::move(cs));
}

inline std::vector<Outcome> lift(const CheckOptions& opt) {
    Gen g(opt.seed);
    std::size_t pairs = pick(opt, 20);
    Tally exact("trop_r(f) = F exactly"), fresh("f >= 0 on 500 fresh samples of S"), found("epsilon found");
    std::size_t made = 0, searched = 0;
    while (made < pairs) {
        std::size_t n = static_cast<std::size_t>(g.uniform(1, 2));
        std::vector<Rational> a(n), b(n);
        for (std::size_t k = 0; k < n; ++k) {
            a[k] = make_rational(g.uniform(-2, 2), 2);
            b[k] = a[k] - make_rational(g.uniform(1, 2), 2);
        }
        SADescription S = lift_box(n, a, b);
        Orthant pos = Orthant::positive(n);
        TropPoly F = g.trop_poly(n, 4, 0, 2);
        if (!union_includes(trop_region(F, pos, Relation::Ge), sa_outer(S, pos))) continue;
        ++made;
        LiftConfig cfg;
        cfg.sampler.seed = g.uniform(0, 1 << 30);
        cfg.verify_samples = 300;
        try {
            LiftResult r = lift_inequality(F, S, pos, cfg);
            found.check(true);
            if (r.searched) ++searched;
            exact.check(trop_r(r.f) == F, [&] { return F.str() + " lifted to " + r.f.str(); });
            SamplerConfig fc;
            fc.seed = cfg.sampler.seed + 1000003;
            PuiseuxSampler sampler(fc);
            auto pts = sa_sample_points(S, 500, 400000, sampler, &pos);
            bool ok = pts.size() == 500 && std::all_of(pts.begin(), pts.end(), [&](const PointK& p) {
                          return sign_satisfies(sign_at(r.f, p), Relation::Ge);
                      });
            fresh.check(ok, [&] {
                return "f = " + r.f.str() + " on " + S.str() + " (" + std::to_string(pts.size()) + " samples)";
            });
        } catch (const NoEpsilonFound& e) {
            found.check(false, [&] { return F.str() + ": " + e.what(); });
        }
    }
    return {exact.done(), fresh.done(), found.done(std::to_string(searched) + " pairs needed an epsilon search")};
}

inline std::vector<Outcome> basis(const CheckOptions& opt) {
    std::vector<Outcome> out;
    LiftConfig cfg;
    cfg.sampler = scenarios::circle_sampler(opt.seed);
    {
        auto T = scenarios::origin();
        auto r = finite_basis(T, scenarios::circle(), Orthant::positive(2), cfg);
        std::string polys;
        for (const auto& f : r.polys) polys += (polys.empty() ? "" : ", ") + f.str();
        out.push_back(single("circle: regions of the basis intersect to T = {(0,0)}", r.verified,
                             std::to_string(r.polys.size()) + " polynomials: " + polys));
        bool traced = true;
        for (std::size_t i = 0; i < r.polys.size(); ++i)
            traced = traced && trop_r(r.polys[i]) == open_poly_to_trop(reflect(r.complement[i])).negated();
        out.push_back(single("circle: each basis polynomial tropicalizes to -F_P", traced));
    }
    {
        SADescription S = SADescription::conjunction(1, {{parse_polynomial("x - 1", 1), Relation::Ge}});
        Polyhedron P(1);
        P.add(AffineForm{{1}, 0}, false);
        PolyUnion T{1, {P}};
        auto r = finite_basis(T, S, Orthant::positive(1), cfg);
        out.push_back(single("x >= 1: T = {V1 <= 0} needs one polynomial", r.verified && r.polys.size() == 1,
                             r.polys.empty() ? "" : r.polys.front().str()));
    }
    {
        auto r = finite_basis(PolyUnion::whole(2), scenarios::circle(), Orthant::positive(2), cfg);
        out.push_back(single("whole orthant: empty basis", r.verified && r.polys.empty()));
    }
    return out;
}

inline std::vector<Outcome> orthant_remark(const CheckOptions& opt) {
    Gen g(opt.seed);
    std::size_t n = pick(opt, 100);
    Tally t("{F<0} inside the open positive orthant implies {F<0} empty");
    std::size_t antecedent = 0, nonempty_elsewhere = 0;
    for (std::size_t i = 0; i < n; ++i) {
        TropPoly F = g.trop_poly(2, 6, 0, 4);
        bool outside_empty = true;
        PolyUnion pos;
        for (const auto& o : Orthant::all(2)) {
            PolyUnion R = trop_region(F, o, Relation::Lt);
            if (o == Orthant::positive(2)) pos = R;
            else if (!union_is_empty(R)) outside_empty = false;
        }
        if (!outside_empty) {
            ++nonempty_elsewhere;
            t.check(true);
            continue;
        }
        ++antecedent;
        t.check(union_is_empty(pos), [&] { return F.str(); });
    }
    return {t.done(std::to_string(antecedent) + " polynomials met the hypothesis, " +
                   std::to_string(nonempty_elsewhere) + " had {F<0} outside the positive orthant")};
}

namespace detail {

inline bool all_pieces_of_dimension(const PolyUnion& U, int d) {
    return std::all_of(U.pieces.begin(), U.pieces.end(), [&](const Polyhedron& p) { return poly_dimension(p) == d; });
}

inline bool recedes(const PolyUnion& U, const RationalPoint& d) {
    return std::any_of(U.pieces.begin(), U.pieces.end(), [&](const Polyhedron& p) { return poly_recedes_along(p, d); });
}

inline Outcome render_check(const std::string& name, const std::string& file, const CheckOptions& opt,
                            const std::function<std::string(RenderStats&)>& draw) {
    RenderStats st;
    std::string svg = draw(st);
    if (!opt.svg_dir.empty()) {
        std::filesystem::create_directories(opt.svg_dir);
        write_text_file((std::filesystem::path(opt.svg_dir) / file).string(), svg);
    }
    return single(name + ": SVG pixels agree with exact evaluation", st.disagreements == 0,
                  std::to_string(st.pixels) + " pixels, " + std::to_string(st.disagreements) + " disagreements, " +
                      std::to_string(st.overlays) + " overlays");
}

}  // namespace detail

/// The intersection family: strengthened outer region and ray witnesses.
struct IntersectionFacts {
    bool certified = false;
    bool recedes_pp = false;
    bool recedes_mm = false;
    bool rays_witnessed = false;
    bool diagonal_vertex_ok = true;
    std::string detail;
};

inline IntersectionFacts intersection_facts(const Rational& c, std::uint64_t seed) {
    IntersectionFacts r;
    SADescription S = scenarios::intersection(c);
    auto cert = certify_ball_bound({scenarios::intersection_f(), scenarios::intersection_g(c)});
    r.certified = cert.has_value();
    auto region = [&](const Orthant& o) { return r.certified ? bounded_outer(S, o) : sa_outer(S, o); };
    RationalPoint d{-1, -1};
    PolyUnion pp = region(Orthant::parse("++")), mm = region(Orthant::parse("--"));
    r.recedes_pp = detail::recedes(pp, d);
    r.recedes_mm = detail::recedes(mm, d);
    SamplerConfig sc = scenarios::circle_sampler(seed);
    bool all = true;
    for (int s = 1; s <= 4; ++s)
        for (const char* o : {"++", "--"}) {
            TropPoint z = embed(Orthant::parse(o), RationalPoint{Rational(-s), Rational(-s)});
            all = all && witness_search(S, z, 200, sc).witness.has_value();
        }
    r.rays_witnessed = all;
    if (r.certified) {
        // on the diagonal of (+,+) the region starts at the valuation of the vertex a
        Polyhedron diag(2);
        diag.add_equality(AffineForm{{1, -1}, 0});
        PolyUnion on = union_intersect(pp, PolyUnion{2, {diag}});
        Polyhedron expect = diag;
        Rational va = scenarios::intersection_vertex(c).val().value();
        expect.add(AffineForm{{-1, 0}, va}, false);
        r.diagonal_vertex_ok = union_equal(on, PolyUnion{2, {expect}});
        r.detail = "certificate C = " + to_string(cert->radius_squared) + ", lambda = (" + to_string(cert->lambdas[0]) +
                   ", " + to_string(cert->lambdas[1]) + "), a = " + scenarios::intersection_vertex(c).str();
    } else {
        r.detail = "no ball certificate";
    }
    return r;
}

inline std::vector<Outcome> figures(const CheckOptions& opt) {
    namespace sc = scenarios;
    std::vector<Outcome> out;
    Orthant pp = Orthant::parse("++");
    SamplerConfig cfg = sc::circle_sampler(opt.seed);
    // circle
    {
        auto cloud = sa_sample_trop(sc::circle(), 10000, cfg);
        TropPoint one{SignedTropVal::one(), SignedTropVal::one()};
        out.push_back(single("circle: sampled tropicalization is the single point (1,1)",
                             cloud.size() == 1 && cloud.contains(one), std::to_string(cloud.size()) + " points"));
        PolyUnion outer = sa_outer(sc::circle(), pp);
        out.push_back(single("circle: outer region in (+,+) is the two segments",
                             union_equal(outer, sc::circle_segments())));
        out.push_back(single("circle: every outer piece is 1-dimensional", detail::all_pieces_of_dimension(outer, 1)));
        RenderConfig rc;
        rc.x0 = -1;
        rc.x1 = 5;
        rc.y0 = -1;
        rc.y1 = 5;
        rc.grid = 160;
        rc.title = "circle: outer region";
        out.push_back(detail::render_check("circle", "circle.svg", opt,
                                           [&](RenderStats& st) { return render_outer(sc::circle(), rc, st); }));
    }
    // half-plane
    {
        PolyUnion R = trop_region(sc::halfplane_trop(), pp, Relation::Ge);
        out.push_back(single("left figure: X (+) Y (+) -1 >= 0 in (+,+) is {V1<=0} u {V2<=0}",
                             union_equal(R, sc::halfplane_expected())));
        out.push_back(single("left figure: trop of 2x+3y-5 is X (+) Y (+) -1",
                             trop_r(parse_polynomial("2x + 3y - 5", 2)) == sc::halfplane_trop()));
        PuiseuxSampler sampler(cfg);
        auto pts = sa_sample_points(sc::halfplane(), 1000, 200000, sampler);
        std::size_t inside = 0;
        for (const auto& p : pts) inside += outer_contains(sc::halfplane(), signed_trop(p)) ? 1 : 0;
        out.push_back(single("left figure: 10^3 samples of 2x+3y-5 >= 0 land inside the region",
                             pts.size() == 1000 && inside == pts.size(),
                             std::to_string(inside) + "/" + std::to_string(pts.size())));
        Gen g(opt.seed);
        std::size_t witnessed = 0;
        for (int i = 0; i < 100; ++i) {
            RationalPoint V = g.point(2, 3, 2);
            if (V[0] > 0 && V[1] > 0) V[g.uniform(0, 1)] *= -1;
            if (witness_search(sc::halfplane(), embed(pp, V), 1000, cfg).witness) ++witnessed;
        }
        out.push_back(single("left figure: 100 region points have witnesses", witnessed == 100,
                             std::to_string(witnessed) + "/100"));
        RenderConfig rc;
        rc.title = "X (+) Y (+) -1 >= 0";
        out.push_back(detail::render_check("left figure", "fig1_left.svg", opt, [&](RenderStats& st) {
            return render_trop_region(sc::halfplane_trop(), Relation::Ge, rc, st);
        }));
    }
    // cubic
    {
        auto w = witness_search(sc::cubic(), sc::cubic_isolated_point(), 1000, cfg);
        out.push_back(single("right figure: the isolated point (0,1) has a witness", w.witness.has_value(),
                             w.witness ? point_str(*w.witness) : ""));
        TropPoint z = embed(pp, sc::cubic_segment_point());
        out.push_back(single("right figure: the segment point satisfies the tropical inequality",
                             trop_sat(sc::cubic_trop(), z, Relation::Ge)));
        auto miss = witness_search(sc::cubic(), z, 10000, cfg);
        out.push_back(single("right figure: no witness for the segment point in 10^4 samples", !miss.witness,
                             std::to_string(miss.attempts) + " attempts"));
        PolyUnion outer = sa_outer(sc::cubic(), pp);
        bool seg = false;
        for (const auto& p : outer.pieces)
            if (p.contains(sc::cubic_segment_point())) seg = poly_dimension(p) == 1;
        out.push_back(single("right figure: the segment piece is 1-dimensional", seg));
        RenderConfig rc;
        rc.x0 = -2;
        rc.x1 = 4;
        rc.y0 = -3;
        rc.y1 = 3;
        rc.title = "X^3 (+) Y (+) -X^2 (+) -Y^2 (+) -1 >= 0";
        out.push_back(detail::render_check("right figure", "fig1_right.svg", opt, [&](RenderStats& st) {
            return render_trop_region(sc::cubic_trop(), Relation::Ge, rc, st);
        }));
    }
    // rectangle
    {
        PolyUnion R = trop_region(sc::rectangle_trop(), pp, Relation::Lt);
        out.push_back(single("rectangle figure: {F<0} in (+,+) is the open rectangle 2<x<4, 1<y<2",
                             union_equal(R, sc::rectangle_expected())));
        RenderConfig rc;
        rc.x0 = -6;
        rc.x1 = 6;
        rc.y0 = -6;
        rc.y1 = 6;
        rc.log_base = 2;
        rc.title = "xy(-1 (+) 2/x (+) x/4 (+) 1/y (+) y/2) < 0";
        out.push_back(detail::render_check("rectangle figure", "fig2.svg", opt, [&](RenderStats& st) {
            return render_trop_region(sc::rectangle_trop(), Relation::Lt, rc, st);
        }));
    }
    // intersection family
    {
        auto a = intersection_facts(-2, opt.seed);
        out.push_back(single("intersection c=-2: bounded in the ray directions",
                             a.certified && !a.recedes_pp && !a.recedes_mm && !a.rays_witnessed, a.detail));
        out.push_back(single("intersection c=-2: diagonal starts at a = -1/|c+1|", a.diagonal_vertex_ok));
        auto b = intersection_facts(make_rational(-1, 2), opt.seed);
        out.push_back(single("intersection c=-1/2: contains the two infinite rays",
                             !b.certified && b.recedes_pp && b.recedes_mm && b.rays_witnessed, b.detail));
        RenderConfig rc;
        rc.x0 = -3;
        rc.x1 = 3;
        rc.y0 = -3;
        rc.y1 = 3;
        rc.title = "intersection, c = -2";
        out.push_back(detail::render_check("intersection c=-2", "fig3_c-2.svg", opt, [&](RenderStats& st) {
            return render_outer(sc::intersection(-2), rc, st, true);
        }));
    }
    return out;
}

inline std::vector<Outcome> sandwich(const CheckOptions& opt) {
    namespace sc = scenarios;
    std::vector<Outcome> out;
    SandwichConfig cfg{sc::circle_sampler(opt.seed), pick(opt, 3000), 1000};
    Orthant pp = Orthant::parse("++");
    for (const auto& name : {"circle", "halfplane", "cubic"}) {
        auto rep = sa_sandwich_check(sc::by_name(name), cfg);
        out.push_back(single(std::string(name) + ": inner cloud inside outer region", rep.outside_outer.empty(),
                             std::to_string(rep.inner_points) + " inner points"));
        std::size_t full = 0, flagged = 0;
        for (const auto& p : rep.pieces) {
            if (p.full_dimensional) ++full;
            if (p.flagged) ++flagged;
        }
        out.push_back(single(std::string(name) + ": no unwitnessed full-dimensional piece", flagged == 0,
                             std::to_string(full) + " full-dimensional of " + std::to_string(rep.pieces.size())));
        if (std::string(name) == "circle")
            out.push_back(single("circle: no full-dimensional outer pieces", full == 0));
        if (std::string(name) == "halfplane") {
            bool all = true;
            for (const auto& p : rep.pieces)
                if (p.orthant == pp) all = all && p.full_dimensional && p.witnessed;
            out.push_back(single("halfplane: (+,+) pieces full-dimensional and witnessed", all));
        }
        if (std::string(name) == "cubic") {
            bool seg = false;
            for (const auto& p : rep.pieces)
                if (p.orthant == pp && p.dimension == 1 && !p.flagged) seg = true;
            out.push_back(single("cubic: segment piece is 1-dimensional and not flagged", seg));
        }
    }
    return out;
}

inline std::vector<Outcome> connectivity_suite(const CheckOptions&) {
    std::vector<Outcome> out;
    for (const auto& name : {"circle", "halfplane", "cubic"}) {
        auto rep = connectivity(sa_outer_all(scenarios::by_name(name)));
        out.push_back(single(std::string(name) + ": outer region is connected", rep.connected(),
                             std::to_string(rep.nodes.size()) + " pieces, " + std::to_string(rep.edges.size()) +
                                 " adjacencies, " + std::to_string(rep.components) + " component(s)"));
    }
    return out;
}

using SuiteFn = std::function<std::vector<Outcome>(const CheckOptions&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"hyperfield-axioms", hyperfield_axioms}, {"morphism", morphism},
        {"region-coherence", region_coherence},   {"complement", complement},
        {"fp-lemma", fp_lemma},                   {"lift", lift},
        {"basis", basis},                         {"orthant-remark", orthant_remark},
        {"figures", figures},                     {"sandwich", sandwich},
        {"connectivity", connectivity_suite},
    };
    return r;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
}

inline SuiteResult run_suite(const std::string& name, const CheckOptions& opt) {
    for (const auto& [n, f] : registry())
        if (n == name) {
            auto t0 = std::chrono::steady_clock::now();
            SuiteResult r{name, f(opt), 0};
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return r;
        }
    throw UnknownSuite("unknown suite '" + name + "'");
}

}  // namespace tropreal::checks
