// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "tropreal/tropreal.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace tropreal;
namespace sc = tropreal::scenarios;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        note += (note.empty() ? "" : "; ") + what;
    }
};

constexpr std::uint64_t kSeed = 20240611;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Runs a shared property suite and checks that each property saw at least `min_cases` cases.
Verdict suite(const std::string& name, std::size_t min_cases, const std::vector<std::string>& required = {}) {
    Verdict v;
    auto r = checks::run_suite(name, {kSeed, 0, {}});
    for (const auto& o : r.outcomes) {
        v.require(o.pass, o.name + ": " + std::to_string(o.failures) + " failure(s) " + o.detail);
        bool counted = required.empty() || std::find(required.begin(), required.end(), o.name) != required.end();
        if (counted) v.require(o.cases >= min_cases, o.name + ": only " + std::to_string(o.cases) + " cases");
    }
    if (v.pass) v.note = std::to_string(r.outcomes.size()) + " properties";
    return v;
}

Verdict circle_example() {
    Verdict v;
    Orthant pp = Orthant::positive(2);
    auto cloud = sa_sample_trop(sc::circle(), 10000, sc::circle_sampler(kSeed));
    v.require(cloud.size() == 1 && cloud.contains({SignedTropVal::one(), SignedTropVal::one()}),
              "cloud has " + std::to_string(cloud.size()) + " points");
    PolyUnion outer = sa_outer(sc::circle(), pp);
    v.require(union_equal(outer, sc::circle_segments()), "outer region differs from the two segments");
    for (const auto& p : outer.pieces) v.require(poly_dimension(p) == 1, "piece of dimension != 1: " + p.str());
    return v;
}

Verdict fig1_left() {
    Verdict v;
    Orthant pp = Orthant::positive(2);
    v.require(union_equal(trop_region(sc::halfplane_trop(), pp, Relation::Ge), sc::halfplane_expected()),
              "region differs from {V1<=0} u {V2<=0}");
    SamplerConfig cfg = sc::circle_sampler(kSeed);
    PuiseuxSampler sampler(cfg);
    auto pts = sa_sample_points(sc::halfplane(), 1000, 400000, sampler);
    v.require(pts.size() == 1000, "only " + std::to_string(pts.size()) + " samples");
    std::size_t outside = 0;
    for (const auto& p : pts) {
        TropPoint z = signed_trop(p);
        if (!trop_sat(sc::halfplane_trop(), z, Relation::Ge)) ++outside;
    }
    v.require(outside == 0, std::to_string(outside) + " samples outside the tropical region");
    // 100 rational points of the region, spread over both half-planes and the corner
    std::size_t found = 0, tried = 0;
    for (long long i = -5; i <= 4 && tried < 100; ++i)
        for (long long j = 0; j < 10 && tried < 100; ++j) {
            RationalPoint V{make_rational(i, 2), make_rational(j - 4, 3)};
            if (!sc::halfplane_expected().contains(V)) V[1] = -abs(V[1]) - make_rational(1, 3);
            ++tried;
            if (witness_search(sc::halfplane(), embed(pp, V), 1000, cfg).witness) ++found;
        }
    v.require(found == 100, std::to_string(found) + "/100 witnessed");
    return v;
}

Verdict fig1_right() {
    Verdict v;
    SamplerConfig cfg = sc::circle_sampler(kSeed);
    auto w = witness_search(sc::cubic(), sc::cubic_isolated_point(), 1000, cfg);
    v.require(w.witness.has_value(), "no witness for (0,1)");
    TropPoint mid = embed(Orthant::positive(2), sc::cubic_segment_point());
    v.require(trop_sat(sc::cubic_trop(), mid, Relation::Ge), "segment point fails the tropical inequality");
    auto miss = witness_search(sc::cubic(), mid, 10000, cfg);
    v.require(!miss.witness, "unexpected witness " + (miss.witness ? point_str(*miss.witness) : ""));
    v.require(miss.attempts == 10000, "search stopped after " + std::to_string(miss.attempts));
    bool seg = false;
    for (const auto& p : sa_outer(sc::cubic(), Orthant::positive(2)).pieces)
        if (p.contains(sc::cubic_segment_point())) seg = poly_dimension(p) == 1;
    v.require(seg, "segment piece is not 1-dimensional");
    return v;
}

Verdict finite_basis_circle() {
    Verdict v;
    LiftConfig cfg;
    cfg.sampler = sc::circle_sampler(kSeed);
    auto r = finite_basis(sc::origin(), sc::circle(), Orthant::positive(2), cfg);
    v.require(r.verified, "basis verification failed");
    v.require(union_equal(basis_region(r.polys, Orthant::positive(2)), sc::origin()), "regions do not cut out T");
    if (v.pass) v.note = std::to_string(r.polys.size()) + " polynomials";
    return v;
}

Verdict intersection_example() {
    Verdict v;
    auto t0 = Clock::now();
    auto bounded = checks::intersection_facts(-2, kSeed);
    double s1 = seconds_since(t0);
    t0 = Clock::now();
    auto rays = checks::intersection_facts(make_rational(-1, 2), kSeed);
    double s2 = seconds_since(t0);
    v.require(bounded.certified && !bounded.recedes_pp && !bounded.recedes_mm, "c=-2 region recedes along (-1,-1)");
    v.require(!bounded.rays_witnessed, "c=-2 has points far out on the diagonal");
    v.require(bounded.diagonal_vertex_ok, "c=-2 diagonal does not start at a");
    v.require(rays.recedes_pp && rays.recedes_mm, "c=-1/2 region lacks a ray");
    v.require(rays.rays_witnessed, "c=-1/2 ray points lack witnesses");
    v.require(s1 < 5 && s2 < 5, "too slow");
    char buf[64];
    std::snprintf(buf, sizeof buf, "runs took %.2f s and %.2f s", s1, s2);
    if (v.pass) v.note = buf;
    return v;
}

Verdict connectivity_examples() {
    Verdict v;
    for (const char* n : {"circle", "halfplane", "cubic"}) {
        auto rep = connectivity(sa_outer_all(sc::by_name(n)));
        v.require(rep.connected(), std::string(n) + " has " + std::to_string(rep.components) + " components");
    }
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {"1  circle example", circle_example},
        {"2  half-plane figure", fig1_left},
        {"3  cubic figure", fig1_right},
        {"4  hyperfield axioms",
         [] {
             Verdict v = suite("hyperfield-axioms", 1000);
             Verdict rt = suite("hyperfield-axioms", 10000,
                                {"RT commutativity", "RT associativity (set equality)", "RT distributivity",
                                 "RT unique additive inverse"});
             v.require(rt.pass, rt.note);
             return v;
         }},
        {"5  signed seminorm morphism", [] { return suite("morphism", 10000, {"|ab| = |a| |b|", "|a+b| in |a| (+) |b|"}); }},
        {"6  complement lemma", [] { return suite("complement", 50000, {"complement pieces cover exactly the complement"}); }},
        {"7  F_P lemma", [] { return suite("fp-lemma", 50000); }},
        {"8  lift lemma", [] { return suite("lift", 20); }},
        {"9  finite basis", finite_basis_circle},
        {"10 orthant remark", [] { return suite("orthant-remark", 100); }},
        {"11 intersection example", intersection_example},
        {"12 connectivity", connectivity_examples},
    };
    auto t0 = Clock::now();
    int failed = 0;
    for (const auto& c : criteria) {
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.note = std::string("exception: ") + e.what();
        }
        if (!v.pass) ++failed;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  " << c.name << (v.note.empty() ? "" : "  (" + v.note + ")")
                  << std::endl;
    }
    double total = seconds_since(t0);
    std::printf("%d/%zu criteria pass, %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
    return failed == 0 ? 0 : 1;
}
