#pragma once

/**
 * @file semialg.hpp
 * @brief Semialgebraic sets over real Puiseux series and their real tropicalizations.
 *
 * Trop_r(S) is approximated from inside by tropicalizing sampled points of S
 * (each with a stored witness) and from outside by tropicalizing the
 * describing conditions orthant by orthant.
 */

#include "tropreal/polyhedra.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropreal {

struct ShapeMismatch : Error {
    using Error::Error;
};

struct NoEpsilonFound : Error {
    using Error::Error;
};

struct PreconditionFailed : Error {
    using Error::Error;
};

struct SignCondition {
    PolyK poly;
    Relation rel = Relation::Ge;

    bool holds_at(const PointK& p) const { return sign_satisfies(sign_at(poly, p), rel); }

    std::string str() const { return poly.str() + " " + relation_symbol(rel) + " 0"; }
};

/// A disjunction of conjunctions of sign conditions.
struct SADescription {
    std::size_t nvars = 1;
    std::vector<std::vector<SignCondition>> disjuncts;

    static SADescription conjunction(std::size_t nvars, std::vector<SignCondition> conds) {
        return {nvars, {std::move(conds)}};
    }

    void validate() const {
        if (disjuncts.empty()) throw ShapeMismatch("a description needs at least one disjunct");
        for (const auto& d : disjuncts)
            for (const auto& c : d)
                if (c.poly.nvars() != nvars) throw DimensionMismatch("condition polynomial has the wrong variable count");
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < disjuncts.size(); ++i) {
            if (i) out += " or ";
            out += "[";
            for (std::size_t j = 0; j < disjuncts[i].size(); ++j) {
                if (j) out += ", ";
                out += disjuncts[i][j].str();
            }
            out += "]";
        }
        return out;
    }
};

inline bool sa_member(const SADescription& S, const PointK& p) {
    if (p.size() != S.nvars) throw DimensionMismatch("point dimension differs from description");
    for (const auto& conj : S.disjuncts) {
        bool all = true;
        for (const auto& c : conj)
            if (!c.holds_at(p)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

/// Same as sa_member but false where a Laurent condition is undefined.
inline bool sa_member_safe(const SADescription& S, const PointK& p) {
    try {
        return sa_member(S, p);
    } catch (const NegativeExponentAtZero&) {
        return false;
    } catch (const NonMonomialInverse&) {
        return false;
    }
}

// ---------------------------------------------------------------- inner approximation

/// Distinct tropical points of S, each with the first Puiseux witness found.
struct SampleCloud {
    std::size_t nvars = 1;
    std::map<TropPoint, PointK> points;

    std::size_t size() const { return points.size(); }
    bool contains(const TropPoint& z) const { return points.count(z) > 0; }
    void add(const PointK& p) { points.emplace(signed_trop(p), p); }
};

/// Rejection sampling: `attempts` random points, kept when they lie in S.
inline SampleCloud sa_sample_trop(const SADescription& S, std::size_t attempts, const SamplerConfig& cfg,
                                  const Orthant* orthant = nullptr) {
    SampleCloud cloud{S.nvars, {}};
    PuiseuxSampler sampler(cfg);
    for (std::size_t i = 0; i < attempts; ++i) {
        PointK p = sampler.point(S.nvars, orthant ? &orthant->sigma : nullptr);
        if (sa_member_safe(S, p)) cloud.add(p);
    }
    return cloud;
}

/// Up to `count` Puiseux points of S (inside an orthant when given), drawing at most `max_attempts`.
inline std::vector<PointK> sa_sample_points(const SADescription& S, std::size_t count, std::size_t max_attempts,
                                            PuiseuxSampler& sampler, const Orthant* orthant = nullptr) {
    std::vector<PointK> out;
    for (std::size_t i = 0; i < max_attempts && out.size() < count; ++i) {
        PointK p = sampler.point(S.nvars, orthant ? &orthant->sigma : nullptr);
        if (sa_member_safe(S, p)) out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------- outer approximation

using OrthantRegions = std::map<Orthant, PolyUnion>;

/// Closed relations whose tropical regions contain the tropicalization of {f rel 0}.
inline std::vector<Relation> relaxed(Relation r) {
    switch (r) {
        case Relation::Gt: return {Relation::Ge};
        case Relation::Lt: return {Relation::Le};
        case Relation::Ne: return {Relation::Ge, Relation::Le};
        default: return {r};
    }
}

inline PolyUnion sa_outer(const SADescription& S, const Orthant& sigma) {
    S.validate();
    if (sigma.size() != S.nvars) throw DimensionMismatch("orthant length differs from variable count");
    std::size_t dim = sigma.support().size();
    PolyUnion out = PolyUnion::empty(dim);
    for (const auto& conj : S.disjuncts) {
        PolyUnion acc = PolyUnion::whole(dim);
        for (const auto& c : conj) {
            TropPoly F = trop_r(c.poly);
            PolyUnion region = PolyUnion::empty(dim);
            for (Relation r : relaxed(c.rel)) region = union_join(region, trop_region(F, sigma, r));
            acc = union_intersect(acc, region);
            if (acc.pieces.empty()) break;
        }
        out = union_join(out, acc);
    }
    return union_prune(std::move(out));
}

/// Outer regions over all orthants; orthants where a condition is undefined are empty.
inline OrthantRegions sa_outer_all(const SADescription& S) {
    OrthantRegions out;
    for (const auto& o : Orthant::all(S.nvars)) {
        try {
            PolyUnion U = sa_outer(S, o);
            if (!U.pieces.empty()) out.emplace(o, std::move(U));
        } catch (const NegativeExponentAtZero&) {
        }
    }
    return out;
}

/// Is the tropical point inside the outer region of its orthant?
inline bool outer_contains(const SADescription& S, const TropPoint& z) {
    try {
        return sa_outer(S, orthant_of(z)).contains(valuation_coords(z));
    } catch (const NegativeExponentAtZero&) {
        return false;
    }
}

// ---------------------------------------------------------------- witnesses

struct WitnessResult {
    std::optional<PointK> witness;
    bool excluded_by_outer = false;
    std::size_t attempts = 0;
};

/// Looks for p in S with signed_trop(p) = z: first the canonical lift
/// (sign * t^val), then random tails behind the fixed leading terms.
inline WitnessResult witness_search(const SADescription& S, const TropPoint& z, std::size_t budget,
                                    const SamplerConfig& cfg) {
    if (z.size() != S.nvars) throw DimensionMismatch("target point dimension differs from description");
    WitnessResult res;
    if (!outer_contains(S, z)) {
        res.excluded_by_outer = true;
        return res;
    }
    PointK p(z.size());
    for (std::size_t k = 0; k < z.size(); ++k)
        if (!z[k].is_zero())
            p[k] = PuiseuxSeries::monomial(z[k].sign() == Sign::Positive ? 1 : -1, z[k].val().value());
    if (budget == 0) return res;
    res.attempts = 1;
    if (sa_member_safe(S, p)) {
        res.witness = std::move(p);
        return res;
    }
    PuiseuxSampler sampler(cfg);
    while (res.attempts < budget) {
        ++res.attempts;
        for (std::size_t k = 0; k < z.size(); ++k)
            p[k] = z[k].is_zero() ? PuiseuxSeries() : sampler.series_with_leading(z[k].sign(), z[k].val().value());
        if (sa_member_safe(S, p)) {
            res.witness = std::move(p);
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------- sandwich

struct SandwichPiece {
    Orthant orthant;
    std::size_t index = 0;
    int dimension = -1;
    bool full_dimensional = false;
    bool witnessed = false;
    bool flagged = false;
};

struct SandwichReport {
    std::size_t inner_points = 0;
    std::vector<TropPoint> outside_outer;  // inner points missing from the outer region
    std::vector<SandwichPiece> pieces;

    bool ok() const {
        return outside_outer.empty() &&
               std::none_of(pieces.begin(), pieces.end(), [](const SandwichPiece& p) { return p.flagged; });
    }
};

struct SandwichConfig {
    SamplerConfig sampler;
    std::size_t attempts = 2000;
    std::size_t witness_budget = 1000;
};

/// Checks inner cloud within outer region, and that full-dimensional outer pieces are witnessed.
inline SandwichReport sa_sandwich_check(const SADescription& S, const SandwichConfig& cfg) {
    if (S.disjuncts.size() != 1) throw ShapeMismatch("sandwich check needs a single conjunction");
    SADescription T{S.nvars, {{}}};
    for (const auto& c : S.disjuncts.front()) {
        if (c.rel == Relation::Le) T.disjuncts.front().push_back(c);
        else if (c.rel == Relation::Ge) T.disjuncts.front().push_back({-c.poly, Relation::Le});
        else throw ShapeMismatch("sandwich check needs weak inequalities only");
    }
    SandwichReport rep;
    SampleCloud cloud = sa_sample_trop(T, cfg.attempts, cfg.sampler);
    rep.inner_points = cloud.size();
    for (const auto& [z, w] : cloud.points)
        if (!outer_contains(T, z)) rep.outside_outer.push_back(z);
    for (const auto& [o, U] : sa_outer_all(T)) {
        std::size_t full = o.support().size();
        for (std::size_t i = 0; i < U.pieces.size(); ++i) {
            SandwichPiece sp{o, i, poly_dimension(U.pieces[i]), false, false, false};
            sp.full_dimensional = sp.dimension == static_cast<int>(full);
            if (sp.full_dimensional) {
                for (const auto& [z, w] : cloud.points)
                    if (orthant_of(z) == o && U.pieces[i].contains(valuation_coords(z))) {
                        sp.witnessed = true;
                        break;
                    }
                if (!sp.witnessed) {
                    if (auto v = relative_interior_point(U.pieces[i])) {
                        SamplerConfig sc = cfg.sampler;
                        sc.seed = cfg.sampler.seed + 7919 * (i + 1);
                        sp.witnessed = witness_search(T, embed(o, *v), cfg.witness_budget, sc).witness.has_value();
                    }
                }
                sp.flagged = !sp.witnessed;
            }
            rep.pieces.push_back(sp);
        }
    }
    return rep;
}

// ---------------------------------------------------------------- lifting

struct LiftConfig {
    SamplerConfig sampler;
    std::size_t verify_samples = 200;
    std::size_t max_attempts = 200000;
    std::size_t max_denominator = 64;
    /// Region on which F >= 0 must hold; the outer region of S when absent.
    std::optional<PolyUnion> support;
};

struct LiftResult {
    PolyK f;
    Rational epsilon = 1;
    std::size_t verified_on = 0;
    bool searched = false;
};

/// The polynomial sum a_i x^alpha_i + eps * sum b_j x^beta_j with a_i, b_j = +-t^val.
inline PolyK lift_candidate(const TropPoly& F, const Rational& eps) {
    PolyK f(F.nvars());
    for (const auto& [e, c] : F.terms()) {
        Rational m = c.sign() == Sign::Positive ? Rational(1) : Rational(-eps);
        f.add_term(e, PuiseuxSeries::monomial(m, c.val().value()));
    }
    return f;
}

/// A polynomial f with trop_r(f) = F that is positive on sampled points of S in sigma.
inline LiftResult lift_inequality(const TropPoly& F, const SADescription& S, const Orthant& sigma,
                                  const LiftConfig& cfg) {
    if (!sigma.strictly_positive()) throw PreconditionFailed("lifting is only defined on the positive orthant");
    if (F.nvars() != S.nvars) throw DimensionMismatch("tropical polynomial and description differ in variables");
    PolyUnion support = cfg.support ? *cfg.support : sa_outer(S, sigma);
    if (!union_includes(trop_region(F, sigma, Relation::Ge), support))
        throw PreconditionFailed("F >= 0 does not hold on the whole support region");
    LiftResult res;
    bool has_negative = false;
    for (const auto& [e, c] : F.terms())
        if (c.sign() == Sign::Negative) has_negative = true;
    if (!has_negative) {
        res.f = lift_candidate(F, 1);
        return res;
    }
    PuiseuxSampler sampler(cfg.sampler);
    auto samples = sa_sample_points(S, cfg.verify_samples, cfg.max_attempts, sampler, &sigma);
    res.searched = true;
    res.verified_on = samples.size();
    for (std::size_t k = 1; k <= cfg.max_denominator; ++k) {
        Rational eps = make_rational(1, static_cast<long long>(k));
        PolyK f = lift_candidate(F, eps);
        bool good = std::all_of(samples.begin(), samples.end(),
                                [&](const PointK& p) { return sign_at(f, p) == Sign::Positive; });
        if (good) {
            res.f = std::move(f);
            res.epsilon = eps;
            return res;
        }
    }
    throw NoEpsilonFound("no epsilon up to 1/" + std::to_string(cfg.max_denominator) + " is positive on the samples");
}

// ---------------------------------------------------------------- finite basis

struct BasisResult {
    std::vector<PolyK> polys;
    std::vector<LiftResult> lifts;
    std::vector<Polyhedron> complement;  // open pieces, valuation coordinates
    bool verified = false;               // intersection of regions equals T
};

/// Intersection of the regions {trop_r(f) >= 0} over the given polynomials.
inline PolyUnion basis_region(const std::vector<PolyK>& fs, const Orthant& sigma) {
    PolyUnion acc = PolyUnion::whole(sigma.support().size());
    for (const auto& f : fs) acc = union_intersect(acc, trop_region(trop_r(f), sigma, Relation::Ge));
    return acc;
}

inline BasisResult finite_basis(const PolyUnion& T, const SADescription& S, const Orthant& sigma, LiftConfig cfg) {
    if (!sigma.strictly_positive()) throw PreconditionFailed("finite basis is built on the positive orthant");
    if (T.dim != S.nvars) throw DimensionMismatch("T lives in the wrong dimension");
    BasisResult res;
    res.complement = complement_of_union(T);
    cfg.support = T;
    std::size_t i = 0;
    for (const auto& P : res.complement) {
        TropPoly G = open_poly_to_trop(reflect(P)).negated();
        LiftConfig c = cfg;
        c.sampler.seed = cfg.sampler.seed + 104729 * ++i;
        LiftResult lr = lift_inequality(G, S, sigma, c);
        res.polys.push_back(lr.f);
        res.lifts.push_back(std::move(lr));
    }
    res.verified = union_equal(basis_region(res.polys, sigma), T);
    return res;
}

// ---------------------------------------------------------------- connectivity

struct ConnectivityReport {
    std::vector<std::pair<Orthant, std::size_t>> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t components = 0;

    bool connected() const { return components <= 1; }
};

namespace detail {

inline bool touches(const Polyhedron& a, const Polyhedron& b) {
    return !poly_is_empty(poly_intersect(a.closure(), b)) || !poly_is_empty(poly_intersect(a, b.closure()));
}

/// Positions inside sigma's support of the coordinates that tau sets to zero,
/// when tau is sigma with some nonzero coordinates zeroed.
inline std::optional<std::vector<std::size_t>> zeroed_positions(const Orthant& sigma, const Orthant& tau) {
    std::vector<std::size_t> z;
    std::size_t pos = 0;
    bool any = false;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        if (sigma.sigma[k] == 0) {
            if (tau.sigma[k] != 0) return std::nullopt;
            continue;
        }
        if (tau.sigma[k] == 0) {
            z.push_back(pos);
            any = true;
        } else if (tau.sigma[k] != sigma.sigma[k]) {
            return std::nullopt;
        }
        ++pos;
    }
    if (!any) return std::nullopt;
    return z;
}

}  // namespace detail

/// Components of the adjacency graph of all pieces. Pieces of one orthant are
/// adjacent when they touch; a piece meets a piece of a lower orthant when its
/// face at infinity toward that orthant intersects it.
inline ConnectivityReport connectivity(const OrthantRegions& R) {
    ConnectivityReport rep;
    std::vector<const Polyhedron*> polys;
    for (const auto& [o, U] : R)
        for (std::size_t i = 0; i < U.pieces.size(); ++i) {
            if (poly_is_empty(U.pieces[i])) continue;
            rep.nodes.emplace_back(o, i);
            polys.push_back(&U.pieces[i]);
        }
    std::vector<std::size_t> parent(rep.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t a = 0; a < rep.nodes.size(); ++a)
        for (std::size_t b = a + 1; b < rep.nodes.size(); ++b) {
            const Orthant& oa = rep.nodes[a].first;
            const Orthant& ob = rep.nodes[b].first;
            bool adj = false;
            if (oa == ob) {
                adj = detail::touches(*polys[a], *polys[b]);
            } else {
                auto link = [&](std::size_t hi, std::size_t lo) {
                    auto z = detail::zeroed_positions(rep.nodes[hi].first, rep.nodes[lo].first);
                    if (!z) return false;
                    auto face = limit_face(*polys[hi], *z);
                    return face && !poly_is_empty(poly_intersect(*face, polys[lo]->closure()));
                };
                adj = link(a, b) || link(b, a);
            }
            if (adj) {
                rep.edges.emplace_back(a, b);
                parent[find(a)] = find(b);
            }
        }
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find(i) == i) ++rep.components;
    return rep;
}

// ---------------------------------------------------------------- boundedness certificates

/// C - |x|^2 - sum lambda_i g_i is a sum of squares, so |x|^2 <= C on {g_i >= 0}.
struct BallCertificate {
    std::vector<Rational> lambdas;
    Rational radius_squared;
};

namespace detail {

/// Positive definiteness by exact LDL^T.
inline bool positive_definite(std::vector<std::vector<Rational>> m) {
    std::size_t n = m.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return true;
}

inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
    std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
    return b;
}

/// Quadratic part, linear part and constant of a polynomial with rational coefficients of degree <= 2.
struct Quadratic {
    std::vector<std::vector<Rational>> M;
    std::vector<Rational> b;
    Rational c;
};

inline std::optional<Quadratic> as_quadratic(const PolyK& f) {
    std::size_t n = f.nvars();
    Quadratic q{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))),
                std::vector<Rational>(n, Rational(0)), 0};
    for (const auto& [e, s] : f.terms()) {
        if (s.size() != 1 || s.leading().exp != 0) return std::nullopt;
        const Rational& a = s.leading().coeff;
        long long deg = 0;
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < n; ++k) {
            if (e[k] < 0) return std::nullopt;
            deg += e[k];
            for (long long r = 0; r < e[k]; ++r) idx.push_back(k);
        }
        if (deg > 2) return std::nullopt;
        if (deg == 0) q.c += a;
        else if (deg == 1) q.b[idx[0]] += a;
        else if (idx[0] == idx[1]) q.M[idx[0]][idx[0]] += a;
        else {
            q.M[idx[0]][idx[1]] += a / 2;
            q.M[idx[1]][idx[0]] += a / 2;
        }
    }
    return q;
}

}  // namespace detail

/// Searches lambda_i in {0, 1, 2, 4, ..., 2^max_exp} for a certificate that
/// {g_i >= 0} lies in a ball. The g_i must be quadratics with rational coefficients.
inline std::optional<BallCertificate> certify_ball_bound(const std::vector<PolyK>& gs, int max_exp = 8) {
    if (gs.empty()) return std::nullopt;
    std::size_t n = gs.front().nvars();
    std::vector<detail::Quadratic> qs;
    for (const auto& g : gs) {
        auto q = detail::as_quadratic(g);
        if (!q) return std::nullopt;
        qs.push_back(std::move(*q));
    }
    std::vector<Rational> grid{0};
    for (int k = 0; k <= max_exp; ++k) grid.push_back(Rational(1L << k));
    std::optional<BallCertificate> best;
    std::vector<std::size_t> choice(gs.size(), 0);
    for (;;) {
        // q(x) = -|x|^2 - sum lambda_i g_i = x^T M x + b.x + c; need C + q >= 0
        std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
        std::vector<Rational> b(n, Rational(0));
        Rational c = 0;
        for (std::size_t k = 0; k < n; ++k) M[k][k] = -1;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            const Rational& l = grid[choice[i]];
            if (l == 0) continue;
            for (std::size_t r = 0; r < n; ++r) {
                b[r] -= l * qs[i].b[r];
                for (std::size_t s = 0; s < n; ++s) M[r][s] -= l * qs[i].M[r][s];
            }
            c -= l * qs[i].c;
        }
        // C + q >= 0 everywhere needs M positive definite and C >= b^T M^-1 b / 4 - c
        if (detail::positive_definite(M)) {
            if (auto y = detail::solve(M, b)) {
                Rational quad = 0;
                for (std::size_t k = 0; k < n; ++k) quad += b[k] * (*y)[k];
                Rational C = Rational(floor_of(Rational(quad / 4 - c))) + 1;
                // C + q = [1 x] G [1 x]^T
                std::vector<std::vector<Rational>> G(n + 1, std::vector<Rational>(n + 1, Rational(0)));
                G[0][0] = C + c;
                for (std::size_t k = 0; k < n; ++k) {
                    G[0][k + 1] = G[k + 1][0] = b[k] / 2;
                    for (std::size_t s = 0; s < n; ++s) G[k + 1][s + 1] = M[k][s];
                }
                if (detail::positive_definite(G) && (!best || C < best->radius_squared)) {
                    BallCertificate cert;
                    for (std::size_t i = 0; i < gs.size(); ++i) cert.lambdas.push_back(grid[choice[i]]);
                    cert.radius_squared = C;
                    best = std::move(cert);
                }
            }
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == grid.size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return best;
}

/// Outer region intersected with {V_k >= 0}: coordinates bounded by a real
/// constant have nonnegative valuation.
inline PolyUnion bounded_outer(const SADescription& S, const Orthant& sigma) {
    PolyUnion U = sa_outer(S, sigma);
    std::size_t dim = sigma.support().size();
    Polyhedron box(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        AffineForm f{std::vector<long long>(dim, 0), 0};
        f.normal[k] = -1;
        box.add(f, false);
    }
    return union_intersect(U, PolyUnion{dim, {box}});
}

}  // namespace tropreal
