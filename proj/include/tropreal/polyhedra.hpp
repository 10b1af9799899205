#pragma once

/**
 * @file polyhedra.hpp
 * @brief Exact rational polyhedra in valuation coordinates.
 *
 * Membership, emptiness, arrangement cells, complements of closed unions,
 * open polyhedra as positivity sets of tropical polynomials, and the exact
 * region {F rel 0} of a tropical polynomial inside one orthant.
 */

#include "tropreal/fourier_motzkin.hpp"
#include "tropreal/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tropreal {

struct EmptyPolyhedron : Error {
    using Error::Error;
};

struct NotClosedInput : Error {
    using Error::Error;
};

using RationalPoint = std::vector<Rational>;

/// alpha . X + C
struct AffineForm {
    std::vector<long long> normal;
    Rational offset;

    std::size_t dim() const { return normal.size(); }

    bool is_constant() const {
        return std::all_of(normal.begin(), normal.end(), [](long long a) { return a == 0; });
    }

    Rational operator()(std::span<const Rational> x) const {
        if (x.size() != normal.size()) throw DimensionMismatch("affine form evaluated at a point of wrong dimension");
        Rational v = offset;
        for (std::size_t i = 0; i < normal.size(); ++i)
            if (normal[i] != 0) v += make_rational(normal[i]) * x[i];
        return v;
    }

    AffineForm operator-() const {
        AffineForm f{normal, -offset};
        for (auto& a : f.normal) a = -a;
        return f;
    }

    friend bool operator==(const AffineForm&, const AffineForm&) = default;

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < normal.size(); ++i) {
            long long a = normal[i];
            if (a == 0) continue;
            if (!out.empty()) out += a > 0 ? " + " : " - ";
            else if (a < 0) out += "-";
            long long m = a < 0 ? -a : a;
            if (m != 1) out += std::to_string(m) + "*";
            out += "V" + std::to_string(i + 1);
        }
        if (offset != 0 || out.empty()) {
            if (out.empty()) out = to_string(offset);
            else out += (offset > 0 ? " + " : " - ") + to_string(abs(offset));
        }
        return out;
    }
};

/// form(X) <= 0, or form(X) < 0 when strict.
struct Constraint {
    AffineForm form;
    bool strict = false;

    bool satisfied_by(std::span<const Rational> x) const {
        Rational v = form(x);
        return strict ? v < 0 : v <= 0;
    }

    /// The complementary halfspace.
    Constraint negated() const { return {-form, !strict}; }

    friend bool operator==(const Constraint&, const Constraint&) = default;

    std::string str() const { return form.str() + (strict ? " < 0" : " <= 0"); }
};

class Polyhedron {
public:
    explicit Polyhedron(std::size_t dim = 0) : dim_(dim) {}
    Polyhedron(std::size_t dim, std::vector<Constraint> cs) : dim_(dim), constraints_(std::move(cs)) {
        for (const auto& c : constraints_) check(c);
    }

    static Polyhedron whole(std::size_t dim) { return Polyhedron(dim); }

    std::size_t dim() const { return dim_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }

    Polyhedron& add(Constraint c) {
        check(c);
        constraints_.push_back(std::move(c));
        return *this;
    }
    Polyhedron& add(AffineForm f, bool strict) { return add(Constraint{std::move(f), strict}); }
    /// form = 0 as a pair of weak inequalities.
    Polyhedron& add_equality(const AffineForm& f) {
        add(f, false);
        return add(-f, false);
    }

    bool is_closed() const {
        return std::none_of(constraints_.begin(), constraints_.end(), [](const Constraint& c) { return c.strict; });
    }
    bool is_open() const {
        return std::all_of(constraints_.begin(), constraints_.end(), [](const Constraint& c) { return c.strict; });
    }

    Polyhedron closure() const {
        Polyhedron p(dim_);
        for (auto c : constraints_) {
            c.strict = false;
            p.constraints_.push_back(std::move(c));
        }
        return p;
    }

    bool contains(std::span<const Rational> x) const {
        if (x.size() != dim_) throw DimensionMismatch("point dimension differs from polyhedron dimension");
        return std::all_of(constraints_.begin(), constraints_.end(),
                           [&](const Constraint& c) { return c.satisfied_by(x); });
    }

    fm::Rows rows() const {
        fm::Rows out;
        out.reserve(constraints_.size());
        for (const auto& c : constraints_) {
            fm::Row r;
            r.a.reserve(dim_);
            for (long long a : c.form.normal) r.a.push_back(make_rational(a));
            r.b = c.form.offset;
            r.kind = c.strict ? fm::Kind::Lt : fm::Kind::Le;
            out.push_back(std::move(r));
        }
        return out;
    }

    std::string str() const {
        if (constraints_.empty()) return "{ all of R^" + std::to_string(dim_) + " }";
        std::string out = "{ ";
        for (std::size_t i = 0; i < constraints_.size(); ++i) {
            if (i) out += ", ";
            out += constraints_[i].str();
        }
        return out + " }";
    }

    friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

private:
    void check(const Constraint& c) const {
        if (c.form.dim() != dim_) throw DimensionMismatch("constraint dimension differs from polyhedron dimension");
    }

    std::size_t dim_;
    std::vector<Constraint> constraints_;
};

/// Finite union of polyhedra; no pieces means the empty set.
struct PolyUnion {
    std::size_t dim = 0;
    std::vector<Polyhedron> pieces;

    static PolyUnion empty(std::size_t dim) { return {dim, {}}; }
    static PolyUnion whole(std::size_t dim) { return {dim, {Polyhedron::whole(dim)}}; }

    bool contains(std::span<const Rational> x) const {
        return std::any_of(pieces.begin(), pieces.end(), [&](const Polyhedron& p) { return p.contains(x); });
    }

    std::string str() const {
        if (pieces.empty()) return "{}";
        std::string out;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (i) out += " u ";
            out += pieces[i].str();
        }
        return out;
    }
};

inline bool poly_contains(const Polyhedron& P, std::span<const Rational> x) { return P.contains(x); }

inline bool poly_is_empty(const Polyhedron& P) { return !fm::feasible(P.rows(), P.dim()); }

inline std::optional<RationalPoint> poly_point(const Polyhedron& P) { return fm::find_point(P.rows(), P.dim()); }

inline Polyhedron poly_intersect(const Polyhedron& a, const Polyhedron& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("intersecting polyhedra of different dimension");
    Polyhedron r = a;
    for (const auto& c : b.constraints()) r.add(c);
    return r;
}

/// Indices of constraints that hold with equality on all of P (P nonempty).
inline std::vector<std::size_t> implicit_equalities(const Polyhedron& P) {
    std::vector<std::size_t> out;
    const auto& cs = P.constraints();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].strict || cs[i].form.is_constant()) continue;
        Polyhedron q = P;
        q.add(cs[i].form, true);
        if (poly_is_empty(q)) out.push_back(i);
    }
    return out;
}

namespace detail {

/// Rank of a set of integer vectors by exact Gaussian elimination.
inline std::size_t rank_of(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    std::size_t cols = m.front().size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Affine dimension; -1 for the empty set.
inline int poly_dimension(const Polyhedron& P) {
    if (poly_is_empty(P)) return -1;
    std::vector<std::vector<Rational>> normals;
    for (std::size_t i : implicit_equalities(P)) {
        std::vector<Rational> row;
        for (long long a : P.constraints()[i].form.normal) row.push_back(make_rational(a));
        normals.push_back(std::move(row));
    }
    return static_cast<int>(P.dim() - detail::rank_of(std::move(normals)));
}

/// A point in the relative interior: implicit equalities kept, every other constraint strict.
inline std::optional<RationalPoint> relative_interior_point(const Polyhedron& P) {
    if (poly_is_empty(P)) return std::nullopt;
    auto eqs = implicit_equalities(P);
    std::set<std::size_t> eqset(eqs.begin(), eqs.end());
    Polyhedron q(P.dim());
    for (std::size_t i = 0; i < P.constraints().size(); ++i) {
        const auto& c = P.constraints()[i];
        if (c.form.is_constant()) continue;
        if (eqset.count(i)) q.add_equality(c.form);
        else q.add(c.form, true);
    }
    return poly_point(q);
}

/// P minus the union of qs, as a list of pairwise disjoint polyhedra.
inline std::vector<Polyhedron> poly_subtract(const Polyhedron& P, std::span<const Polyhedron> qs) {
    if (poly_is_empty(P)) return {};
    if (qs.empty()) return {P};
    const Polyhedron& Q = qs.front();
    auto rest = qs.subspan(1);
    if (poly_is_empty(poly_intersect(P, Q))) return poly_subtract(P, rest);
    std::vector<Polyhedron> out;
    Polyhedron acc = P;
    for (const auto& c : Q.constraints()) {
        Polyhedron piece = acc;
        piece.add(c.negated());
        if (!poly_is_empty(piece)) {
            auto sub = poly_subtract(piece, rest);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        acc.add(c);
        if (poly_is_empty(acc)) break;
    }
    return out;
}

inline bool union_is_empty(const PolyUnion& U) {
    return std::all_of(U.pieces.begin(), U.pieces.end(), [](const Polyhedron& p) { return poly_is_empty(p); });
}

/// Drops empty pieces.
inline PolyUnion union_prune(PolyUnion U) {
    std::erase_if(U.pieces, [](const Polyhedron& p) { return poly_is_empty(p); });
    return U;
}

inline PolyUnion union_intersect(const PolyUnion& a, const PolyUnion& b) {
    if (a.dim != b.dim) throw DimensionMismatch("intersecting unions of different dimension");
    PolyUnion r{a.dim, {}};
    for (const auto& p : a.pieces)
        for (const auto& q : b.pieces) {
            Polyhedron x = poly_intersect(p, q);
            if (!poly_is_empty(x)) r.pieces.push_back(std::move(x));
        }
    return r;
}

inline PolyUnion union_join(const PolyUnion& a, const PolyUnion& b) {
    if (a.dim != b.dim) throw DimensionMismatch("joining unions of different dimension");
    PolyUnion r = a;
    r.pieces.insert(r.pieces.end(), b.pieces.begin(), b.pieces.end());
    return r;
}

inline PolyUnion union_subtract(const PolyUnion& a, const PolyUnion& b) {
    PolyUnion r{a.dim, {}};
    for (const auto& p : a.pieces) {
        auto sub = poly_subtract(p, b.pieces);
        r.pieces.insert(r.pieces.end(), sub.begin(), sub.end());
    }
    return r;
}

/// b is a subset of a.
inline bool union_includes(const PolyUnion& a, const PolyUnion& b) {
    if (a.dim != b.dim) throw DimensionMismatch("comparing unions of different dimension");
    return std::all_of(b.pieces.begin(), b.pieces.end(),
                       [&](const Polyhedron& p) { return poly_subtract(p, a.pieces).empty(); });
}

inline bool union_equal(const PolyUnion& a, const PolyUnion& b) { return union_includes(a, b) && union_includes(b, a); }

/// d is a recession direction of a nonempty P (closure taken).
inline bool poly_recedes_along(const Polyhedron& P, std::span<const Rational> d) {
    if (d.size() != P.dim()) throw DimensionMismatch("direction dimension differs from polyhedron dimension");
    if (poly_is_empty(P)) return false;
    for (const auto& c : P.constraints()) {
        Rational s = 0;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (c.form.normal[i] != 0) s += make_rational(c.form.normal[i]) * d[i];
        if (s > 0) return false;
    }
    return true;
}

/// Bounded iff the closure has no nonzero recession direction (P nonempty).
inline bool poly_is_bounded(const Polyhedron& P) {
    if (poly_is_empty(P)) return true;
    // a nonzero direction with normal.d <= 0 exists iff for some coordinate k
    // and sign s the cone {normal.d <= 0, s*d_k >= 1} is nonempty
    for (std::size_t k = 0; k < P.dim(); ++k)
        for (int s : {-1, 1}) {
            fm::Rows rows;
            for (const auto& c : P.constraints()) {
                fm::Row r;
                for (long long a : c.form.normal) r.a.push_back(make_rational(a));
                r.b = 0;
                rows.push_back(std::move(r));
            }
            fm::Row lead;
            lead.a.assign(P.dim(), Rational(0));
            lead.a[k] = -s;
            lead.b = 1;
            rows.push_back(std::move(lead));
            if (fm::feasible(std::move(rows), P.dim())) return false;
        }
    return true;
}

namespace detail {

/// Clears denominators and divides by the content so the normal is primitive.
inline std::optional<Constraint> integral_constraint(const fm::Row& r, const std::vector<std::size_t>& keep) {
    Integer den = 1;
    for (std::size_t k : keep) den = lcm_of(den, r.a[k].get_den());
    std::vector<Integer> ints;
    Integer g = 0;
    for (std::size_t k : keep) {
        Integer v = Integer(r.a[k] * Rational(den));
        g = gcd_of(g, v);
        ints.push_back(v);
    }
    if (g == 0) return std::nullopt;
    Constraint c;
    for (auto& v : ints) c.form.normal.push_back(Integer(v / g).get_si());
    c.form.offset = r.b * Rational(den) / Rational(g);
    c.strict = r.kind == fm::Kind::Lt;
    return c;
}

}  // namespace detail

/// Projection of P onto the coordinates not listed in `drop` (in their original order).
inline std::optional<Polyhedron> poly_project_out(const Polyhedron& P, const std::vector<std::size_t>& drop) {
    auto rows = fm::project_out(P.rows(), drop);
    if (!rows) return std::nullopt;
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < P.dim(); ++k)
        if (std::find(drop.begin(), drop.end(), k) == drop.end()) keep.push_back(k);
    Polyhedron out(keep.size());
    for (const auto& r : *rows) {
        if (r.kind == fm::Kind::Eq) {
            auto c = detail::integral_constraint(r, keep);
            if (c) out.add_equality(c->form);
            continue;
        }
        if (auto c = detail::integral_constraint(r, keep)) out.add(std::move(*c));
    }
    return out;
}

// ---------------------------------------------------------------- cells

using SignVector = std::vector<int>;

struct Cell {
    SignVector signs;
    RationalPoint witness;
};

namespace detail {

/// Row for f < 0, f = 0 or f > 0.
inline fm::Row sign_row(const AffineForm& f, int s) {
    fm::Row r;
    Rational m = s > 0 ? Rational(-1) : Rational(1);
    for (long long a : f.normal) r.a.push_back(m * make_rational(a));
    r.b = m * f.offset;
    r.kind = s == 0 ? fm::Kind::Eq : fm::Kind::Lt;
    return r;
}

inline int sign_at(const AffineForm& f, std::span<const Rational> x) { return sgn(f(x)); }

inline void cell_search(const std::vector<AffineForm>& forms, std::size_t n, std::size_t k, const fm::Rows& rows,
                        const RationalPoint& point, SignVector& signs, std::vector<Cell>& out) {
    if (k == forms.size()) {
        out.push_back({signs, point});
        return;
    }
    int here = sign_at(forms[k], point);
    for (int s : {-1, 0, 1}) {
        fm::Rows next = rows;
        next.push_back(sign_row(forms[k], s));
        signs.push_back(s);
        if (s == here) {
            cell_search(forms, n, k + 1, next, point, signs, out);
        } else if (auto p = fm::find_point(next, n)) {
            cell_search(forms, n, k + 1, next, *p, signs, out);
        }
        signs.pop_back();
    }
}

}  // namespace detail

/// Nonempty cells of the arrangement with a witness point each, in (-,0,+) lexicographic order.
inline std::vector<Cell> arrangement_cells(const std::vector<AffineForm>& forms, std::size_t dim) {
    for (const auto& f : forms)
        if (f.dim() != dim) throw DimensionMismatch("arrangement form of wrong dimension");
    std::vector<Cell> out;
    SignVector signs;
    detail::cell_search(forms, dim, 0, {}, RationalPoint(dim, Rational(0)), signs, out);
    return out;
}

inline std::vector<SignVector> enumerate_cells(const std::vector<AffineForm>& forms) {
    std::size_t dim = forms.empty() ? 0 : forms.front().dim();
    std::vector<SignVector> out;
    for (auto& c : arrangement_cells(forms, dim)) out.push_back(std::move(c.signs));
    return out;
}

/// The relatively open cell of a sign vector as a polyhedron with weak equalities.
inline Polyhedron cell_polyhedron(const std::vector<AffineForm>& forms, const SignVector& signs, std::size_t dim) {
    Polyhedron p(dim);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (signs[i] < 0) p.add(forms[i], true);
        else if (signs[i] > 0) p.add(-forms[i], true);
        else p.add_equality(forms[i]);
    }
    return p;
}

namespace detail {

/// Scales a form so the normal is primitive with a positive leading entry.
inline AffineForm canonical_form(const AffineForm& f) {
    long long g = 0;
    for (long long a : f.normal) g = std::gcd(g, a < 0 ? -a : a);
    AffineForm r = f;
    if (g == 0) return r;
    long long lead = 0;
    for (long long a : f.normal)
        if (a != 0) {
            lead = a;
            break;
        }
    long long s = lead < 0 ? -g : g;
    for (auto& a : r.normal) a /= s;
    r.offset /= make_rational(s);
    return r;
}

}  // namespace detail

/// Open polyhedra whose union is the complement of the closed union T.
inline std::vector<Polyhedron> complement_of_union(const PolyUnion& T) {
    for (const auto& p : T.pieces)
        if (!p.is_closed()) throw NotClosedInput("complement_of_union needs closed pieces");
    std::vector<AffineForm> forms;
    std::set<std::pair<std::vector<long long>, Rational>> seen;
    for (const auto& p : T.pieces)
        for (const auto& c : p.constraints()) {
            if (c.form.is_constant()) continue;
            AffineForm f = detail::canonical_form(c.form);
            if (seen.insert({f.normal, f.offset}).second) forms.push_back(std::move(f));
        }
    std::vector<std::set<std::pair<std::size_t, int>>> keys;
    for (const auto& cell : arrangement_cells(forms, T.dim)) {
        if (T.contains(cell.witness)) continue;
        std::set<std::pair<std::size_t, int>> key;
        for (std::size_t i = 0; i < forms.size(); ++i)
            if (cell.signs[i] != 0) key.insert({i, cell.signs[i]});
        keys.push_back(std::move(key));
    }
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<std::set<std::pair<std::size_t, int>>> kept;
    for (auto& k : keys) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const auto& small) {
            return std::includes(k.begin(), k.end(), small.begin(), small.end());
        });
        if (!redundant) kept.push_back(std::move(k));
    }
    std::vector<Polyhedron> out;
    for (const auto& k : kept) {
        Polyhedron p(T.dim);
        for (const auto& [i, s] : k) p.add(s < 0 ? forms[i] : -forms[i], true);
        out.push_back(std::move(p));
    }
    return out;
}

/// For an open P = {alpha_i.X + C_i < 0} in log coordinates, the polynomial
/// F = 1 (+) sum_i -(e^{C_i}) x^{alpha_i} with P = {X : F(e^X) > 0}.
inline TropPoly open_poly_to_trop(const Polyhedron& P) {
    if (!P.is_open()) throw NotClosedInput("open_poly_to_trop needs strict constraints only");
    if (poly_is_empty(P)) throw EmptyPolyhedron("open_poly_to_trop on an empty polyhedron");
    TropPoly F(P.dim());
    F.set_term(Exponent(P.dim(), 0), SignedTropVal::one());
    for (const auto& c : P.constraints()) {
        if (c.form.is_constant()) continue;
        F.add_term(c.form.normal, SignedTropVal(Sign::Negative, Valuation(Rational(-c.form.offset))));
    }
    return F;
}

/// Flips valuation coordinates V to log coordinates X = -V (and back).
inline Polyhedron reflect(const Polyhedron& P) {
    Polyhedron q(P.dim());
    for (auto c : P.constraints()) {
        for (auto& a : c.form.normal) a = -a;
        q.add(std::move(c));
    }
    return q;
}

inline PolyUnion reflect(const PolyUnion& U) {
    PolyUnion r{U.dim, {}};
    for (const auto& p : U.pieces) r.pieces.push_back(reflect(p));
    return r;
}

// ---------------------------------------------------------------- orthants

struct Orthant {
    std::vector<int> sigma;

    std::size_t size() const { return sigma.size(); }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t k = 0; k < sigma.size(); ++k)
            if (sigma[k] != 0) s.push_back(k);
        return s;
    }

    bool strictly_positive() const {
        return std::all_of(sigma.begin(), sigma.end(), [](int s) { return s > 0; });
    }

    std::string str() const {
        std::string out;
        for (int s : sigma) out.push_back(s > 0 ? '+' : (s < 0 ? '-' : '0'));
        return out;
    }

    static Orthant parse(std::string_view text) {
        Orthant o;
        for (char c : text) {
            if (c == '+') o.sigma.push_back(1);
            else if (c == '-') o.sigma.push_back(-1);
            else if (c == '0') o.sigma.push_back(0);
            else if (c == ' ' || c == ',') continue;
            else throw ParseError("bad orthant character '" + std::string(1, c) + "'");
        }
        if (o.sigma.empty()) throw ParseError("empty orthant");
        return o;
    }

    static Orthant positive(std::size_t n) { return {std::vector<int>(n, 1)}; }

    /// All 3^n orthants, in (-,0,+) lexicographic order.
    static std::vector<Orthant> all(std::size_t n) {
        std::vector<Orthant> out{{{}}};
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Orthant> next;
            for (const auto& o : out)
                for (int s : {-1, 0, 1}) {
                    Orthant e = o;
                    e.sigma.push_back(s);
                    next.push_back(std::move(e));
                }
            out = std::move(next);
        }
        return out;
    }

    friend bool operator==(const Orthant&, const Orthant&) = default;
    friend auto operator<=>(const Orthant&, const Orthant&) = default;
};

/// The tropical point of orthant sigma with valuations V on its support.
inline TropPoint embed(const Orthant& o, std::span<const Rational> V) {
    auto sup = o.support();
    if (V.size() != sup.size()) throw DimensionMismatch("valuation vector does not match orthant support");
    TropPoint z(o.size());
    for (std::size_t j = 0; j < sup.size(); ++j) z[sup[j]] = SignedTropVal(sign_from_int(o.sigma[sup[j]]), V[j]);
    return z;
}

inline Orthant orthant_of(const TropPoint& z) {
    Orthant o;
    for (const auto& c : z) o.sigma.push_back(to_int(c.sign()));
    return o;
}

/// Valuations of the nonzero coordinates.
inline RationalPoint valuation_coords(const TropPoint& z) {
    RationalPoint v;
    for (const auto& c : z)
        if (!c.is_zero()) v.push_back(c.val().value());
    return v;
}

// ---------------------------------------------------------------- regions

namespace detail {

struct LinTerm {
    std::vector<long long> d;  // exponents on the support
    Rational c;                // valuation of the coefficient
    int s;                     // sign of the term in this orthant
};

/// L_i - L_j as an affine form.
inline AffineForm diff(const LinTerm& i, const LinTerm& j) {
    AffineForm f;
    f.normal.resize(i.d.size());
    for (std::size_t k = 0; k < i.d.size(); ++k) f.normal[k] = i.d[k] - j.d[k];
    f.offset = i.c - j.c;
    return f;
}

/// Region where a term of sign + dominates, strictly against - terms when `strict`.
inline PolyUnion positive_region(const std::vector<LinTerm>& ts, std::size_t dim, bool strict) {
    PolyUnion U{dim, {}};
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].s <= 0) continue;
        Polyhedron p(dim);
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (j == i) continue;
            p.add(diff(ts[i], ts[j]), strict && ts[j].s < 0);
        }
        U.pieces.push_back(std::move(p));
    }
    return U;
}

inline PolyUnion balanced_region(const std::vector<LinTerm>& ts, std::size_t dim) {
    PolyUnion U{dim, {}};
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].s <= 0) continue;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (ts[j].s >= 0) continue;
            Polyhedron p(dim);
            p.add_equality(diff(ts[i], ts[j]));
            for (std::size_t k = 0; k < ts.size(); ++k)
                if (k != i && k != j) p.add(diff(ts[i], ts[k]), false);
            U.pieces.push_back(std::move(p));
        }
    }
    return U;
}

}  // namespace detail

/// Exact {V : F(embed(sigma, V)) rel 0} in the valuation coordinates of support(sigma).
inline PolyUnion trop_region(const TropPoly& F, const Orthant& sigma, Relation rel) {
    if (sigma.size() != F.nvars()) throw DimensionMismatch("orthant length differs from variable count");
    auto sup = sigma.support();
    std::size_t dim = sup.size();
    std::vector<detail::LinTerm> ts;
    for (const auto& [e, c] : F.terms()) {
        bool vanishes = false;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (sigma.sigma[k] != 0) continue;
            if (e[k] < 0) throw NegativeExponentAtZero();
            if (e[k] > 0) vanishes = true;
        }
        if (vanishes) continue;
        detail::LinTerm t;
        int s = to_int(c.sign());
        for (std::size_t k : sup) {
            t.d.push_back(e[k]);
            if (sigma.sigma[k] < 0 && (e[k] % 2 != 0)) s = -s;
        }
        t.c = c.val().value();
        t.s = s;
        ts.push_back(std::move(t));
    }
    auto negate = [](std::vector<detail::LinTerm> v) {
        for (auto& t : v) t.s = -t.s;
        return v;
    };
    PolyUnion U{dim, {}};
    if (ts.empty()) {
        if (rel == Relation::Eq || rel == Relation::Ge || rel == Relation::Le) U = PolyUnion::whole(dim);
        return U;
    }
    switch (rel) {
        case Relation::Ge: U = detail::positive_region(ts, dim, false); break;
        case Relation::Gt: U = detail::positive_region(ts, dim, true); break;
        case Relation::Le: U = detail::positive_region(negate(ts), dim, false); break;
        case Relation::Lt: U = detail::positive_region(negate(ts), dim, true); break;
        case Relation::Eq: U = detail::balanced_region(ts, dim); break;
        case Relation::Ne:
            U = union_join(detail::positive_region(ts, dim, true), detail::positive_region(negate(ts), dim, true));
            break;
    }
    return union_prune(std::move(U));
}

// ---------------------------------------------------------------- faces at infinity

/// Where the closure of P goes as the coordinates in `to_infinity` tend to
/// +infinity: the projection of cl(P) onto the other coordinates, provided
/// cl(P) recedes along some direction with d_rest = 0 and d_k >= 1 on those
/// coordinates. nullopt when no such direction exists.
inline std::optional<Polyhedron> limit_face(const Polyhedron& P, const std::vector<std::size_t>& to_infinity) {
    Polyhedron cl = P.closure();
    if (poly_is_empty(cl)) return std::nullopt;
    fm::Rows dir;
    for (const auto& c : cl.constraints()) {
        fm::Row r;
        for (long long a : c.form.normal) r.a.push_back(make_rational(a));
        r.b = 0;
        dir.push_back(std::move(r));
    }
    for (std::size_t k = 0; k < P.dim(); ++k) {
        fm::Row r;
        r.a.assign(P.dim(), Rational(0));
        bool inf = std::find(to_infinity.begin(), to_infinity.end(), k) != to_infinity.end();
        if (inf) {
            r.a[k] = -1;
            r.b = 1;
        } else {
            r.a[k] = 1;
            r.b = 0;
            r.kind = fm::Kind::Eq;
        }
        dir.push_back(std::move(r));
    }
    if (!fm::feasible(std::move(dir), P.dim())) return std::nullopt;
    return poly_project_out(cl, to_infinity);
}

}  // namespace tropreal
