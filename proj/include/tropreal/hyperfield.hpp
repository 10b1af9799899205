#pragma once

/**
 * @file hyperfield.hpp
 * @brief The sign hyperfield S, the tropical hyperfield T and the real
 *        tropical hyperfield RT, with their multivalued sums.
 *
 * Elements of RT are stored as (sign, valuation): the pair (s, v) stands for
 * the real number s * exp(-v). Smaller valuation means larger magnitude; the
 * additive zero is (0, +inf). Log coordinates of the usual pictures are
 * X = -v and only appear when rendering.
 *
 * A sum in RT is either a point or a balanced interval [-a, a]; HyperValue
 * models exactly these two shapes, and every set-lifted sum of HyperValues is
 * again one of them.
 */

#include "tropreal/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace tropreal {

// ---------------------------------------------------------------------------
// Sign

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign sign_from_int(int s) {
    return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

constexpr Sign operator*(Sign a, Sign b) { return sign_from_int(to_int(a) * to_int(b)); }

constexpr Sign operator-(Sign a) { return sign_from_int(-to_int(a)); }

/// s^d; the zero sign to a negative power is undefined and reported as Zero.
constexpr Sign sign_pow(Sign s, long long d) {
    if (d == 0) return Sign::Positive;
    if (s == Sign::Zero) return Sign::Zero;
    return (d % 2 == 0) ? Sign::Positive : s;
}

inline char sign_char(Sign s) {
    return s == Sign::Positive ? '+' : (s == Sign::Negative ? '-' : '0');
}

// ---------------------------------------------------------------------------
// Valuation: Q extended by +inf

class Valuation {
public:
    Valuation() : infinite_(true) {}
    Valuation(Rational v) : infinite_(false), value_(std::move(v)) {}  // NOLINT(implicit)
    Valuation(long long v) : Valuation(make_rational(v)) {}              // NOLINT(implicit)

    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    const Rational& value() const {
        if (infinite_) throw std::domain_error("value() of the infinite valuation");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) {
            if (a.infinite_ == b.infinite_) return std::strong_ordering::equal;
            return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return Valuation(Rational(a.value_ + b.value_));
    }

    Valuation scaled(long long d) const {
        if (infinite_) {
            if (d <= 0) throw std::domain_error("scaling the infinite valuation by a non-positive integer");
            return infinity();
        }
        return Valuation(Rational(value_ * make_rational(d)));
    }

    std::string str() const { return infinite_ ? "inf" : to_string(value_); }

private:
    bool infinite_;
    Rational value_;
};

inline const Valuation& min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }

inline Valuation parse_valuation(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s == "inf" || s == "+inf" || s == "oo") return Valuation::infinity();
    return Valuation(parse_rational(s));
}

// ---------------------------------------------------------------------------
// SignedTropVal: an element of RT

class SignedTropVal {
public:
    SignedTropVal() = default;  // the zero element

    SignedTropVal(Sign s, Valuation v) : sign_(s), val_(std::move(v)) {
        if ((sign_ == Sign::Zero) != val_.is_infinite())
            throw std::invalid_argument("signed value needs sign 0 exactly when val = +inf");
    }

    static SignedTropVal zero() { return {}; }
    static SignedTropVal one() { return {Sign::Positive, Valuation(0)}; }

    Sign sign() const { return sign_; }
    const Valuation& val() const { return val_; }
    bool is_zero() const { return sign_ == Sign::Zero; }

    friend bool operator==(const SignedTropVal&, const SignedTropVal&) = default;

    /// Total order for containers (by sign, then valuation); not the real order.
    friend std::strong_ordering operator<=>(const SignedTropVal& a, const SignedTropVal& b) {
        if (auto c = to_int(a.sign_) <=> to_int(b.sign_); c != 0) return c;
        return a.val_ <=> b.val_;
    }

    std::string str() const { return std::string("(") + sign_char(sign_) + "," + val_.str() + ")"; }

private:
    Sign sign_ = Sign::Zero;
    Valuation val_ = Valuation::infinity();
};

inline std::ostream& operator<<(std::ostream& os, const SignedTropVal& a) { return os << a.str(); }

/// Product in RT: signs multiply, valuations add, zero absorbs.
inline SignedTropVal rt_mul(const SignedTropVal& a, const SignedTropVal& b) {
    if (a.is_zero() || b.is_zero()) return SignedTropVal::zero();
    return {a.sign() * b.sign(), a.val() + b.val()};
}

inline SignedTropVal rt_neg(const SignedTropVal& a) {
    if (a.is_zero()) return a;
    return {-a.sign(), a.val()};
}

inline SignedTropVal rt_inv(const SignedTropVal& a) {
    if (a.is_zero()) throw std::domain_error("inverse of the zero of RT");
    return {a.sign(), Valuation(Rational(-a.val().value()))};
}

inline SignedTropVal rt_div(const SignedTropVal& a, const SignedTropVal& b) { return rt_mul(a, rt_inv(b)); }

/// a^d for an integer d; zero^d with d < 0 is undefined.
inline SignedTropVal rt_pow(const SignedTropVal& a, long long d) {
    if (d == 0) return SignedTropVal::one();
    if (a.is_zero()) {
        if (d < 0) throw std::domain_error("zero of RT to a negative power");
        return a;
    }
    return {sign_pow(a.sign(), d), a.val().scaled(d)};
}

// ---------------------------------------------------------------------------
// HyperValue: a point of RT or a balanced interval [-exp(-v), exp(-v)]

class HyperValue {
public:
    enum class Kind { Point, Balanced };

    HyperValue() = default;  // the point zero

    static HyperValue point(SignedTropVal p) {
        HyperValue h;
        h.kind_ = Kind::Point;
        h.point_ = std::move(p);
        return h;
    }

    static HyperValue balanced(Rational bound) {
        HyperValue h;
        h.kind_ = Kind::Balanced;
        h.bound_ = std::move(bound);
        return h;
    }

    Kind kind() const { return kind_; }
    bool is_point() const { return kind_ == Kind::Point; }
    bool is_balanced() const { return kind_ == Kind::Balanced; }

    const SignedTropVal& as_point() const {
        if (kind_ != Kind::Point) throw std::logic_error("HyperValue is not a point");
        return point_;
    }

    /// Valuation bound v of a balanced interval.
    const Rational& bound() const {
        if (kind_ != Kind::Balanced) throw std::logic_error("HyperValue is not balanced");
        return bound_;
    }

    /// Set membership: a balanced interval holds zero and everything with val >= v.
    bool contains(const SignedTropVal& x) const {
        if (kind_ == Kind::Point) return point_ == x;
        return x.is_zero() || x.val() >= Valuation(bound_);
    }

    friend bool operator==(const HyperValue& a, const HyperValue& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ == Kind::Point ? a.point_ == b.point_ : a.bound_ == b.bound_;
    }

    std::string str() const {
        if (kind_ == Kind::Point) return "point" + point_.str();
        return "balanced(" + to_string(bound_) + ")";
    }

private:
    Kind kind_ = Kind::Point;
    SignedTropVal point_;
    Rational bound_;
};

inline std::ostream& operator<<(std::ostream& os, const HyperValue& h) { return os << h.str(); }

inline HyperValue hv_neg(const HyperValue& h) {
    return h.is_point() ? HyperValue::point(rt_neg(h.as_point())) : h;
}

/// { x * w : w in h } for a point x; again a HyperValue.
inline HyperValue rt_mul(const SignedTropVal& x, const HyperValue& h) {
    if (h.is_point()) return HyperValue::point(rt_mul(x, h.as_point()));
    if (x.is_zero()) return HyperValue::point(SignedTropVal::zero());
    return HyperValue::balanced(h.bound() + x.val().value());
}

/// Set-lifted sum in RT.
inline HyperValue rt_add(const HyperValue& a, const HyperValue& b) {
    if (a.is_point() && b.is_point()) {
        const auto& p = a.as_point();
        const auto& q = b.as_point();
        if (p.is_zero()) return b;
        if (q.is_zero()) return a;
        if (p.val() < q.val()) return a;
        if (q.val() < p.val()) return b;
        if (p.sign() == q.sign()) return a;
        return HyperValue::balanced(p.val().value());
    }
    if (a.is_balanced() && b.is_balanced()) return HyperValue::balanced(a.bound() < b.bound() ? a.bound() : b.bound());
    const HyperValue& bal = a.is_balanced() ? a : b;
    const HyperValue& pt = a.is_balanced() ? b : a;
    const auto& p = pt.as_point();
    if (!p.is_zero() && p.val() < Valuation(bal.bound())) return pt;
    return bal;
}

inline HyperValue rt_add(const SignedTropVal& a, const SignedTropVal& b) {
    return rt_add(HyperValue::point(a), HyperValue::point(b));
}

/// n-ary sum: the dominant (smallest-valuation) terms decide; mixed signs balance.
inline HyperValue rt_sum(std::span<const SignedTropVal> terms) {
    std::optional<Valuation> best;
    Sign sign = Sign::Zero;
    bool mixed = false;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        if (!best || t.val() < *best) {
            best = t.val();
            sign = t.sign();
            mixed = false;
        } else if (t.val() == *best && t.sign() != sign) {
            mixed = true;
        }
    }
    if (!best) return HyperValue::point(SignedTropVal::zero());
    if (mixed) return HyperValue::balanced(best->value());
    return HyperValue::point({sign, *best});
}

inline HyperValue rt_sum(std::initializer_list<SignedTropVal> terms) {
    return rt_sum(std::span<const SignedTropVal>(terms.begin(), terms.size()));
}

// ---------------------------------------------------------------------------
// Relations against zero

enum class Relation { Eq, Ge, Gt, Le, Lt, Ne };

inline std::string relation_symbol(Relation r) {
    switch (r) {
        case Relation::Eq: return "=";
        case Relation::Ge: return ">=";
        case Relation::Gt: return ">";
        case Relation::Le: return "<=";
        case Relation::Lt: return "<";
        case Relation::Ne: return "!=";
    }
    return "?";
}

inline std::string relation_flag(Relation r) {
    switch (r) {
        case Relation::Eq: return "eq";
        case Relation::Ge: return "ge";
        case Relation::Gt: return "gt";
        case Relation::Le: return "le";
        case Relation::Lt: return "lt";
        case Relation::Ne: return "ne";
    }
    return "?";
}

/// Accepts both the symbolic form (">=") and the flag form ("ge").
inline Relation parse_relation(std::string_view s) {
    if (s == "=" || s == "==" || s == "eq") return Relation::Eq;
    if (s == ">=" || s == "ge") return Relation::Ge;
    if (s == ">" || s == "gt") return Relation::Gt;
    if (s == "<=" || s == "le") return Relation::Le;
    if (s == "<" || s == "lt") return Relation::Lt;
    if (s == "!=" || s == "ne") return Relation::Ne;
    throw ParseError("unknown relation '" + std::string(s) + "'");
}

/// The relation satisfied by -f when f satisfies r.
constexpr Relation mirrored(Relation r) {
    switch (r) {
        case Relation::Ge: return Relation::Le;
        case Relation::Gt: return Relation::Lt;
        case Relation::Le: return Relation::Ge;
        case Relation::Lt: return Relation::Gt;
        default: return r;
    }
}

/// Does a real number with sign s satisfy "s rel 0"?
constexpr bool sign_satisfies(Sign s, Relation r) {
    int v = to_int(s);
    switch (r) {
        case Relation::Eq: return v == 0;
        case Relation::Ge: return v >= 0;
        case Relation::Gt: return v > 0;
        case Relation::Le: return v <= 0;
        case Relation::Lt: return v < 0;
        case Relation::Ne: return v != 0;
    }
    return false;
}

/**
 * Tropical relations. "= 0" means the value contains zero, ">= 0" that it
 * contains a nonnegative number and "> 0" that it is a positive point.
 * "<= 0" and "< 0" are defined through the negated value, and "!= 0" as the
 * complement of "= 0"; the hyperfield literature only fixes the first three.
 */
inline bool hv_relation(const HyperValue& h, Relation rel) {
    switch (rel) {
        case Relation::Eq: return h.is_balanced() || h.as_point().is_zero();
        case Relation::Ge: return h.is_balanced() || h.as_point().sign() != Sign::Negative;
        case Relation::Gt: return h.is_point() && h.as_point().sign() == Sign::Positive;
        case Relation::Le: return hv_relation(hv_neg(h), Relation::Ge);
        case Relation::Lt: return hv_relation(hv_neg(h), Relation::Gt);
        case Relation::Ne: return !hv_relation(h, Relation::Eq);
    }
    return false;
}

// ---------------------------------------------------------------------------
// The tropical hyperfield T, in valuation coordinates

/// A subset of T closed under the sums below: a single valuation {lo}, or the
/// ray [lo, +inf] (which includes +inf, the zero of T).
struct TropSet {
    Valuation lo;
    bool ray = false;

    static TropSet single(Valuation v) { return {std::move(v), false}; }
    static TropSet from(Valuation v, bool is_ray) {
        if (v.is_infinite()) is_ray = false;
        return {std::move(v), is_ray};
    }

    bool contains(const Valuation& v) const { return ray ? v >= lo : v == lo; }
    friend bool operator==(const TropSet&, const TropSet&) = default;

    std::string str() const { return ray ? "[" + lo.str() + ",inf]" : "{" + lo.str() + "}"; }
};

/// Distinct valuations: the smaller wins; equal ones give everything at least as large.
inline TropSet t_add(const Valuation& a, const Valuation& b) {
    if (a < b) return TropSet::single(a);
    if (b < a) return TropSet::single(b);
    return TropSet::from(a, true);
}

inline TropSet t_add(const TropSet& a, const TropSet& b) {
    if (!a.ray && !b.ray) return t_add(a.lo, b.lo);
    if (a.ray && b.ray) return TropSet::from(min(a.lo, b.lo), true);
    const TropSet& r = a.ray ? a : b;
    const TropSet& p = a.ray ? b : a;
    if (p.lo < r.lo) return p;
    return r;
}

/// Product in T is addition of valuations.
inline TropSet t_mul(const Valuation& x, const TropSet& s) { return TropSet::from(x + s.lo, s.ray); }

// ---------------------------------------------------------------------------
// The sign hyperfield S

/// A subset of {-1, 0, +1} as a bit mask.
struct SignSet {
    std::uint8_t mask = 0;

    static SignSet of(Sign s) { return {static_cast<std::uint8_t>(1u << (to_int(s) + 1))}; }
    static SignSet all() { return {0b111}; }

    bool contains(Sign s) const { return (mask >> (to_int(s) + 1)) & 1u; }
    SignSet operator|(SignSet o) const { return {static_cast<std::uint8_t>(mask | o.mask)}; }
    friend bool operator==(const SignSet&, const SignSet&) = default;

    std::string str() const {
        std::string out = "{";
        for (Sign s : {Sign::Negative, Sign::Zero, Sign::Positive})
            if (contains(s)) {
                if (out.size() > 1) out += ",";
                out += sign_char(s);
            }
        return out + "}";
    }
};

inline SignSet s_add(Sign a, Sign b) {
    if (a == Sign::Zero) return SignSet::of(b);
    if (b == Sign::Zero || a == b) return SignSet::of(a);
    return SignSet::all();
}

inline SignSet s_add(SignSet a, SignSet b) {
    SignSet out;
    for (Sign x : {Sign::Negative, Sign::Zero, Sign::Positive})
        for (Sign y : {Sign::Negative, Sign::Zero, Sign::Positive})
            if (a.contains(x) && b.contains(y)) out = out | s_add(x, y);
    return out;
}

inline SignSet s_mul(Sign x, SignSet s) {
    SignSet out;
    for (Sign y : {Sign::Negative, Sign::Zero, Sign::Positive})
        if (s.contains(y)) out = out | SignSet::of(x * y);
    return out;
}

// The forgetful morphisms RT -> T and RT -> S, lifted to HyperValues.

inline TropSet forget_sign(const HyperValue& h) {
    if (h.is_point()) return TropSet::single(h.as_point().val());
    return TropSet::from(Valuation(h.bound()), true);
}

inline SignSet forget_valuation(const HyperValue& h) {
    if (h.is_point()) return SignSet::of(h.as_point().sign());
    return SignSet::all();
}

// ---------------------------------------------------------------------------
// Text form "(+,3/2)", "(-,0)", "(0,inf)"

inline SignedTropVal parse_signed(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw ParseError("malformed signed value '" + s + "'");
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("malformed signed value '" + s + "'");
    std::string sign_part = s.substr(1, comma - 1);
    std::string val_part = s.substr(comma + 1, s.size() - comma - 2);
    Sign sign;
    if (sign_part == "+" || sign_part == "1" || sign_part == "+1") sign = Sign::Positive;
    else if (sign_part == "-" || sign_part == "-1") sign = Sign::Negative;
    else if (sign_part == "0") sign = Sign::Zero;
    else throw ParseError("bad sign '" + sign_part + "'");
    try {
        return {sign, parse_valuation(val_part)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace tropreal
