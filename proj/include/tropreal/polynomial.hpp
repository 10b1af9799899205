#pragma once

/**
 * @file polynomial.hpp
 * @brief Laurent polynomials with Puiseux coefficients (PolyK), tropical
 *        polynomials over RT (TropPoly), and their evaluation.
 */

#include "tropreal/puiseux.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace tropreal {

using Exponent = std::vector<long long>;
using TropPoint = std::vector<SignedTropVal>;
using PointK = std::vector<PuiseuxSeries>;

struct NegativeExponentAtZero : Error {
    NegativeExponentAtZero() : Error("Laurent term with a negative exponent evaluated at a zero coordinate") {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NonMonomialInverse : Error {
    NonMonomialInverse() : Error("negative exponent at a coordinate that is not a Puiseux monomial") {}
};

/// Default variable names: x, y, z for up to three variables, x1..xn otherwise.
inline std::string variable_name(std::size_t k, std::size_t nvars, bool upper = false) {
    std::string name;
    if (nvars <= 3) name = std::string(1, "xyz"[k]);
    else name = "x" + std::to_string(k + 1);
    if (upper) name[0] = static_cast<char>(name[0] - 'a' + 'A');
    return name;
}

namespace detail {

inline std::string monomial_text(const Exponent& e, bool upper) {
    std::string out;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += variable_name(k, e.size(), upper);
        if (e[k] < 0) out += "^(" + std::to_string(e[k]) + ")";
        else if (e[k] != 1) out += "^" + std::to_string(e[k]);
    }
    return out;
}

inline long long total_degree(const Exponent& e) {
    long long d = 0;
    for (long long x : e) d += x;
    return d;
}

/// Display order: total degree descending, then lexicographically descending.
struct DisplayOrder {
    bool operator()(const Exponent& a, const Exponent& b) const {
        auto da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// PolyK

class PolyK {
public:
    using TermMap = std::map<Exponent, PuiseuxSeries>;

    explicit PolyK(std::size_t nvars = 1) : nvars_(nvars) {}

    static PolyK constant(std::size_t nvars, PuiseuxSeries c) {
        PolyK p(nvars);
        p.add_term(Exponent(nvars, 0), std::move(c));
        return p;
    }

    static PolyK variable(std::size_t nvars, std::size_t k) {
        Exponent e(nvars, 0);
        e.at(k) = 1;
        return monomial(std::move(e), PuiseuxSeries(1));
    }

    static PolyK monomial(Exponent exps, PuiseuxSeries c) {
        PolyK p(exps.size());
        p.add_term(std::move(exps), std::move(c));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Exponent exps, const PuiseuxSeries& c) {
        if (exps.size() != nvars_) throw DimensionMismatch("exponent vector length differs from nvars");
        if (c.is_zero()) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(std::move(exps), c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    PolyK operator-() const {
        PolyK r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend PolyK operator+(const PolyK& a, const PolyK& b) {
        a.require_same(b);
        PolyK r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend PolyK operator-(const PolyK& a, const PolyK& b) { return a + (-b); }

    friend PolyK operator*(const PolyK& a, const PolyK& b) {
        a.require_same(b);
        PolyK r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(a.nvars_);
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    PolyK pow(unsigned long long k) const {
        PolyK base = *this, result = constant(nvars_, 1);
        while (k > 0) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return result;
    }

    /// Largest D_k >= 0 with every exponent of variable k at least -D_k.
    Exponent laurent_shift() const {
        Exponent d(nvars_, 0);
        for (const auto& [e, c] : terms_)
            for (std::size_t k = 0; k < nvars_; ++k) d[k] = std::max(d[k], -e[k]);
        return d;
    }

    /// Multiplication by x^shift.
    PolyK shifted(const Exponent& shift) const {
        PolyK r(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            for (std::size_t k = 0; k < nvars_; ++k) f[k] += shift[k];
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    friend bool operator==(const PolyK&, const PolyK&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::map<Exponent, const PuiseuxSeries*, detail::DisplayOrder> ordered;
        for (const auto& [e, c] : terms_) ordered.emplace(e, &c);
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, cp] : ordered) {
            const PuiseuxSeries& c = *cp;
            std::string mono = detail::monomial_text(e, false);
            bool negative = c.is_monomial() && c.sign() == Sign::Negative;
            PuiseuxSeries mag = negative ? -c : c;
            std::string coeff = mag.str();
            if (!mag.is_monomial()) coeff = "(" + coeff + ")";
            if (!first) os << (negative ? " - " : " + ");
            else if (negative) os << "-";
            first = false;
            if (mono.empty()) os << coeff;
            else if (coeff == "1") os << mono;
            else os << coeff << "*" << mono;
        }
        return os.str();
    }

private:
    void require_same(const PolyK& o) const {
        if (o.nvars_ != nvars_) throw DimensionMismatch("polynomials over different numbers of variables");
    }

    std::size_t nvars_;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const PolyK& f) { return os << f.str(); }

// ---------------------------------------------------------------------------
// TropPoly

class TropPoly {
public:
    using TermMap = std::map<Exponent, SignedTropVal>;

    explicit TropPoly(std::size_t nvars = 1) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Sets the coefficient of x^exps, replacing any previous one.
    void set_term(Exponent exps, SignedTropVal c) {
        if (exps.size() != nvars_) throw DimensionMismatch("exponent vector length differs from nvars");
        if (c.is_zero()) {
            terms_.erase(exps);
            return;
        }
        terms_[std::move(exps)] = std::move(c);
    }

    /// Adds c to the coefficient of x^exps; a balanced (multivalued) result is rejected.
    void add_term(Exponent exps, const SignedTropVal& c) {
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            set_term(std::move(exps), c);
            return;
        }
        HyperValue s = rt_add(it->second, c);
        if (!s.is_point()) throw Error("tropical coefficient sum is multivalued");
        set_term(std::move(exps), s.as_point());
    }

    TropPoly negated() const {
        TropPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, rt_neg(c));
        return r;
    }

    friend bool operator==(const TropPoly&, const TropPoly&) = default;

    /// Text form, e.g. "X^2 (+) Y^2 (+) -X (+) -Y (+) 1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::map<Exponent, const SignedTropVal*, detail::DisplayOrder> ordered;
        for (const auto& [e, c] : terms_) ordered.emplace(e, &c);
        std::string out;
        for (const auto& [e, cp] : ordered) {
            if (!out.empty()) out += " (+) ";
            const SignedTropVal& c = *cp;
            std::string mono = detail::monomial_text(e, true);
            bool unit = c.val() == Valuation(0);
            if (unit) {
                if (c.sign() == Sign::Negative) out += "-";
                out += mono.empty() ? "1" : mono;
            } else {
                out += c.str();
                if (!mono.empty()) out += "*" + mono;
            }
        }
        return out;
    }

private:
    std::size_t nvars_;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const TropPoly& f) { return os << f.str(); }

/// Product of tropical polynomials whose term products never collide
/// (e.g. polynomials in disjoint sets of variables).
inline TropPoly mul_disjoint(const TropPoly& a, const TropPoly& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatch("tropical polynomials over different numbers of variables");
    TropPoly r(a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponent e(a.nvars());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            if (r.terms().count(e)) throw Error("term products collide");
            r.set_term(std::move(e), rt_mul(ca, cb));
        }
    return r;
}

// ---------------------------------------------------------------------------
// Tropicalization and evaluation

/// Coefficientwise signed valuation.
inline TropPoly trop_r(const PolyK& f) {
    TropPoly F(f.nvars());
    for (const auto& [e, c] : f.terms()) F.set_term(e, signed_trop(c));
    return F;
}

/// Value of the single term c * x^e at p in RT (zero if it vanishes there).
inline SignedTropVal trop_term_value(const Exponent& e, const SignedTropVal& c, const TropPoint& p) {
    SignedTropVal v = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (p[k].is_zero()) {
            if (e[k] < 0) throw NegativeExponentAtZero();
            return SignedTropVal::zero();
        }
        v = rt_mul(v, rt_pow(p[k], e[k]));
    }
    return v;
}

inline HyperValue trop_eval(const TropPoly& F, const TropPoint& p) {
    if (p.size() != F.nvars()) throw DimensionMismatch("point dimension differs from nvars");
    std::vector<SignedTropVal> values;
    values.reserve(F.terms().size());
    for (const auto& [e, c] : F.terms()) values.push_back(trop_term_value(e, c, p));
    return rt_sum(values);
}

inline bool trop_sat(const TropPoly& F, const TropPoint& p, Relation rel) { return hv_relation(trop_eval(F, p), rel); }

/// Exact value f(p). Negative exponents need a nonzero monomial coordinate.
inline PuiseuxSeries eval_k(const PolyK& f, const PointK& p) {
    if (p.size() != f.nvars()) throw DimensionMismatch("point dimension differs from nvars");
    PuiseuxSeries total;
    std::vector<std::map<long long, PuiseuxSeries>> powers(p.size());
    auto power = [&](std::size_t k, long long d) -> const PuiseuxSeries& {
        auto it = powers[k].find(d);
        if (it != powers[k].end()) return it->second;
        PuiseuxSeries v;
        if (d >= 0) {
            v = p[k].pow(static_cast<unsigned long long>(d));
        } else {
            if (p[k].is_zero()) throw NegativeExponentAtZero();
            if (!p[k].is_monomial()) throw NonMonomialInverse();
            v = p[k].monomial_inverse().pow(static_cast<unsigned long long>(-d));
        }
        return powers[k].emplace(d, std::move(v)).first->second;
    };
    for (const auto& [e, c] : f.terms()) {
        PuiseuxSeries term = c;
        for (std::size_t k = 0; k < e.size() && !term.is_zero(); ++k)
            if (e[k] != 0) term *= power(k, e[k]);
        total += term;
    }
    return total;
}

/**
 * |f(p)|^sgn for any Laurent f: f is multiplied by x^D to clear negative
 * exponents, evaluated exactly, and the factor |p|^D is divided out in RT.
 */
inline SignedTropVal signed_trop_at(const PolyK& f, const PointK& p) {
    if (p.size() != f.nvars()) throw DimensionMismatch("point dimension differs from nvars");
    Exponent shift = f.laurent_shift();
    SignedTropVal factor = SignedTropVal::one();
    bool any = false;
    for (std::size_t k = 0; k < shift.size(); ++k) {
        if (shift[k] == 0) continue;
        any = true;
        if (p[k].is_zero()) {
            // only an error if a term really carries a negative power of x_k
            throw NegativeExponentAtZero();
        }
        factor = rt_mul(factor, rt_pow(signed_trop(p[k]), shift[k]));
    }
    if (!any) return signed_trop(eval_k(f, p));
    return rt_div(signed_trop(eval_k(f.shifted(shift), p)), factor);
}

inline Sign sign_at(const PolyK& f, const PointK& p) { return signed_trop_at(f, p).sign(); }

/// The finite-family map p -> (|f_1(p)|^sgn, ..., |f_m(p)|^sgn).
inline std::vector<SignedTropVal> trop_family(const std::vector<PolyK>& fs, const PointK& p) {
    std::vector<SignedTropVal> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(signed_trop_at(f, p));
    return out;
}

/// Componentwise signed valuation of a K-point.
inline TropPoint signed_trop(const PointK& p) {
    TropPoint z;
    z.reserve(p.size());
    for (const auto& x : p) z.push_back(signed_trop(x));
    return z;
}

inline std::string point_str(const TropPoint& z) {
    std::string out = "(";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) out += ",";
        out += z[i].str();
    }
    return out + ")";
}

inline std::string point_str(const PointK& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += p[i].str();
    }
    return out + ")";
}

}  // namespace tropreal
