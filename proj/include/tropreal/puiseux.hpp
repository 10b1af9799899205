#pragma once

/**
 * @file puiseux.hpp
 * @brief Finite real Puiseux series with rational coefficients, the signed
 *        valuation map into RT, the field order, and a seeded sampler.
 *
 * A series is a finite sum  c_1 t^{e_1} + ... + c_k t^{e_k}  with
 * e_1 < ... < e_k rational and every c_i a nonzero rational. Its valuation
 * is e_1 and its sign is sgn(c_1); positive series are those with positive
 * leading coefficient. Division is deliberately absent: finite series are not
 * closed under it and nothing downstream needs it.
 */

#include "tropreal/hyperfield.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <random>
#include <sstream>
#include <vector>

namespace tropreal {

class PuiseuxSeries {
public:
    struct Term {
        Rational exp;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    PuiseuxSeries() = default;
    PuiseuxSeries(Rational c) { if (c != 0) terms_.push_back({0, std::move(c)}); }  // NOLINT(implicit)
    PuiseuxSeries(long long c) : PuiseuxSeries(make_rational(c)) {}                // NOLINT(implicit)

    /// c * t^e
    static PuiseuxSeries monomial(Rational coeff, Rational exp) {
        PuiseuxSeries s;
        if (coeff != 0) s.terms_.push_back({std::move(exp), std::move(coeff)});
        return s;
    }

    static PuiseuxSeries t() { return monomial(1, 1); }

    /// Any list of (exp, coeff) pairs; brought to normal form.
    static PuiseuxSeries from_terms(std::vector<Term> terms) {
        PuiseuxSeries s;
        s.terms_ = std::move(terms);
        s.normalize();
        return s;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    /// Leading (smallest-exponent) term; the series must be nonzero.
    const Term& leading() const {
        if (terms_.empty()) throw std::domain_error("leading term of the zero series");
        return terms_.front();
    }

    Sign sign() const { return terms_.empty() ? Sign::Zero : sign_from_int(sgn(terms_.front().coeff)); }

    Valuation valuation() const {
        return terms_.empty() ? Valuation::infinity() : Valuation(terms_.front().exp);
    }

    /// Least common denominator of the exponents (1 for the zero series).
    Integer exponent_denominator() const {
        Integer d = 1;
        for (const auto& t : terms_) d = lcm_of(d, t.exp.get_den());
        return d;
    }

    /// Sorts by exponent, merges equal exponents, drops zero coefficients.
    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().exp == t.exp) merged.back().coeff += t.coeff;
            else merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
        terms_ = std::move(merged);
    }

    bool is_normalized() const {
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].coeff == 0) return false;
            if (i > 0 && !(terms_[i - 1].exp < terms_[i].exp)) return false;
        }
        return true;
    }

    PuiseuxSeries operator-() const {
        PuiseuxSeries r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        PuiseuxSeries r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Rational c = a.terms_[i].coeff + b.terms_[j].coeff;
                if (c != 0) r.terms_.push_back({a.terms_[i].exp, c});
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::map<Rational, Rational> acc;
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) acc[x.exp + y.exp] += x.coeff * y.coeff;
        PuiseuxSeries r;
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.push_back({e, c});
        return r;
    }

    PuiseuxSeries& operator+=(const PuiseuxSeries& o) { return *this = *this + o; }
    PuiseuxSeries& operator-=(const PuiseuxSeries& o) { return *this = *this - o; }
    PuiseuxSeries& operator*=(const PuiseuxSeries& o) { return *this = *this * o; }

    PuiseuxSeries pow(unsigned long long k) const {
        PuiseuxSeries base = *this, result = PuiseuxSeries(1);
        while (k > 0) {
            if (k & 1) result *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return result;
    }

    /// Monomials are the only invertible finite series.
    PuiseuxSeries monomial_inverse() const {
        if (!is_monomial()) throw std::domain_error("only monomial Puiseux series are invertible here");
        return monomial(1 / terms_.front().coeff, -terms_.front().exp);
    }

    PuiseuxSeries scaled(const Rational& c) const {
        if (c == 0) return {};
        PuiseuxSeries r = *this;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

    /// Text form, e.g. "2 - 1/3*t^(1/2) + t^2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            bool unit = (mag == 1);
            if (e == 0) {
                os << to_string(mag);
                continue;
            }
            if (!unit) os << to_string(mag) << "*";
            os << "t";
            if (e != 1) {
                if (e.get_den() == 1 && e > 0) os << "^" << to_string(e);
                else os << "^(" << to_string(e) << ")";
            }
        }
        return os.str();
    }

private:
    std::vector<Term> terms_;  // strictly increasing exponents, nonzero coefficients
};

inline std::ostream& operator<<(std::ostream& os, const PuiseuxSeries& s) { return os << s.str(); }

/// The signed valuation |a|^sgn as an element of RT.
inline SignedTropVal signed_trop(const PuiseuxSeries& a) {
    if (a.is_zero()) return SignedTropVal::zero();
    return {a.sign(), a.valuation()};
}

/// The unique field order: a < b iff b - a has a positive leading coefficient.
inline std::strong_ordering ps_cmp(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    switch ((a - b).sign()) {
        case Sign::Negative: return std::strong_ordering::less;
        case Sign::Positive: return std::strong_ordering::greater;
        default: return std::strong_ordering::equal;
    }
}

// ---------------------------------------------------------------------------
// Sampling

struct RationalInterval {
    Rational lo;
    Rational hi;
};

/**
 * Sampler settings. Exponents come from the grid (1/d)Z inside
 * exponent_range with d <= exponent_denominator_bound; coefficients from
 * (1/q)Z inside coeff_range with q <= coeff_denominator_bound.
 */
struct SamplerConfig {
    int max_terms = 3;
    int exponent_denominator_bound = 2;
    RationalInterval exponent_range{-2, 2};
    RationalInterval coeff_range{-4, 4};
    std::uint64_t seed = 0;
    int coeff_denominator_bound = 2;
    /// Probability that a coordinate of a sampled point is exactly zero.
    double zero_probability = 0.0;

    void validate() const {
        if (max_terms < 1) throw std::invalid_argument("max_terms must be positive");
        if (exponent_denominator_bound < 1 || coeff_denominator_bound < 1)
            throw std::invalid_argument("denominator bounds must be positive");
        if (exponent_range.hi < exponent_range.lo || coeff_range.hi < coeff_range.lo)
            throw std::invalid_argument("sampler ranges must be nonempty");
        if (coeff_range.lo == 0 && coeff_range.hi == 0)
            throw std::invalid_argument("coefficient range admits only zero");
        if (zero_probability < 0.0 || zero_probability > 1.0)
            throw std::invalid_argument("zero_probability must lie in [0, 1]");
    }
};

/// Draws Puiseux series and points. All randomness flows through the owned
/// engine, so equal seeds give equal sequences.
class PuiseuxSampler {
public:
    explicit PuiseuxSampler(SamplerConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) { cfg_.validate(); }

    const SamplerConfig& config() const { return cfg_; }
    std::mt19937_64& engine() { return rng_; }

    long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }

    /// A random series. The leading exponent is uniform over the exponent grid
    /// (valuation-stratified); further terms use larger grid exponents.
    PuiseuxSeries series() {
        long long d = uniform(1, cfg_.exponent_denominator_bound);
        auto grid = grid_indices(cfg_.exponent_range, d);
        if (grid.first > grid.second) {  // range too narrow for this denominator
            d = 1;
            grid = {ceil_of(cfg_.exponent_range.lo).get_si(), floor_of(cfg_.exponent_range.hi).get_si()};
            if (grid.first > grid.second) {
                return PuiseuxSeries::monomial(nonzero_coeff(), cfg_.exponent_range.lo);
            }
        }
        long long lead = uniform(grid.first, grid.second);
        std::vector<PuiseuxSeries::Term> terms;
        terms.push_back({make_rational(lead, d), nonzero_coeff()});
        int extra = static_cast<int>(uniform(0, cfg_.max_terms - 1));
        add_tail(terms, lead, grid.second, d, extra);
        return PuiseuxSeries::from_terms(std::move(terms));
    }

    /// A random series with prescribed sign and valuation (nonzero sign).
    PuiseuxSeries series_with_leading(Sign sign, const Rational& val) {
        if (sign == Sign::Zero) return {};
        Rational mag = abs(nonzero_coeff());
        long long d = uniform(1, cfg_.exponent_denominator_bound);
        Integer common = lcm_of(Integer(static_cast<long>(d)), val.get_den());
        long long dd = common.get_si();
        long long lead = Rational(val * static_cast<long>(dd)).get_num().get_si();
        Rational span = cfg_.exponent_range.hi - cfg_.exponent_range.lo;
        if (span < 1) span = 1;
        long long hi = lead + floor_of(Rational(span * static_cast<long>(dd))).get_si();
        std::vector<PuiseuxSeries::Term> terms;
        terms.push_back({val, sign == Sign::Positive ? mag : Rational(-mag)});
        int extra = static_cast<int>(uniform(0, cfg_.max_terms - 1));
        add_tail(terms, lead, hi, dd, extra);
        return PuiseuxSeries::from_terms(std::move(terms));
    }

    /// A point of K^n; coordinate k is forced into orthant sign sigma[k] when given.
    std::vector<PuiseuxSeries> point(std::size_t n, const std::vector<int>* sigma = nullptr) {
        std::vector<PuiseuxSeries> p;
        p.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (sigma) {
                int s = (*sigma)[k];
                if (s == 0) {
                    p.emplace_back();
                    continue;
                }
                PuiseuxSeries x = series();
                if (to_int(x.sign()) != s) x = -x;
                p.push_back(std::move(x));
                continue;
            }
            if (cfg_.zero_probability > 0.0 && std::bernoulli_distribution(cfg_.zero_probability)(rng_)) {
                p.emplace_back();
                continue;
            }
            p.push_back(series());
        }
        return p;
    }

    Rational coefficient() {
        long long q = uniform(1, cfg_.coeff_denominator_bound);
        auto g = grid_indices(cfg_.coeff_range, q);
        if (g.first > g.second) return cfg_.coeff_range.lo;
        return make_rational(uniform(g.first, g.second), q);
    }

    Rational nonzero_coeff() {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            Rational c = coefficient();
            if (c != 0) return c;
        }
        return cfg_.coeff_range.hi != 0 ? cfg_.coeff_range.hi : cfg_.coeff_range.lo;
    }

private:
    static std::pair<long long, long long> grid_indices(const RationalInterval& r, long long d) {
        const long m = static_cast<long>(d);
        return {ceil_of(Rational(r.lo * m)).get_si(), floor_of(Rational(r.hi * m)).get_si()};
    }

    void add_tail(std::vector<PuiseuxSeries::Term>& terms, long long lead, long long hi, long long d, int extra) {
        for (int i = 0; i < extra && lead < hi; ++i) {
            long long e = uniform(lead + 1, hi);
            bool dup = std::any_of(terms.begin(), terms.end(),
                                   [&](const auto& t) { return t.exp == make_rational(e, d); });
            if (!dup) terms.push_back({make_rational(e, d), nonzero_coeff()});
        }
    }

    SamplerConfig cfg_;
    std::mt19937_64 rng_;
};

/// One draw from a freshly seeded sampler.
inline PuiseuxSeries ps_sample(const SamplerConfig& cfg) {
    PuiseuxSampler sampler(cfg);
    return sampler.series();
}

}  // namespace tropreal
