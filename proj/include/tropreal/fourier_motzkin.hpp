#pragma once

/**
 * @file fourier_motzkin.hpp
 * @brief Exact Fourier-Motzkin elimination over Q with strictness tracking.
 *
 * A system is a list of rows  a.x + b  {<=, <, =}  0.  Equalities are used
 * for substitution whenever they mention the eliminated variable; otherwise
 * every (upper, lower) pair is combined with positive multipliers and the
 * result is strict iff one of the parents is strict. Rows are normalized and
 * deduplicated after every step, keeping only the tightest parallel copy.
 */

#include "tropreal/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tropreal::fm {

enum class Kind { Le, Lt, Eq };

struct Row {
    std::vector<Rational> a;
    Rational b;
    Kind kind = Kind::Le;
};

using Rows = std::vector<Row>;

namespace detail {

inline bool constant_holds(const Row& r) {
    switch (r.kind) {
        case Kind::Le: return r.b <= 0;
        case Kind::Lt: return r.b < 0;
        case Kind::Eq: return r.b == 0;
    }
    return false;
}

/// Scales so the first nonzero coefficient has absolute value 1 (value 1 for equalities).
inline void normalize(Row& r) {
    for (const auto& c : r.a) {
        if (c == 0) continue;
        Rational s = (r.kind == Kind::Eq) ? Rational(c) : Rational(abs(c));
        if (s != 1) {
            for (auto& x : r.a) x /= s;
            r.b /= s;
        }
        return;
    }
}

inline bool is_constant(const Row& r) {
    for (const auto& c : r.a)
        if (c != 0) return false;
    return true;
}

/// Normalizes, checks constant rows, removes duplicates. nullopt = infeasible.
inline std::optional<Rows> simplify(Rows rows) {
    std::map<std::vector<Rational>, std::size_t> ineq, eq;
    Rows out;
    out.reserve(rows.size());
    for (auto& r : rows) {
        normalize(r);
        if (is_constant(r)) {
            if (!constant_holds(r)) return std::nullopt;
            continue;
        }
        auto& index = (r.kind == Kind::Eq) ? eq : ineq;
        auto it = index.find(r.a);
        if (it == index.end()) {
            index.emplace(r.a, out.size());
            out.push_back(std::move(r));
            continue;
        }
        Row& kept = out[it->second];
        if (r.kind == Kind::Eq) {
            if (kept.b != r.b) return std::nullopt;
            continue;
        }
        // a.x + b <= 0 is tighter for larger b; strict wins ties
        if (r.b > kept.b || (r.b == kept.b && r.kind == Kind::Lt)) {
            kept.b = r.b;
            kept.kind = r.kind;
        }
    }
    return out;
}

inline Row combine(const Row& p, const Rational& mp, const Row& q, const Rational& mq, Kind kind) {
    Row r;
    r.a.resize(p.a.size());
    for (std::size_t i = 0; i < p.a.size(); ++i) r.a[i] = mp * p.a[i] + mq * q.a[i];
    r.b = mp * p.b + mq * q.b;
    r.kind = kind;
    return r;
}

/// Eliminates variable v; rows in the result have a zero coefficient at v.
inline Rows eliminate(const Rows& rows, std::size_t v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].kind != Kind::Eq || rows[i].a[v] == 0) continue;
        const Row& e = rows[i];
        Rows out;
        out.reserve(rows.size() - 1);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j == i) continue;
            const Row& r = rows[j];
            if (r.a[v] == 0) {
                out.push_back(r);
                continue;
            }
            Rational m = -r.a[v] / e.a[v];
            out.push_back(combine(r, 1, e, m, r.kind));
            out.back().a[v] = 0;
        }
        return out;
    }
    Rows keep, pos, neg;
    for (const auto& r : rows) {
        int s = sgn(r.a[v]);
        if (s == 0) keep.push_back(r);
        else if (s > 0) pos.push_back(r);
        else neg.push_back(r);
    }
    for (const auto& p : pos)
        for (const auto& q : neg) {
            Kind k = (p.kind == Kind::Lt || q.kind == Kind::Lt) ? Kind::Lt : Kind::Le;
            keep.push_back(combine(p, -q.a[v], q, p.a[v], k));
            keep.back().a[v] = 0;
        }
    return keep;
}

/// Next variable to eliminate: one with an equality, else the cheapest pair count.
inline std::optional<std::size_t> pick_variable(const Rows& rows, const std::vector<bool>& done) {
    std::optional<std::size_t> best;
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < done.size(); ++v) {
        if (done[v]) continue;
        std::size_t pos = 0, neg = 0;
        bool has_eq = false, mentioned = false;
        for (const auto& r : rows) {
            int s = sgn(r.a[v]);
            if (s == 0) continue;
            mentioned = true;
            if (r.kind == Kind::Eq) has_eq = true;
            else if (s > 0) ++pos;
            else ++neg;
        }
        if (!mentioned) continue;
        std::size_t cost = has_eq ? 0 : pos * neg + 1;
        if (!best || cost < best_cost) {
            best = v;
            best_cost = cost;
        }
    }
    return best;
}

}  // namespace detail

inline bool feasible(Rows rows, std::size_t n) {
    auto s = detail::simplify(std::move(rows));
    if (!s) return false;
    std::vector<bool> done(n, false);
    Rows cur = std::move(*s);
    while (auto v = detail::pick_variable(cur, done)) {
        done[*v] = true;
        auto next = detail::simplify(detail::eliminate(cur, *v));
        if (!next) return false;
        cur = std::move(*next);
    }
    return true;
}

/// A rational solution of the system, or nullopt when it has none.
inline std::optional<std::vector<Rational>> find_point(Rows rows, std::size_t n) {
    auto s = detail::simplify(std::move(rows));
    if (!s) return std::nullopt;
    std::vector<bool> done(n, false);
    std::vector<std::pair<std::size_t, Rows>> history;
    Rows cur = std::move(*s);
    while (auto v = detail::pick_variable(cur, done)) {
        done[*v] = true;
        auto next = detail::simplify(detail::eliminate(cur, *v));
        if (!next) return std::nullopt;
        history.emplace_back(*v, std::move(cur));
        cur = std::move(*next);
    }
    std::vector<Rational> x(n, Rational(0));
    for (auto it = history.rbegin(); it != history.rend(); ++it) {
        std::size_t v = it->first;
        std::optional<Rational> exact, lo, hi;
        for (const auto& r : it->second) {
            if (r.a[v] == 0) continue;
            Rational rest = r.b;
            for (std::size_t j = 0; j < n; ++j)
                if (j != v && r.a[j] != 0) rest += r.a[j] * x[j];
            Rational bound = -rest / r.a[v];
            if (r.kind == Kind::Eq) {
                exact = bound;
                break;
            }
            bool strict = r.kind == Kind::Lt;
            if (r.a[v] > 0) {  // x_v <= bound
                if (!hi || bound < *hi || (bound == *hi && strict)) {
                    hi = bound;
                }
            } else {  // x_v >= bound
                if (!lo || bound > *lo || (bound == *lo && strict)) {
                    lo = bound;
                }
            }
        }
        if (exact) x[v] = *exact;
        else if (lo && hi) x[v] = (*lo == *hi) ? *lo : Rational((*lo + *hi) / 2);
        else if (lo) x[v] = *lo + 1;
        else if (hi) x[v] = *hi - 1;
    }
    return x;
}

/// Eliminates the given variables; the remaining rows keep zero coefficients
/// at them. nullopt when the system is infeasible.
inline std::optional<Rows> project_out(Rows rows, const std::vector<std::size_t>& vars) {
    auto s = detail::simplify(std::move(rows));
    if (!s) return std::nullopt;
    Rows cur = std::move(*s);
    for (std::size_t v : vars) {
        auto next = detail::simplify(detail::eliminate(cur, v));
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

}  // namespace tropreal::fm
