#pragma once

/**
 * @file svg.hpp
 * @brief SVG pictures of tropical regions in multiplicative coordinates.
 *
 * A pixel center (u, v) is mapped to valuation coordinates (-log|u|, -log|v|)
 * in floating point; the double is converted exactly to a rational and the
 * exact region decides the pixel. Pieces of lower dimension (segments,
 * isolated points, pieces on the axes) have no area and are drawn on top.
 */

#include "tropreal/semialg.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace tropreal {

struct RenderConfig {
    int grid = 240;
    Rational x0 = -4, x1 = 4, y0 = -4, y1 = 4;
    std::string palette = "default";
    double log_base = 2.718281828459045;  // e; base 2 gives the same regions for suitably rescaled data
    int size_px = 480;
    std::string title;

    void validate() const {
        if (grid < 2) throw Error("grid must be at least 2");
        if (!(x0 < x1) || !(y0 < y1)) throw Error("window must be nondegenerate");
        if (!(log_base > 1.0)) throw Error("log base must exceed 1");
    }
};

/// "x0,x1,y0,y1" with rational entries.
inline void parse_window(std::string_view text, RenderConfig& cfg) {
    std::vector<Rational> v;
    std::string cur;
    for (char c : std::string(text) + ",") {
        if (c == ',') {
            v.push_back(parse_rational(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (v.size() != 4) throw ParseError("window needs four numbers x0,x1,y0,y1");
    cfg.x0 = v[0];
    cfg.x1 = v[1];
    cfg.y0 = v[2];
    cfg.y1 = v[3];
    cfg.validate();
}

struct RenderStats {
    std::size_t pixels = 0;
    std::size_t inside = 0;
    std::size_t disagreements = 0;  // exact region vs pointwise evaluation
    std::size_t overlays = 0;
};

/// Region of an orthant, and the pointwise predicate it must agree with.
using RegionFn = std::function<PolyUnion(const Orthant&)>;
using PointFn = std::function<bool(const TropPoint&)>;

namespace detail {

struct Palette {
    const char* fill;
    const char* overlay;
    const char* axis;
    const char* background;
};

inline Palette palette(const std::string& name) {
    if (name == "mono") return {"#9a9a9a", "#000000", "#555555", "#ffffff"};
    if (name == "default") return {"#8fb3de", "#c0392b", "#7f7f7f", "#ffffff"};
    throw Error("unknown palette '" + name + "'");
}

inline std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

/// Interval of t with p + t*d inside P (P one-dimensional along d).
inline std::optional<std::pair<Rational, Rational>> line_range(const Polyhedron& P, const RationalPoint& p,
                                                               const RationalPoint& d) {
    std::optional<Rational> lo, hi;
    for (const auto& c : P.constraints()) {
        Rational ad = 0, ap = c.form.offset;
        for (std::size_t k = 0; k < d.size(); ++k) {
            ad += make_rational(c.form.normal[k]) * d[k];
            ap += make_rational(c.form.normal[k]) * p[k];
        }
        if (ad == 0) continue;
        Rational t = -ap / ad;
        if (ad > 0) {
            if (!hi || t < *hi) hi = t;
        } else {
            if (!lo || t > *lo) lo = t;
        }
    }
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    return std::make_pair(*lo, *hi);
}

/// A nonzero vector orthogonal to the implicit equalities of a one-dimensional piece.
inline RationalPoint line_direction(const Polyhedron& P) {
    std::size_t n = P.dim();
    if (n == 1) return {Rational(1)};
    for (std::size_t i : implicit_equalities(P)) {
        const auto& a = P.constraints()[i].form.normal;
        return {make_rational(-a[1]), make_rational(a[0])};
    }
    return {Rational(1), Rational(0)};
}

}  // namespace detail

class SvgCanvas {
public:
    explicit SvgCanvas(const RenderConfig& cfg) : cfg_(cfg) {
        cfg_.validate();
        ux0_ = to_double(cfg_.x0);
        ux1_ = to_double(cfg_.x1);
        vy0_ = to_double(cfg_.y0);
        vy1_ = to_double(cfg_.y1);
    }

    double px(double u) const { return (u - ux0_) / (ux1_ - ux0_) * cfg_.size_px; }
    double py(double v) const { return (vy1_ - v) / (vy1_ - vy0_) * cfg_.size_px; }

    double u_center(int i) const { return ux0_ + (i + 0.5) * (ux1_ - ux0_) / cfg_.grid; }
    double v_center(int j) const { return vy1_ - (j + 0.5) * (vy1_ - vy0_) / cfg_.grid; }

    double log_abs(double u) const { return -std::log(std::fabs(u)) / std::log(cfg_.log_base); }
    double from_valuation(double V) const { return std::pow(cfg_.log_base, -V); }

    /// Valuation bounds covering the window, for clipping unbounded pieces.
    std::pair<double, double> valuation_box(bool vertical) const {
        double m = vertical ? std::max(std::fabs(vy0_), std::fabs(vy1_)) : std::max(std::fabs(ux0_), std::fabs(ux1_));
        double lo = log_abs(m);
        return {lo, lo + std::log(2000.0) / std::log(cfg_.log_base)};
    }

    std::string render(const RegionFn& region, const PointFn& exact, RenderStats& stats) {
        auto pal = detail::palette(cfg_.palette);
        std::map<Orthant, PolyUnion> cache;
        auto region_of = [&](const Orthant& o) -> const PolyUnion& {
            auto it = cache.find(o);
            if (it == cache.end()) it = cache.emplace(o, region(o)).first;
            return it->second;
        };
        std::ostringstream body;
        double cell_w = static_cast<double>(cfg_.size_px) / cfg_.grid;
        for (int j = 0; j < cfg_.grid; ++j) {
            double v = v_center(j);
            int run_start = -1;
            for (int i = 0; i <= cfg_.grid; ++i) {
                bool in = false;
                if (i < cfg_.grid) {
                    double u = u_center(i);
                    Orthant o{{u > 0 ? 1 : (u < 0 ? -1 : 0), v > 0 ? 1 : (v < 0 ? -1 : 0)}};
                    RationalPoint V;
                    if (u != 0) V.push_back(from_double(log_abs(u)));
                    if (v != 0) V.push_back(from_double(log_abs(v)));
                    in = region_of(o).contains(V);
                    bool check = exact(embed(o, V));
                    ++stats.pixels;
                    if (in) ++stats.inside;
                    if (in != check) ++stats.disagreements;
                }
                if (in && run_start < 0) run_start = i;
                if (!in && run_start >= 0) {
                    body << "<rect x=\"" << detail::fmt(run_start * cell_w) << "\" y=\"" << detail::fmt(j * cell_w)
                         << "\" width=\"" << detail::fmt((i - run_start) * cell_w) << "\" height=\""
                         << detail::fmt(cell_w) << "\"/>\n";
                    run_start = -1;
                }
            }
        }
        std::ostringstream overlay;
        for (const auto& o : Orthant::all(2)) {
            const PolyUnion& U = region_of(o);
            for (const auto& P : U.pieces) draw_low_dimensional(o, P, overlay, stats);
        }
        std::ostringstream svg;
        svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << cfg_.size_px << "\" height=\""
            << cfg_.size_px << "\" viewBox=\"0 0 " << cfg_.size_px << " " << cfg_.size_px << "\">\n";
        if (!cfg_.title.empty()) svg << "<title>" << cfg_.title << "</title>\n";
        svg << "<rect width=\"100%\" height=\"100%\" fill=\"" << pal.background << "\"/>\n";
        svg << "<g fill=\"" << pal.fill << "\" stroke=\"none\">\n" << body.str() << "</g>\n";
        svg << "<g stroke=\"" << pal.axis << "\" stroke-width=\"1\">\n";
        if (ux0_ < 0 && ux1_ > 0)
            svg << "<line x1=\"" << detail::fmt(px(0)) << "\" y1=\"0\" x2=\"" << detail::fmt(px(0)) << "\" y2=\""
                << cfg_.size_px << "\"/>\n";
        if (vy0_ < 0 && vy1_ > 0)
            svg << "<line x1=\"0\" y1=\"" << detail::fmt(py(0)) << "\" x2=\"" << cfg_.size_px << "\" y2=\""
                << detail::fmt(py(0)) << "\"/>\n";
        svg << "</g>\n";
        svg << "<g stroke=\"" << pal.overlay << "\" fill=\"" << pal.overlay << "\" stroke-width=\"3\">\n"
            << overlay.str() << "</g>\n</svg>\n";
        return svg.str();
    }

private:
    /// Multiplicative coordinates of an orthant point given by valuations on its support.
    std::pair<double, double> to_plane(const Orthant& o, const std::vector<double>& V) const {
        double c[2] = {0, 0};
        std::size_t j = 0;
        for (std::size_t k = 0; k < 2; ++k)
            if (o.sigma[k] != 0) c[k] = o.sigma[k] * from_valuation(V[j++]);
        return {c[0], c[1]};
    }

    void draw_low_dimensional(const Orthant& o, const Polyhedron& P, std::ostringstream& out, RenderStats& stats) {
        std::size_t k = o.support().size();
        int m = poly_dimension(P);
        if (m < 0 || (k == 2 && m == 2)) return;
        if (m == 0) {
            auto p = poly_point(P);
            std::vector<double> V;
            for (const auto& x : *p) V.push_back(to_double(x));
            auto [u, v] = to_plane(o, V);
            out << "<circle cx=\"" << detail::fmt(px(u)) << "\" cy=\"" << detail::fmt(py(v)) << "\" r=\"4\"/>\n";
            ++stats.overlays;
            return;
        }
        if (m != 1) return;
        auto p = relative_interior_point(P);
        RationalPoint d = detail::line_direction(P);
        // clip to the window's valuation box
        Polyhedron clipped = P;
        auto sup = o.support();
        for (std::size_t j = 0; j < k; ++j) {
            auto [lo, hi] = valuation_box(sup[j] == 1);
            AffineForm f{std::vector<long long>(k, 0), from_double(lo)};
            f.normal[j] = -1;
            clipped.add(f, false);
            AffineForm g{std::vector<long long>(k, 0), -from_double(hi)};
            g.normal[j] = 1;
            clipped.add(g, false);
        }
        auto range = detail::line_range(clipped, *p, d);
        if (!range) return;
        const int steps = 96;
        std::ostringstream pts;
        for (int s = 0; s <= steps; ++s) {
            Rational t = range->first + (range->second - range->first) * make_rational(s, steps);
            std::vector<double> V;
            for (std::size_t j = 0; j < k; ++j) V.push_back(to_double(Rational((*p)[j] + t * d[j])));
            auto [u, v] = to_plane(o, V);
            pts << detail::fmt(px(u)) << "," << detail::fmt(py(v)) << " ";
        }
        out << "<polyline fill=\"none\" points=\"" << pts.str() << "\"/>\n";
        ++stats.overlays;
    }

    RenderConfig cfg_;
    double ux0_, ux1_, vy0_, vy1_;
};

/// Picture of {F rel 0}.
inline std::string render_trop_region(const TropPoly& F, Relation rel, const RenderConfig& cfg, RenderStats& stats) {
    if (F.nvars() != 2) throw DimensionMismatch("SVG output needs two variables");
    SvgCanvas canvas(cfg);
    return canvas.render([&](const Orthant& o) { return trop_region(F, o, rel); },
                         [&](const TropPoint& z) { return trop_sat(F, z, rel); }, stats);
}

/// Picture of the outer region of S.
inline std::string render_outer(const SADescription& S, const RenderConfig& cfg, RenderStats& stats,
                                bool bounded = false) {
    if (S.nvars != 2) throw DimensionMismatch("SVG output needs two variables");
    SvgCanvas canvas(cfg);
    auto exact = [&](const TropPoint& z) {
        bool any = false;
        for (const auto& conj : S.disjuncts) {
            bool all = true;
            for (const auto& c : conj) {
                TropPoly F = trop_r(c.poly);
                bool ok = false;
                for (Relation r : relaxed(c.rel)) ok = ok || trop_sat(F, z, r);
                if (!ok) {
                    all = false;
                    break;
                }
            }
            any = any || all;
        }
        if (bounded)
            for (const auto& x : z)
                if (!x.is_zero() && x.val().value() < 0) return false;
        return any;
    };
    return canvas.render(
        [&](const Orthant& o) {
            try {
                return bounded ? bounded_outer(S, o) : sa_outer(S, o);
            } catch (const NegativeExponentAtZero&) {
                return PolyUnion::empty(o.support().size());
            }
        },
        [&](const TropPoint& z) {
            try {
                return exact(z);
            } catch (const NegativeExponentAtZero&) {
                return false;
            }
        },
        stats);
}

}  // namespace tropreal
