#pragma once

#include <string>
#include <vector>

#include "hgr/layout.hpp"

namespace hgr {

struct RenderOptions {
    bool labels = true;
    int decimals = 3;  // fixed decimal places for coordinates
};

namespace detail {

struct SvgFrame {
    const RectLayout& l;
    const RenderOptions& o;
    Rational margin;

    std::string fx(const Rational& x) const {
        return (x - l.rect.x_min + margin).to_decimal_string(o.decimals);
    }
    // SVG y axis points down; flip against the rectangle top.
    std::string fy(const Rational& y) const {
        return (l.rect.y_max - y + margin).to_decimal_string(o.decimals);
    }
    std::string pt(const Vec2& p) const { return fx(p.x) + "," + fy(p.y); }
};

}  // namespace detail

// Deterministic SVG rendering of a parsed layout: rectangle, circle copies
// with orientation arrows, attachment ticks and labels, beta polylines, the
// matching highlighted. Byte-identical output for identical input and options.
inline std::string render_svg(const RectLayout& l, const RenderOptions& o = {}) {
    detail::SvgFrame f{l, o, Rational(1)};
    Rational w = l.rect.x_max - l.rect.x_min + Rational(2);
    Rational h = l.rect.y_max - l.rect.y_min + Rational(2);

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + w.to_decimal_string(o.decimals) +
         " " + h.to_decimal_string(o.decimals) + "\" font-size=\"1.2\">\n";
    s += "<rect x=\"" + f.fx(l.rect.x_min) + "\" y=\"" + f.fy(l.rect.y_max) + "\" width=\"" +
         (l.rect.x_max - l.rect.x_min).to_decimal_string(o.decimals) + "\" height=\"" +
         (l.rect.y_max - l.rect.y_min).to_decimal_string(o.decimals) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.15\"/>\n";

    for (std::size_t i = 0; i < l.alpha.size(); ++i) {
        for (Copy copy : {Copy::Prime, Copy::Second}) {
            const Circle& c = l.circle(static_cast<int>(i) + 1, copy);
            s += "<circle cx=\"" + f.fx(c.center.x) + "\" cy=\"" + f.fy(c.center.y) + "\" r=\"" +
                 c.radius.to_decimal_string(o.decimals) +
                 "\" fill=\"none\" stroke=\"#c02020\" stroke-width=\"0.12\"/>\n";
            // Orientation arrow at the circle top: ccw points -x, cw points +x.
            Vec2 top = c.center + Vec2(Rational(0), c.radius);
            Rational dx = copy == Copy::Prime ? Rational(-1, 2) : Rational(1, 2);
            Vec2 tip = top + Vec2(dx, Rational(0));
            Vec2 back1 = tip + Vec2(-dx, Rational(1, 4));
            Vec2 back2 = tip + Vec2(-dx, Rational(-1, 4));
            s += "<path d=\"M " + f.pt(back1) + " L " + f.pt(tip) + " L " + f.pt(back2) +
                 "\" fill=\"none\" stroke=\"#c02020\" stroke-width=\"0.12\"/>\n";
            if (o.labels)
                s += "<text x=\"" + f.fx(c.center.x) + "\" y=\"" + f.fy(c.center.y) +
                     "\" fill=\"#c02020\" text-anchor=\"middle\">a" + std::to_string(i + 1) +
                     (copy == Copy::Prime ? "'" : "''") + "</text>\n";
        }
    }

    for (const BetaCurve& b : l.beta) {
        for (const BetaArc& arc : b.arcs) {
            std::string pts;
            for (const Vec2& p : l.arc_points(arc)) {
                if (!pts.empty()) pts += " ";
                pts += f.pt(p);
            }
            s += "<polyline points=\"" + pts +
                 "\" fill=\"none\" stroke=\"#2040c0\" stroke-width=\"0.12\"/>\n";
        }
    }

    for (std::size_t k = 0; k < l.crossings.size(); ++k) {
        bool matched = l.in_matching(static_cast<int>(k));
        for (Copy copy : {Copy::Prime, Copy::Second}) {
            const Vec2& p = l.attachment(static_cast<int>(k), copy);
            Rational r = matched ? Rational(3, 10) : Rational(1, 5);
            std::string x0 = f.fx(p.x - r), x1 = f.fx(p.x + r);
            std::string y0 = f.fy(p.y - r), y1 = f.fy(p.y + r);
            s += "<path d=\"M " + x0 + " " + f.fy(p.y) + " L " + x1 + " " + f.fy(p.y) + " M " +
                 f.fx(p.x) + " " + y0 + " L " + f.fx(p.x) + " " + y1 + "\" stroke=\"" +
                 (matched ? "#108010" : "#404040") + "\" stroke-width=\"" +
                 (matched ? "0.2" : "0.1") + "\"" + (matched ? " class=\"matching\"" : "") +
                 "/>\n";
            if (o.labels)
                s += "<text x=\"" + f.fx(p.x + Rational(1, 2)) + "\" y=\"" +
                     f.fy(p.y + Rational(1, 2)) + "\" fill=\"#404040\">" + l.crossings[k].id +
                     "</text>\n";
        }
    }

    s += "</svg>\n";
    return s;
}

}  // namespace hgr
