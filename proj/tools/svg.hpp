// Copyright 2026 The ellex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "ellex/conic.hpp"
#include "ellex/pencil.hpp"
#include "ellex/perimeter.hpp"

namespace ellex::svg {

using Vec2 = Point2<double>;

struct Polyline {
    std::vector<Vec2> pts;
    std::string stroke = "#000000";
    double width = 1.0;
    bool dashed = false;
    bool closed = false;
};

struct Canvas {
    std::vector<Polyline> lines;

    void add(Polyline l) {
        if (l.pts.size() >= 2) lines.push_back(std::move(l));
    }
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace detail

/// Serialises the canvas: viewport auto-fits the drawn geometry with a 5%
/// margin; the only run-dependent-looking line is the version comment.
inline std::string render(const Canvas& canvas, const std::string& version) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& l : canvas.lines)
        for (const auto& p : l.pts) {
            xmin = std::min(xmin, p.x());
            xmax = std::max(xmax, p.x());
            ymin = std::min(ymin, p.y());
            ymax = std::max(ymax, p.y());
        }
    if (!(xmin < xmax)) {
        xmin = 0;
        xmax = 1;
    }
    if (!(ymin < ymax)) {
        ymin = 0;
        ymax = 1;
    }
    const double mx = 0.05 * (xmax - xmin), my = 0.05 * (ymax - ymin);
    xmin -= mx;
    xmax += mx;
    ymin -= my;
    ymax += my;

    const double view_w = 640.0;
    const double scale = view_w / (xmax - xmin);
    const double view_h = (ymax - ymin) * scale;
    const auto map = [&](const Vec2& p) {
        return Vec2((p.x() - xmin) * scale, (ymax - p.y()) * scale);
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<!-- " + version + " -->\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           detail::fmt(view_w) + "\" height=\"" + detail::fmt(view_h) + "\" viewBox=\"0 0 " +
           detail::fmt(view_w) + " " + detail::fmt(view_h) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    for (const auto& l : canvas.lines) {
        out += "<path d=\"";
        for (size_t k = 0; k < l.pts.size(); ++k) {
            const Vec2 v = map(l.pts[k]);
            out += (k == 0 ? "M" : "L") + detail::fmt(v.x()) + " " + detail::fmt(v.y());
        }
        if (l.closed) out += "Z";
        out += "\" fill=\"none\" stroke=\"" + l.stroke + "\" stroke-width=\"" +
               detail::fmt(l.width) + "\"";
        if (l.dashed) out += " stroke-dasharray=\"6 4\"";
        out += "/>\n";
    }
    out += "</svg>\n";
    return out;
}

/// Samples one conic as y-chords over a frame x-range, split into branches
/// wherever the radicand goes negative; points are mapped to Cartesian and
/// clipped to the given box.
inline std::vector<std::vector<Vec2>> sample_conic(const Conic<double>& c, double u_min,
                                                   double u_max, int samples, const Vec2& box_lo,
                                                   const Vec2& box_hi) {
    std::vector<std::vector<Vec2>> branches;
    std::vector<Vec2> up, down;
    const auto flush = [&]() {
        if (up.size() >= 2) branches.push_back(up);
        if (down.size() >= 2) branches.push_back(down);
        up.clear();
        down.clear();
    };
    const auto in_box = [&](const Vec2& p) {
        return p.x() >= box_lo.x() && p.x() <= box_hi.x() && p.y() >= box_lo.y() &&
               p.y() <= box_hi.y();
    };
    for (int k = 0; k <= samples; ++k) {
        const double u = u_min + (u_max - u_min) * k / samples;
        const double qa = c.C;
        const double qb = 2 * (c.B * u + c.E);
        const double qc = c.A * u * u + 2 * c.D * u + c.F;
        double v0, v1;
        if (std::abs(qa) < 1e-12 * std::max({std::abs(qb), std::abs(qc), 1.0})) {
            if (std::abs(qb) < 1e-300) {
                flush();
                continue;
            }
            v0 = v1 = -qc / qb;
        } else {
            const double disc = qb * qb - 4 * qa * qc;
            if (disc < 0) {
                flush();
                continue;
            }
            const double sq = std::sqrt(disc);
            v0 = (-qb - sq) / (2 * qa);
            v1 = (-qb + sq) / (2 * qa);
        }
        const Vec2 p0 = c.frame.to_cartesian(Vec2(u, v0));
        const Vec2 p1 = c.frame.to_cartesian(Vec2(u, v1));
        if (in_box(p0))
            up.push_back(p0);
        else if (up.size() >= 2) {
            branches.push_back(up);
            up.clear();
        } else
            up.clear();
        if (in_box(p1))
            down.push_back(p1);
        else if (down.size() >= 2) {
            branches.push_back(down);
            down.clear();
        } else
            down.clear();
    }
    flush();
    return branches;
}

/// Pencil figure: light strokes for the sampled members, heavy black for the
/// minimal ellipse and the two limiting conics, dots as little crosses for
/// the base points. Members are spaced evenly in the angle parametrisation
/// B = sqrt(AC) cos(psi).
inline std::string plot_pencil(const Quad4<double>& q, int members, const std::string& version) {
    const Pencil4<double> p = build_pencil(q);
    const auto [mincon, minarea] = minimal_area_ellipse(p);
    (void)minarea;
    const EllipseGeometry<double> g = geometric_form(mincon);

    Vec2 lo = q.pts[0], hi = q.pts[0];
    for (const auto& pt : q.pts) {
        lo = lo.cwiseMin(pt);
        hi = hi.cwiseMax(pt);
    }
    for (int k = 0; k < 64; ++k) {
        const Vec2 e = g.point(2 * M_PI * k / 64.0);
        lo = lo.cwiseMin(e);
        hi = hi.cwiseMax(e);
    }
    const Vec2 span = hi - lo;
    lo -= 0.6 * span;
    hi += 0.6 * span;

    // frame x-range covering the box
    double u_min = std::numeric_limits<double>::infinity(), u_max = -u_min;
    for (const double bx : {lo.x(), hi.x()})
        for (const double by : {lo.y(), hi.y()}) {
            const double u = p.frame.to_frame(Vec2(bx, by)).x();
            u_min = std::min(u_min, u);
            u_max = std::max(u_max, u);
        }

    Canvas canvas;
    const double sqac = p.sqrt_ac();
    for (int j = 0; j < members; ++j) {
        const double psi = (j + 0.5) * M_PI / members;
        const double B = sqac * std::cos(psi);
        for (auto& br : sample_conic(member(p, B), u_min, u_max, 400, lo, hi))
            canvas.add({std::move(br), "#b0b0b0", 0.8, false, false});
    }
    for (const double B : {-sqac, sqac})
        for (auto& br : sample_conic(member(p, B), u_min, u_max, 400, lo, hi))
            canvas.add({std::move(br), "#000000", 2.0, false, false});

    Polyline minimal;
    for (int k = 0; k <= 256; ++k) minimal.pts.push_back(g.point(2 * M_PI * k / 256.0));
    minimal.stroke = "#000000";
    minimal.width = 2.0;
    minimal.closed = true;
    canvas.add(std::move(minimal));

    const double tick = 0.02 * span.norm();
    for (const auto& pt : q.pts) {
        canvas.add({{pt - Vec2(tick, 0), pt + Vec2(tick, 0)}, "#000000", 1.5, false, false});
        canvas.add({{pt - Vec2(0, tick), pt + Vec2(0, tick)}, "#000000", 1.5, false, false});
    }
    return render(canvas, version);
}

/// Graph of the pencil's area invariant against B, poles marked by dashed
/// vertical asymptotes.
inline std::string plot_area_curve(const Quad4<double>& q, const std::string& version) {
    const Pencil4<double> p = build_pencil(q);
    const double sqac = p.sqrt_ac();
    const auto rep = euler_cubic(p);
    double inside_min = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; ++k)
        if (rep.kinds[static_cast<size_t>(k)] == PencilRootKind::EllipticMinimum)
            inside_min = pencil_area_curve(p, rep.roots[k]);
    const double y_lim = 6.0 * std::abs(inside_min);
    const double b_lim = 2.5 * sqac;

    Canvas canvas;
    Polyline cur;
    for (int k = 0; k <= 1600; ++k) {
        const double B = -b_lim + 2 * b_lim * k / 1600.0;
        const double dn = p.A * p.C - B * B;
        double v = std::numeric_limits<double>::quiet_NaN();
        if (std::abs(dn) > 1e-9 * sqac * sqac) v = pencil_area_curve(p, B);
        if (std::isfinite(v) && std::abs(v) <= y_lim) {
            cur.pts.emplace_back(B, v);
        } else if (cur.pts.size() >= 2) {
            cur.stroke = "#000000";
            cur.width = 1.5;
            canvas.add(std::move(cur));
            cur = Polyline{};
        } else {
            cur.pts.clear();
        }
    }
    cur.stroke = "#000000";
    cur.width = 1.5;
    canvas.add(std::move(cur));

    for (const double B : {-sqac, sqac})
        canvas.add({{Vec2(B, -y_lim), Vec2(B, y_lim)}, "#808080", 1.0, true, false});
    canvas.add({{Vec2(-b_lim, 0), Vec2(b_lim, 0)}, "#404040", 1.0, false, false});
    return render(canvas, version);
}

/// The reverse-lookup curve n(i) with the three closed-form approximations
/// overlaid on the unit square.
inline std::string plot_in_curves(int order, const std::string& version) {
    Canvas canvas;
    canvas.add({{Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1), Vec2(0, 0)},
                "#404040",
                1.0,
                false,
                false});

    Polyline exact;
    for (int k = 1; k <= 249; ++k) {
        const double n = k / 250.0;
        exact.pts.emplace_back(i_of_n(n, order), n);
    }
    exact.stroke = "#000000";
    exact.width = 2.0;
    canvas.add(std::move(exact));

    const ApproxScheme schemes[3] = {ApproxScheme::Linear, ApproxScheme::Cubic,
                                     ApproxScheme::Compromise};
    const char* colors[3] = {"#c04040", "#4040c0", "#40a040"};
    for (int s = 0; s < 3; ++s) {
        Polyline ap;
        for (int k = 0; k <= 250; ++k) {
            const double i = k / 250.0;
            const double n = approx_n_of_i(i, schemes[s]);
            if (n >= 0.0 && n <= 1.0) ap.pts.emplace_back(i, n);
        }
        ap.stroke = colors[s];
        ap.width = 1.2;
        canvas.add(std::move(ap));
    }
    return render(canvas, version);
}

}  // namespace ellex::svg
