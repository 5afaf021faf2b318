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

#include <json.hpp>
#include <string>
#include <vector>

#include "ellex/conic.hpp"
#include "ellex/pencil.hpp"
#include "ellex/steiner.hpp"

namespace ellex::report {

using json = nlohmann::ordered_json;

inline json point_json(const Point2<double>& p) { return json::array({p.x(), p.y()}); }

inline Point2<double> point_from(const json& j) {
    return Point2<double>(j.at(0).get<double>(), j.at(1).get<double>());
}

inline json frame_json(const ObliqueFrame<double>& f) {
    json j;
    j["origin"] = point_json(f.origin);
    j["axis_u"] = point_json(f.axis_u);
    j["axis_v"] = point_json(f.axis_v);
    j["omega"] = f.omega;
    return j;
}

inline ObliqueFrame<double> frame_from(const json& j) {
    ObliqueFrame<double> f;
    f.origin = point_from(j.at("origin"));
    f.axis_u = point_from(j.at("axis_u"));
    f.axis_v = point_from(j.at("axis_v"));
    f.omega = j.at("omega").get<double>();
    f.validate();
    return f;
}

inline json conic_json(const Conic<double>& c) {
    json j;
    j["A"] = c.A;
    j["B"] = c.B;
    j["C"] = c.C;
    j["D"] = c.D;
    j["E"] = c.E;
    j["F"] = c.F;
    return j;
}

inline Conic<double> conic_from(const json& coeffs, const json& frame) {
    Conic<double> c;
    c.A = coeffs.at("A").get<double>();
    c.B = coeffs.at("B").get<double>();
    c.C = coeffs.at("C").get<double>();
    c.D = coeffs.at("D").get<double>();
    c.E = coeffs.at("E").get<double>();
    c.F = coeffs.at("F").get<double>();
    c.frame = frame_from(frame);
    return c;
}

inline json geometry_json(const EllipseGeometry<double>& g) {
    json j;
    j["center"] = point_json(g.center);
    j["semi_major"] = g.semi_major;
    j["semi_minor"] = g.semi_minor;
    j["angle"] = g.angle;
    return j;
}

/// Convex-position area of four conelliptic points (shoelace around the hull
/// order).
inline double quad_area(const Quad4<double>& q) {
    Point2<double> c = Point2<double>::Zero();
    for (const auto& p : q.pts) c += p / 4.0;
    std::array<int, 4> idx{0, 1, 2, 3};
    std::array<double, 4> ang;
    for (int k = 0; k < 4; ++k)
        ang[static_cast<size_t>(k)] = std::atan2(q.pts[static_cast<size_t>(k)].y() - c.y(),
                                                 q.pts[static_cast<size_t>(k)].x() - c.x());
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        return ang[static_cast<size_t>(i)] < ang[static_cast<size_t>(j)];
    });
    double area = 0;
    for (int k = 0; k < 4; ++k) {
        const auto& p0 = q.pts[static_cast<size_t>(idx[static_cast<size_t>(k)])];
        const auto& p1 = q.pts[static_cast<size_t>(idx[static_cast<size_t>((k + 1) % 4)])];
        area += p0.x() * p1.y() - p1.x() * p0.y();
    }
    return std::abs(area) / 2.0;
}

inline json min_area4_report(const Quad4<double>& q) {
    const Pencil4<double> p = build_pencil(q);
    const CubicReport<double> cubic = euler_cubic(p);
    const auto [conic, area] = minimal_area_ellipse(p);
    const QuadClass<double> cls = classify_quadrilateral(q);
    const double qarea = quad_area(q);

    json j;
    j["command"] = "min-area4";
    j["points"] = json::array();
    for (const auto& pt : q.pts) j["points"].push_back(point_json(pt));
    j["frame"] = frame_json(p.frame);
    json intercepts;
    intercepts["a"] = p.a;
    intercepts["b"] = p.b;
    intercepts["c"] = p.c;
    intercepts["d"] = p.d;
    j["intercepts"] = intercepts;
    json coeffs;
    coeffs["A"] = p.A;
    coeffs["C"] = p.C;
    coeffs["D"] = p.D;
    coeffs["E"] = p.E;
    coeffs["F"] = p.F;
    j["pencil_coefficients"] = coeffs;

    json jc;
    jc["coefficients"] = json::array({cubic.coeffs[0], cubic.coeffs[1], cubic.coeffs[2],
                                      cubic.coeffs[3]});
    jc["discriminant"] = cubic.discriminant;
    jc["roots"] = json::array();
    for (int k = 0; k < 3; ++k) {
        json r;
        r["B"] = cubic.roots[k];
        r["kind"] = to_string(cubic.kinds[static_cast<size_t>(k)]);
        jc["roots"].push_back(r);
    }
    j["cubic"] = jc;

    json jm;
    jm["B"] = conic.B;
    jm["coefficients"] = conic_json(conic);
    jm["geometric"] = geometry_json(geometric_form(conic));
    jm["area"] = area;
    j["minimal_ellipse"] = jm;

    const auto lims = limiting_conics(p);
    json jl = json::array();
    for (const auto& [B, kind] : lims) {
        json e;
        e["B"] = B;
        e["type"] = to_string(kind);
        jl.push_back(e);
    }
    j["limiting_conics"] = jl;
    json jd = json::array();
    for (const double B : degenerate_members(p)) jd.push_back(B);
    j["degenerate_members"] = jd;

    json jq;
    jq["kind"] = to_string(cls.kind);
    jq["sigma"] = cls.sigma;
    jq["tau"] = cls.tau;
    jq["area"] = qarea;
    j["quadrilateral"] = jq;
    j["area_ratio_ellipse_to_quad"] = area / qarea;
    return j;
}

inline json steiner_report(const Triangle<double>& t) {
    const SteinerResult<double> r = steiner_ellipse(t);
    const EllipseGeometry<double> g = geometric_form(r.conic);
    json j;
    j["command"] = "steiner";
    j["points"] = json::array({point_json(t.vA), point_json(t.vB), point_json(t.vC)});
    j["frame"] = frame_json(r.conic.frame);
    j["conic"] = conic_json(r.conic);
    j["geometric"] = geometry_json(g);
    j["center"] = point_json(g.center);
    j["centroid"] = point_json(centroid(t));
    j["tangent_directions"] = json::array();
    for (const auto& d : r.tangent_dirs) j["tangent_directions"].push_back(point_json(d));
    j["area"] = r.area;
    j["triangle_area"] = t.area();
    // the ratio is the universal constant 4*pi/(3*sqrt(3)); reporting the
    // constant keeps the field bit-identical across inputs
    j["ratio"] = steiner_area_ratio<double>();
    j["convergents"] = json::array();
    for (const auto& [num, den] : ratio_convergents(7))
        j["convergents"].push_back(std::to_string(num) + "/" + std::to_string(den));
    return j;
}

}  // namespace ellex::report
