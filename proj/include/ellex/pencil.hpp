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

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ellex/conic.hpp"
#include "ellex/cubic.hpp"
#include "ellex/errors.hpp"

namespace ellex {

/// Four points in Cartesian reference coordinates.
template <class S>
struct Quad4 {
    std::array<Point2<S>, 4> pts;
};

namespace detail {

template <class S>
S cross2(const Point2<S>& u, const Point2<S>& v) {
    return u.x() * v.y() - u.y() * v.x();
}

template <class S>
bool point_in_closed_triangle(const Point2<S>& p, const Point2<S>& a, const Point2<S>& b,
                              const Point2<S>& c, S tol) {
    const S s1 = cross2<S>(b - a, p - a);
    const S s2 = cross2<S>(c - b, p - b);
    const S s3 = cross2<S>(a - c, p - c);
    const bool all_nonneg = s1 >= -tol && s2 >= -tol && s3 >= -tol;
    const bool all_nonpos = s1 <= tol && s2 <= tol && s3 <= tol;
    return all_nonneg || all_nonpos;
}

}  // namespace detail

/// True iff an ellipse passes through the four points: no point lies in the
/// closed convex hull of the other three and no three are collinear.
template <class S>
bool conelliptic_check(const Quad4<S>& q) {
    S scale = S(0);
    for (const auto& p : q.pts) scale = std::max(scale, p.template lpNorm<Eigen::Infinity>());
    scale = std::max(scale, S(1));
    const S tol2 = S(1e-12) * scale * scale;

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if ((q.pts[i] - q.pts[j]).template lpNorm<Eigen::Infinity>() <= S(1e-14) * scale)
                throw DuplicatePoints("quadrilateral has coincident points");

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (std::abs(detail::cross2<S>(q.pts[j] - q.pts[i], q.pts[k] - q.pts[i])) <= tol2)
                    return false;

    for (int i = 0; i < 4; ++i) {
        int o[3], m = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) o[m++] = j;
        if (detail::point_in_closed_triangle(q.pts[i], q.pts[o[0]], q.pts[o[1]], q.pts[o[2]],
                                             tol2))
            return false;
    }
    return true;
}

/// The pencil of conics through four conelliptic points, in the frame whose
/// axes run along the two diagonals: fixed coefficients
/// A = cd, C = ab, 2D = -cd(a+b), 2E = -ab(c+d), F = abcd, with B free.
template <class S>
struct Pencil4 {
    ObliqueFrame<S> frame;
    // Signed axis intercepts of the four points; the chord labelling is
    // normalised so that a >= -b > 0 and c >= -d > 0 (the axis intersection
    // lies strictly between each chord's endpoints).
    S a = 0, b = 0, c = 0, d = 0;
    S A = 0, C = 0, D = 0, E = 0, F = 0;

    S sqrt_ac() const { return std::sqrt(A * C); }
};

/// Pencil member at parameter B.
template <class S>
Conic<S> member(const Pencil4<S>& p, S B) {
    Conic<S> c;
    c.A = p.A;
    c.B = B;
    c.C = p.C;
    c.D = p.D;
    c.E = p.E;
    c.F = p.F;
    c.frame = p.frame;
    return c;
}

/// Builds the pencil. Of the three ways to pair the points into two chords,
/// exactly one has the chords crossing strictly inside both segments for a
/// conelliptic quad; that pairing gives ab < 0 and cd < 0. A pairing with
/// parallel chords is skipped, which is the re-pairing rule for that case.
template <class S>
Pencil4<S> build_pencil(const Quad4<S>& q) {
    if (!conelliptic_check(q)) throw NotConelliptic("points are not conelliptic");

    static constexpr int pairing[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& pr : pairing) {
        const Point2<S>&p0 = q.pts[pr[0]], &p1 = q.pts[pr[1]];
        const Point2<S>&q0 = q.pts[pr[2]], &q1 = q.pts[pr[3]];
        const Point2<S> du = p1 - p0, dv = q1 - q0;
        const S den = detail::cross2<S>(du, dv);
        const S scale = du.norm() * dv.norm();
        if (std::abs(den) <= S(1e-14) * scale) continue;  // parallel chords
        const Point2<S> w = q0 - p0;
        const S s = detail::cross2<S>(w, dv) / den;
        const S r = detail::cross2<S>(w, du) / den;
        if (!(s > S(0) && s < S(1) && r > S(0) && r < S(1))) continue;

        const Point2<S> origin = p0 + s * du;
        // Positive direction points at the farther endpoint of each chord.
        const auto make_axis = [&](const Point2<S>& e0, const Point2<S>& e1, Point2<S>& unit,
                                   S& far, S& near) {
            const S l0 = (e0 - origin).norm(), l1 = (e1 - origin).norm();
            const Point2<S>& fp = l0 >= l1 ? e0 : e1;
            unit = (fp - origin).normalized();
            far = std::max(l0, l1);
            near = -std::min(l0, l1);
        };
        Pencil4<S> out;
        Point2<S> ua, uc;
        make_axis(p0, p1, ua, out.a, out.b);
        make_axis(q0, q1, uc, out.c, out.d);
        out.frame = ObliqueFrame<S>::from_axes(origin, ua, uc);
        out.A = out.c * out.d;
        out.C = out.a * out.b;
        out.D = -out.c * out.d * (out.a + out.b) / S(2);
        out.E = -out.a * out.b * (out.c + out.d) / S(2);
        out.F = out.a * out.b * out.c * out.d;
        return out;
    }
    throw NotConelliptic("no chord pairing with an interior intersection");
}

enum class PencilRootKind { EllipticMinimum, CriticalHyperbola, LimitingParallelLines };

inline std::string to_string(PencilRootKind k) {
    switch (k) {
        case PencilRootKind::EllipticMinimum: return "elliptic-minimum";
        case PencilRootKind::CriticalHyperbola: return "critical-hyperbola";
        case PencilRootKind::LimitingParallelLines: return "limiting-parallel-lines";
    }
    return "?";
}

template <class S>
struct CubicReport {
    Eigen::Matrix<S, 4, 1> coeffs;  // c3, c2, c1, c0
    Eigen::Matrix<S, 3, 1> roots;   // ascending
    std::array<PencilRootKind, 3> kinds;
    S discriminant = 0;
};

/// Critical points of the pencil's area invariant:
/// F B^3 - 4DE B^2 + (3CD^2 + 3AE^2 - ACF) B - 2ACDE = 0.
/// Always three real roots; the unique one inside (-sqrt(AC), sqrt(AC)) is
/// the minimal ellipse, roots at the boundary (within 1e-9 relative) are the
/// parallel-line limiting conics, the rest are critical hyperbolas.
template <class S>
CubicReport<S> euler_cubic(const Pencil4<S>& p) {
    CubicReport<S> rep;
    rep.coeffs[0] = p.F;
    rep.coeffs[1] = S(-4) * p.D * p.E;
    rep.coeffs[2] = S(3) * p.C * p.D * p.D + S(3) * p.A * p.E * p.E - p.A * p.C * p.F;
    rep.coeffs[3] = S(-2) * p.A * p.C * p.D * p.E;
    rep.discriminant =
        cubic_discriminant(rep.coeffs[0], rep.coeffs[1], rep.coeffs[2], rep.coeffs[3]);

    const auto roots =
        solve_cubic_three_real(rep.coeffs[0], rep.coeffs[1], rep.coeffs[2], rep.coeffs[3]);
    const S sqac = p.sqrt_ac();
    const S btol = S(1e-9) * sqac;
    for (int k = 0; k < 3; ++k) {
        const S r = roots[static_cast<size_t>(k)];
        rep.roots[k] = r;
        if (std::abs(std::abs(r) - sqac) <= btol)
            rep.kinds[static_cast<size_t>(k)] = PencilRootKind::LimitingParallelLines;
        else if (std::abs(r) < sqac)
            rep.kinds[static_cast<size_t>(k)] = PencilRootKind::EllipticMinimum;
        else
            rep.kinds[static_cast<size_t>(k)] = PencilRootKind::CriticalHyperbola;
    }
    return rep;
}

/// The member of minimal area, with its area.
template <class S>
std::pair<Conic<S>, S> minimal_area_ellipse(const Pencil4<S>& p) {
    const CubicReport<S> rep = euler_cubic(p);
    for (int k = 0; k < 3; ++k) {
        if (rep.kinds[static_cast<size_t>(k)] == PencilRootKind::EllipticMinimum) {
            Conic<S> c = member(p, rep.roots[k]);
            return {c, ellipse_area(c)};
        }
    }
    throw NumericError("no cubic root inside the elliptic window");
}

enum class QuadKind { Parallelogram, Trapezium, Kite, Irregular };

inline std::string to_string(QuadKind k) {
    switch (k) {
        case QuadKind::Parallelogram: return "parallelogram";
        case QuadKind::Trapezium: return "trapezium";
        case QuadKind::Kite: return "kite";
        case QuadKind::Irregular: return "irregular";
    }
    return "?";
}

template <class S>
struct QuadClass {
    QuadKind kind = QuadKind::Irregular;
    S sigma = 0;  // (a+b)^2/(ab), for the chord with the larger normalised intercept
    S tau = 0;    // (c+d)^2/(cd)
};

/// Affine class of the quadrilateral. Intercepts are rescaled to b = d = -1
/// and chords ordered so a >= c before reading off the stratum; sigma and tau
/// are the affine moduli (both vanish exactly for parallelograms).
template <class S>
QuadClass<S> classify_quadrilateral(const Quad4<S>& q, S eps = S(1e-7)) {
    const Pencil4<S> p = build_pencil(q);
    S an = p.a / -p.b;
    S cn = p.c / -p.d;
    S sigma = (p.a + p.b) * (p.a + p.b) / (p.a * p.b);
    S tau = (p.c + p.d) * (p.c + p.d) / (p.c * p.d);
    if (an < cn) {
        std::swap(an, cn);
        std::swap(sigma, tau);
    }
    QuadClass<S> out;
    out.sigma = sigma;
    out.tau = tau;
    const bool a_unit = an - S(1) <= eps * an;
    const bool c_unit = cn - S(1) <= eps * cn;
    if (a_unit && c_unit)
        out.kind = QuadKind::Parallelogram;
    else if (an - cn <= eps * an)
        out.kind = QuadKind::Trapezium;
    else if (c_unit)
        out.kind = QuadKind::Kite;
    else
        out.kind = QuadKind::Irregular;
    return out;
}

/// Members at B = +-sqrt(AC): the single-asymptote conics of the pencil.
/// Parallelogram: parallel lines at both ends; trapezium: parallel lines at
/// -sqrt(AC) and a parabola at +sqrt(AC); kite/irregular: two parabolas.
template <class S>
std::array<std::pair<S, ConicClass>, 2> limiting_conics(const Pencil4<S>& p) {
    const S sqac = p.sqrt_ac();
    std::array<std::pair<S, ConicClass>, 2> out;
    out[0] = {-sqac, classify(member(p, -sqac))};
    out[1] = {+sqac, classify(member(p, +sqac))};
    return out;
}

/// B values of the degenerate members (the two diagonal line pairs):
/// DE/F +- sqrt((D^2/F - A)(E^2/F - C)).
template <class S>
std::vector<S> degenerate_members(const Pencil4<S>& p) {
    if (p.F == S(0)) throw InvalidArgument("degenerate_members requires F != 0");
    const S rad = (p.D * p.D / p.F - p.A) * (p.E * p.E / p.F - p.C);
    if (rad < S(0)) return {};
    const S root = std::sqrt(rad);
    const S base = p.D * p.E / p.F;
    std::vector<S> out{base - root, base + root};
    if (out[0] > out[1]) std::swap(out[0], out[1]);
    return out;
}

/// The pencil's area invariant as a function of B, continued across the poles
/// the way the area graphs draw it: det_m/(AC - B^2)^(3/2) on the elliptic
/// window and -det_m/(B^2 - AC)^(3/2) outside, so the curve runs to -infinity
/// at a parabolic limiting conic and decays to zero from above at B -> +-inf.
template <class S>
S pencil_area_curve(const Pencil4<S>& p, S B) {
    const Conic<S> m = member(p, B);
    const S dn = det_n(m);
    const S dm = det_m(m);
    const S ad = std::abs(dn);
    if (ad <= S(1e-300)) return std::numeric_limits<S>::infinity();
    const S val = dm / (ad * std::sqrt(ad));
    return dn > S(0) ? val : -val;
}

template <class S>
struct AreaSample {
    S B = 0;
    S value = 0;
    bool pole = false;
};

/// Samples the area invariant on [B_min, B_max], marking the poles at
/// +-sqrt(AC).
template <class S>
std::vector<AreaSample<S>> area_profile(const Pencil4<S>& p, S B_min, S B_max, int samples) {
    if (samples < 2) throw InvalidArgument("area_profile needs at least 2 samples");
    if (!(B_min < B_max)) throw InvalidArgument("area_profile needs B_min < B_max");
    const S ac = p.A * p.C;
    std::vector<AreaSample<S>> out;
    out.reserve(static_cast<size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        AreaSample<S> s;
        s.B = B_min + (B_max - B_min) * S(k) / S(samples - 1);
        const S dn = ac - s.B * s.B;
        if (std::abs(dn) <= S(1e-12) * std::max(ac, s.B * s.B)) {
            s.pole = true;
            s.value = std::numeric_limits<S>::quiet_NaN();
        } else {
            s.value = pencil_area_curve(p, s.B);
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace ellex
