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
#include <algorithm>
#include <cmath>
#include <string>

#include "ellex/errors.hpp"

namespace ellex {

template <class S>
using Point2 = Eigen::Matrix<S, 2, 1>;

/// An affine coordinate system: origin plus two unit axis directions meeting
/// at angle omega in (0, pi). Coordinates (u, v) map to the Cartesian point
/// origin + u*axis_u + v*axis_v; the second coordinate is measured parallel
/// to the second axis, not orthogonally.
template <class S>
struct ObliqueFrame {
    Point2<S> origin = Point2<S>::Zero();
    Point2<S> axis_u = Point2<S>(S(1), S(0));
    Point2<S> axis_v = Point2<S>(S(0), S(1));
    S omega = S(M_PI_2);

    static ObliqueFrame cartesian() { return ObliqueFrame{}; }

    /// Frame with the standard x-axis and a second axis at angle omega.
    static ObliqueFrame with_angle(S omega_angle, Point2<S> origin_pt = Point2<S>::Zero()) {
        ObliqueFrame f;
        f.origin = origin_pt;
        f.axis_u = Point2<S>(S(1), S(0));
        f.axis_v = Point2<S>(std::cos(omega_angle), std::sin(omega_angle));
        f.omega = omega_angle;
        f.validate();
        return f;
    }

    /// Frame spanned by two unit directions; omega derived from them.
    static ObliqueFrame from_axes(const Point2<S>& origin_pt, const Point2<S>& u,
                                  const Point2<S>& v) {
        ObliqueFrame f;
        f.origin = origin_pt;
        f.axis_u = u.normalized();
        f.axis_v = v.normalized();
        const S cross = f.axis_u.x() * f.axis_v.y() - f.axis_u.y() * f.axis_v.x();
        const S dot = f.axis_u.dot(f.axis_v);
        f.omega = std::atan2(std::abs(cross), dot);
        f.validate();
        return f;
    }

    void validate() const {
        if (!(omega > S(0)) || !(omega < S(M_PI)) || !(std::sin(omega) > S(0)))
            throw InvalidFrame("frame angle must lie in (0, pi)");
        const S cross = axis_u.x() * axis_v.y() - axis_u.y() * axis_v.x();
        const S dot = axis_u.dot(axis_v);
        if (std::abs(std::atan2(std::abs(cross), dot) - omega) > S(1e-12))
            throw InvalidFrame("axis directions inconsistent with frame angle");
    }

    Eigen::Matrix<S, 2, 2> basis() const {
        Eigen::Matrix<S, 2, 2> t;
        t.col(0) = axis_u;
        t.col(1) = axis_v;
        return t;
    }

    S sin_omega() const { return std::sin(omega); }

    Point2<S> to_cartesian(const Point2<S>& frame_pt) const {
        return origin + basis() * frame_pt;
    }
    Point2<S> to_frame(const Point2<S>& cart_pt) const {
        return basis().inverse() * (cart_pt - origin);
    }
    /// Maps a direction (no translation).
    Point2<S> direction_to_cartesian(const Point2<S>& d) const { return basis() * d; }
};

/// A x^2 + 2B xy + C y^2 + 2D x + 2E y + F = 0 in the coordinates of `frame`.
template <class S>
struct Conic {
    S A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;
    ObliqueFrame<S> frame = ObliqueFrame<S>::cartesian();

    Eigen::Matrix<S, 3, 3> matrix3() const {
        Eigen::Matrix<S, 3, 3> m;
        m << A, B, D, B, C, E, D, E, F;
        return m;
    }
    Eigen::Matrix<S, 2, 2> quad_matrix() const {
        Eigen::Matrix<S, 2, 2> n;
        n << A, B, B, C;
        return n;
    }
    Point2<S> linear_part() const { return Point2<S>(D, E); }

    S eval(const Point2<S>& p) const {
        const S u = p.x(), v = p.y();
        return A * u * u + S(2) * B * u * v + C * v * v + S(2) * D * u + S(2) * E * v + F;
    }

    S coeff_norm() const {
        return std::sqrt(A * A + B * B + C * C + D * D + E * E + F * F);
    }
};

enum class ConicClass {
    Ellipse,
    Parabola,
    Hyperbola,
    ParallelLines,
    IntersectingLines,
    DegenerateOther,
};

inline std::string to_string(ConicClass k) {
    switch (k) {
        case ConicClass::Ellipse: return "ellipse";
        case ConicClass::Parabola: return "parabola";
        case ConicClass::Hyperbola: return "hyperbola";
        case ConicClass::ParallelLines: return "parallel-lines";
        case ConicClass::IntersectingLines: return "intersecting-lines";
        case ConicClass::DegenerateOther: return "degenerate";
    }
    return "?";
}

/// det of the full 3x3 coefficient matrix: A(CF - E^2) - B(BF - DE) + D(BE - CD).
template <class S>
S det_m(const Conic<S>& c) {
    return c.A * (c.C * c.F - c.E * c.E) - c.B * (c.B * c.F - c.D * c.E) +
           c.D * (c.B * c.E - c.C * c.D);
}

/// det of the quadratic part: AC - B^2.
template <class S>
S det_n(const Conic<S>& c) {
    return c.A * c.C - c.B * c.B;
}

/// Relative residual of a frame point against the conic equation.
template <class S>
S conic_residual(const Conic<S>& c, const Point2<S>& p) {
    const S scale = c.coeff_norm() * (S(1) + p.squaredNorm());
    return std::abs(c.eval(p)) / scale;
}

/// Conic type from the signs of det_n and det_m, with thresholds relative to
/// the coefficient scale (equations are only defined up to scale).
template <class S>
ConicClass classify(const Conic<S>& c, S eps = S(1e-10)) {
    const S n2 = c.A * c.A + c.B * c.B + c.C * c.C + c.D * c.D + c.E * c.E + c.F * c.F;
    if (n2 == S(0)) throw InvalidConic("all six conic coefficients are zero");
    const S tn = eps * n2;
    const S tm = eps * n2 * std::sqrt(n2);
    const S dn = det_n(c);
    const S dm = det_m(c);

    if (dn > tn) {
        // Real ellipse iff det_m and the trace have opposite signs.
        if (std::abs(dm) > tm && dm * (c.A + c.C) < S(0)) return ConicClass::Ellipse;
        return ConicClass::DegenerateOther;  // imaginary ellipse or single point
    }
    if (dn < -tn)
        return std::abs(dm) > tm ? ConicClass::Hyperbola : ConicClass::IntersectingLines;

    // det_n ~ 0: parabola, parallel lines, or worse.
    if (std::abs(dm) > tm) return ConicClass::Parabola;
    const Eigen::Matrix<S, 3, 3> m = c.matrix3();
    S max_minor = S(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
            const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            max_minor = std::max(max_minor,
                                 std::abs(m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1)));
        }
    return max_minor > tn ? ConicClass::ParallelLines : ConicClass::DegenerateOther;
}

/// Euclidean area enclosed by a real ellipse:
/// pi*sin(omega) * |det_m| / det_n^(3/2). The absolute value implements the
/// convention of choosing the square root so the result is positive.
template <class S>
S ellipse_area(const Conic<S>& c, S eps = S(1e-10)) {
    const S n2 = c.A * c.A + c.B * c.B + c.C * c.C + c.D * c.D + c.E * c.E + c.F * c.F;
    if (n2 == S(0)) throw InvalidConic("all six conic coefficients are zero");
    const S dn = det_n(c);
    if (!(dn > eps * n2)) throw NotAnEllipse("det_n <= 0: not an ellipse");
    const S dm = det_m(c);
    if (!(dm * (c.A + c.C) < S(0)))
        throw EmptyConic("imaginary or point ellipse: no enclosed area");
    return S(M_PI) * c.frame.sin_omega() * std::abs(dm) / (dn * std::sqrt(dn));
}

/// Signed affine area invariant det_m / |det_n|^(3/2). Undefined at the
/// single-asymptote boundary det_n = 0. The sign rides with det_m, so it is
/// odd under negating the equation; that is what keeps families like xy = t
/// differentiable through t = 0.
template <class S>
S signed_area_invariant(const Conic<S>& c, S eps = S(1e-10)) {
    const S n2 = c.A * c.A + c.B * c.B + c.C * c.C + c.D * c.D + c.E * c.E + c.F * c.F;
    if (n2 == S(0)) throw InvalidConic("all six conic coefficients are zero");
    const S dn = det_n(c);
    if (std::abs(dn) <= eps * n2)
        throw LimitingConic("signed area invariant undefined at det_n = 0");
    const S ad = std::abs(dn);
    return det_m(c) / (ad * std::sqrt(ad));
}

/// Passive affine change of coordinates x = linear*x' + shift, applied to the
/// coefficient matrix as M' = S^T M S. The solution set is unchanged, read in
/// the new coordinates; det_m and det_n both pick up det(linear)^2.
template <class S>
Conic<S> apply_affine(const Conic<S>& c, const Eigen::Matrix<S, 2, 2>& linear,
                      const Point2<S>& shift) {
    const S det = linear.determinant();
    if (std::abs(det) <= S(1e-14) * std::max(S(1), linear.squaredNorm()))
        throw SingularTransform("affine map is singular");
    Eigen::Matrix<S, 3, 3> s3 = Eigen::Matrix<S, 3, 3>::Identity();
    s3.template topLeftCorner<2, 2>() = linear;
    s3.template topRightCorner<2, 1>() = shift;
    const Eigen::Matrix<S, 3, 3> mp = s3.transpose() * c.matrix3() * s3;
    Conic<S> out;
    out.A = mp(0, 0);
    out.B = mp(0, 1);
    out.C = mp(1, 1);
    out.D = mp(0, 2);
    out.E = mp(1, 2);
    out.F = mp(2, 2);
    out.frame = c.frame;
    return out;
}

/// Parametric description of a real ellipse in Cartesian coordinates.
template <class S>
struct EllipseGeometry {
    Point2<S> center;
    S semi_major = 0;
    S semi_minor = 0;
    S angle = 0;  // direction of the major axis, in [0, pi)

    Point2<S> point(S theta) const {
        const S ct = std::cos(angle), st = std::sin(angle);
        const S x = semi_major * std::cos(theta), y = semi_minor * std::sin(theta);
        return center + Point2<S>(ct * x - st * y, st * x + ct * y);
    }
    S area() const { return S(M_PI) * semi_major * semi_minor; }
};

namespace detail {

/// Conic coefficients re-expressed in the Cartesian reference coordinates.
template <class S>
Conic<S> to_cartesian_coefficients(const Conic<S>& c) {
    const Eigen::Matrix<S, 2, 2> tinv = c.frame.basis().inverse();
    Eigen::Matrix<S, 3, 3> s3 = Eigen::Matrix<S, 3, 3>::Identity();
    s3.template topLeftCorner<2, 2>() = tinv;
    s3.template topRightCorner<2, 1>() = -tinv * c.frame.origin;
    const Eigen::Matrix<S, 3, 3> mp = s3.transpose() * c.matrix3() * s3;
    Conic<S> out;
    out.A = mp(0, 0);
    out.B = mp(0, 1);
    out.C = mp(1, 1);
    out.D = mp(0, 2);
    out.E = mp(1, 2);
    out.F = mp(2, 2);
    out.frame = ObliqueFrame<S>::cartesian();
    return out;
}

}  // namespace detail

/// Cartesian center, semiaxes and axis angle of a real ellipse. The 2x2
/// quadratic part is diagonalised by the closed-form rotation angle
/// atan2(2B, A - C)/2; no iterative eigensolver is involved.
template <class S>
EllipseGeometry<S> geometric_form(const Conic<S>& c) {
    if (classify(c) != ConicClass::Ellipse) throw NotAnEllipse("geometric form needs a real ellipse");
    const Conic<S> cc = detail::to_cartesian_coefficients(c);

    const Eigen::Matrix<S, 2, 2> n = cc.quad_matrix();
    const Point2<S> center = n.inverse() * (-cc.linear_part());
    const S f0 = cc.D * center.x() + cc.E * center.y() + cc.F;

    const S half_rot = S(0.5) * std::atan2(S(2) * cc.B, cc.A - cc.C);
    const Point2<S> u(std::cos(half_rot), std::sin(half_rot));
    const Point2<S> v(-u.y(), u.x());
    const S lu = u.dot(n * u);
    const S lv = v.dot(n * v);
    const S su2 = -f0 / lu;
    const S sv2 = -f0 / lv;
    if (!(su2 > S(0)) || !(sv2 > S(0))) throw EmptyConic("ellipse has no real points");

    EllipseGeometry<S> g;
    g.center = center;
    const S su = std::sqrt(su2), sv = std::sqrt(sv2);
    if (su >= sv) {
        g.semi_major = su;
        g.semi_minor = sv;
        g.angle = std::atan2(u.y(), u.x());
    } else {
        g.semi_major = sv;
        g.semi_minor = su;
        g.angle = std::atan2(v.y(), v.x());
    }
    if (g.angle < S(0)) g.angle += S(M_PI);
    if (g.angle >= S(M_PI)) g.angle -= S(M_PI);
    return g;
}

/// Euclidean area of the triangle cut off by the asymptotes and the tangent
/// line at the branch point of hyperbolic parameter `param`. Constant over
/// `param` for a fixed hyperbola.
template <class S>
S hyperbola_tangent_triangle_area(const Conic<S>& c, S param) {
    if (classify(c) != ConicClass::Hyperbola) throw NotAHyperbola("tangent triangle needs a hyperbola");

    // All constructions below (center, asymptote directions, tangency) are
    // affine, so they can run in frame coordinates; only the final area picks
    // up the frame factor sin(omega).
    const Eigen::Matrix<S, 2, 2> n = c.quad_matrix();
    const Point2<S> z = n.inverse() * (-c.linear_part());
    const S f0 = c.D * z.x() + c.E * z.y() + c.F;

    const S half_rot = S(0.5) * std::atan2(S(2) * c.B, c.A - c.C);
    Point2<S> et(std::cos(half_rot), std::sin(half_rot));
    Point2<S> es(-et.y(), et.x());
    S lt = et.dot(n * et);
    S ls = es.dot(n * es);
    if (!(-f0 / lt > S(0))) {
        std::swap(et, es);
        std::swap(lt, ls);
    }
    const S ah = std::sqrt(-f0 / lt);
    const S bh = std::sqrt(f0 / ls);

    const Point2<S> p = z + et * (ah * std::cosh(param)) + es * (bh * std::sinh(param));
    const Point2<S> grad = S(2) * (n * p + c.linear_part());
    const Point2<S> tangent_dir(-grad.y(), grad.x());

    const Point2<S> asym[2] = {et * ah + es * bh, et * ah - es * bh};
    Point2<S> corner[2];
    for (int k = 0; k < 2; ++k) {
        Eigen::Matrix<S, 2, 2> lhs;
        lhs.col(0) = tangent_dir;
        lhs.col(1) = -asym[k];
        const Point2<S> sr = lhs.inverse() * (z - p);
        corner[k] = z + sr.y() * asym[k];
    }
    const Point2<S> w1 = corner[0] - z, w2 = corner[1] - z;
    const S cross = w1.x() * w2.y() - w1.y() * w2.x();
    return S(0.5) * std::abs(cross) * c.frame.sin_omega();
}

template <class S>
struct PrincipalAxes {
    S phi = 0;    // angle from the first oblique axis to the major axis
    S major = 0;  // f
    S minor = 0;  // g
};

/// Principal axes of the ellipse c^2 x^2 + a^2 y^2 = a^2 c^2 written in an
/// oblique frame of angle theta: cot(2 phi) = (a^2 + c^2 cos 2theta)/(c^2 sin 2theta),
/// with the two semiaxes read off from the diagonalised equation. Satisfies
/// f*g = a*c*sin(theta) and f^2 + g^2 = a^2 + c^2.
template <class S>
PrincipalAxes<S> principal_axes_parallelogram(S a, S c, S theta) {
    if (!(a > S(0)) || !(c > S(0)) || !(theta > S(0)) || !(theta < S(M_PI)))
        throw InvalidArgument("principal_axes_parallelogram: need a,c > 0 and theta in (0, pi)");
    const S st = std::sin(theta);
    S phi = S(0.5) * std::atan2(c * c * std::sin(S(2) * theta),
                                a * a + c * c * std::cos(S(2) * theta));
    const S du = c * c * std::pow(std::sin(theta - phi), 2) + a * a * std::pow(std::sin(phi), 2);
    const S dv = c * c * std::pow(std::cos(theta - phi), 2) + a * a * std::pow(std::cos(phi), 2);
    S f = a * c * st / std::sqrt(du);
    S g = a * c * st / std::sqrt(dv);
    if (f < g) {
        std::swap(f, g);
        phi += S(M_PI_2);
    }
    while (phi < S(0)) phi += S(M_PI);
    while (phi >= S(M_PI)) phi -= S(M_PI);
    return {phi, f, g};
}

}  // namespace ellex
