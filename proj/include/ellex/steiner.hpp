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
#include <utility>
#include <vector>

#include "ellex/conic.hpp"
#include "ellex/errors.hpp"

namespace ellex {

/// 4*pi/(3*sqrt(3)): the universal circumellipse-to-triangle area ratio.
template <class S = double>
S steiner_area_ratio() {
    return S(4) * S(M_PI) / (S(3) * std::sqrt(S(3)));
}

/// A triangle with a distinguished frame vertex vB; the minimal circumellipse
/// is written in oblique coordinates along vB->vA and vB->vC. Any choice of
/// frame vertex yields the same geometric ellipse.
template <class S>
struct Triangle {
    Point2<S> vA, vB, vC;

    /// Puts the frame vertex at the largest angle.
    static Triangle from_points(const Point2<S>& p0, const Point2<S>& p1, const Point2<S>& p2) {
        const std::array<Point2<S>, 3> v{p0, p1, p2};
        int best = 0;
        S best_cos = S(2);
        for (int i = 0; i < 3; ++i) {
            const Point2<S> e1 = v[static_cast<size_t>((i + 1) % 3)] - v[static_cast<size_t>(i)];
            const Point2<S> e2 = v[static_cast<size_t>((i + 2) % 3)] - v[static_cast<size_t>(i)];
            const S c = e1.dot(e2) / (e1.norm() * e2.norm());
            if (c < best_cos) {
                best_cos = c;
                best = i;
            }
        }
        Triangle t;
        t.vB = v[static_cast<size_t>(best)];
        t.vA = v[static_cast<size_t>((best + 1) % 3)];
        t.vC = v[static_cast<size_t>((best + 2) % 3)];
        t.validate();
        return t;
    }

    void validate() const {
        const Point2<S> e1 = vA - vB, e2 = vC - vB;
        const S cross = e1.x() * e2.y() - e1.y() * e2.x();
        const S scale = std::max(S(1), std::max(e1.norm(), e2.norm()));
        if (std::abs(cross) <= S(1e-14) * scale * scale)
            throw DegenerateTriangle("triangle vertices are collinear");
    }

    S side_a() const { return (vA - vB).norm(); }
    S side_c() const { return (vC - vB).norm(); }
    S omega() const {
        const Point2<S> e1 = vA - vB, e2 = vC - vB;
        const S cross = e1.x() * e2.y() - e1.y() * e2.x();
        return std::atan2(std::abs(cross), e1.dot(e2));
    }
    S area() const { return side_a() * side_c() * std::sin(omega()) / S(2); }

    ObliqueFrame<S> frame() const {
        return ObliqueFrame<S>::from_axes(vB, (vA - vB).normalized(), (vC - vB).normalized());
    }
};

/// Arithmetic mean of the vertices; the minimal circumellipse is centred here.
template <class S>
Point2<S> centroid(const Triangle<S>& t) {
    return (t.vA + t.vB + t.vC) / S(3);
}

template <class S>
struct SteinerResult {
    Conic<S> conic;
    S area = 0;
    Point2<S> center;
    std::array<Point2<S>, 3> tangent_dirs;  // unit Cartesian directions at vA, vB, vC
};

/// Two-parameter area functional of the circumscribing net, in the variables
/// s = sqrt(C/A) and phi with B = cos(phi)*sqrt(AC):
/// (pi/4) sin(omega) (a^2 + c^2 s^2 - 2acs cos phi)/(s sin^3 phi).
/// Stationary exactly at s = a/c, phi = 60 degrees.
template <class S>
S area_functional(S s, S phi, S a, S c, S omega) {
    if (!(s > S(0)) || !(phi > S(0)) || !(phi < S(M_PI)))
        throw InvalidArgument("area_functional: need s > 0 and phi in (0, pi)");
    const S sp = std::sin(phi);
    return S(M_PI) / S(4) * std::sin(omega) *
           (a * a + c * c * s * s - S(2) * a * c * s * std::cos(phi)) / (s * sp * sp * sp);
}

namespace detail {

template <class S>
Point2<S> tangent_direction_at(const Conic<S>& c, const Point2<S>& frame_pt) {
    const Point2<S> grad = S(2) * (c.quad_matrix() * frame_pt + c.linear_part());
    const Point2<S> dir_frame(-grad.y(), grad.x());
    return c.frame.direction_to_cartesian(dir_frame).normalized();
}

}  // namespace detail

/// The minimal-area circumellipse. In the frame at vB the coefficients are
/// exactly A = c^2, B = ac/2, C = a^2, D = -ac^2/2, E = -a^2c/2, F = 0, and
/// the area is 2*pi*a*c*sin(omega)/(3*sqrt(3)).
template <class S>
SteinerResult<S> steiner_ellipse(const Triangle<S>& t) {
    t.validate();
    const S a = t.side_a(), c = t.side_c();

    SteinerResult<S> r;
    r.conic.frame = t.frame();
    r.conic.A = c * c;
    r.conic.B = a * c / S(2);
    r.conic.C = a * a;
    r.conic.D = -a * c * c / S(2);
    r.conic.E = -a * a * c / S(2);
    r.conic.F = S(0);
    r.area = S(2) * S(M_PI) * a * c * std::sin(t.omega()) / (S(3) * std::sqrt(S(3)));
    r.center = centroid(t);
    r.tangent_dirs[0] = detail::tangent_direction_at(r.conic, Point2<S>(a, S(0)));
    r.tangent_dirs[1] = detail::tangent_direction_at(r.conic, Point2<S>(S(0), S(0)));
    r.tangent_dirs[2] = detail::tangent_direction_at(r.conic, Point2<S>(S(0), c));
    return r;
}

/// Unit tangent directions of the circumellipse at vA, vB, vC; each is
/// parallel to the opposite triangle side.
template <class S>
std::array<Point2<S>, 3> vertex_tangents(const SteinerResult<S>& r, const Triangle<S>& t) {
    const S a = t.side_a(), c = t.side_c();
    return {detail::tangent_direction_at(r.conic, Point2<S>(a, S(0))),
            detail::tangent_direction_at(r.conic, Point2<S>(S(0), S(0))),
            detail::tangent_direction_at(r.conic, Point2<S>(S(0), c))};
}

/// First k continued-fraction convergents of 4*pi/(3*sqrt(3)). The list
/// starts 2/1, 5/2, 12/5, 17/7, 29/12, 104/43, 237/98.
inline std::vector<std::pair<long long, long long>> ratio_convergents(int k) {
    if (k < 1) throw InvalidArgument("ratio_convergents: k must be positive");
    if (k > 20) throw InvalidArgument("ratio_convergents: k too large for double precision");
    std::vector<std::pair<long long, long long>> out;
    long double x = 4.0L * M_PIl / (3.0L * std::sqrt(3.0L));
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    long double y = x;
    for (int i = 0; i < k; ++i) {
        const long long ai = static_cast<long long>(std::floor(y));
        const long long h2 = ai * h1 + h0;
        const long long k2 = ai * k1 + k0;
        out.emplace_back(h2, k2);
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        y = 1.0L / (y - static_cast<long double>(ai));
    }
    return out;
}

}  // namespace ellex
