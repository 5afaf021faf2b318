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

#include <cmath>
#include <functional>

#include "ellex/conic.hpp"
#include "ellex/errors.hpp"

namespace ellex {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    int max_subdivisions = 24;  // recursion depth of the adaptive scheme
};

namespace detail {

template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
    const double m = (a + b) / 2;
    const double lm = (a + m) / 2, rm = (m + b) / 2;
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15 * tol) return left + right + delta / 15;
    if (depth <= 0) throw ToleranceNotMet("adaptive quadrature: subdivision limit reached");
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

template <class F>
double adaptive_quadrature(const F& f, double a, double b, const QuadratureSpec& q) {
    const double fa = f(a), fb = f(b), fm = f((a + b) / 2);
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, q.abs_tol, q.max_subdivisions);
}

}  // namespace detail

/// Quarter perimeter of the ellipse with semiaxes a, b by adaptive quadrature
/// of the arc element d(phi) sqrt(a^2 sin^2 phi + b^2 cos^2 phi) on [0, pi/2].
inline double perimeter_quadrature(double a, double b, const QuadratureSpec& q = {}) {
    if (!(a > 0) || !(b >= 0)) throw InvalidArgument("perimeter_quadrature: need a > 0, b >= 0");
    if (!(q.abs_tol > 0)) throw InvalidArgument("perimeter_quadrature: abs_tol must be positive");
    const auto element = [a, b](double phi) {
        const double sp = std::sin(phi), cp = std::cos(phi);
        return std::sqrt(a * a * sp * sp + b * b * cp * cp);
    };
    return detail::adaptive_quadrature(element, 0.0, M_PI_2, q);
}

/// Ellipse area by integrating the chord element
/// (2 dx sin(omega)/|C|) sqrt((E+Bx)^2 - ACx^2 - 2CDx - FC) over the
/// x-extent. The extent endpoints come from the discriminant quadratic; the
/// square-root endpoint singularity is removed by the substitution
/// x = mid + half*sin(theta), and roundoff-negative radicand values near the
/// endpoints are clamped to zero.
template <class S>
S conic_area_quadrature(const Conic<S>& c, int strips = 10000) {
    if (classify(c) != ConicClass::Ellipse)
        throw NotAnEllipse("conic_area_quadrature needs a real ellipse");
    if (strips < 8) throw InvalidArgument("conic_area_quadrature: too few strips");

    const S qa = c.B * c.B - c.A * c.C;               // < 0 for an ellipse
    const S qb = S(2) * (c.B * c.E - c.C * c.D);
    const S qc = c.E * c.E - c.F * c.C;
    const S disc = qb * qb - S(4) * qa * qc;
    if (!(disc > S(0))) throw EmptyConic("ellipse has empty x-extent");
    const S sq = std::sqrt(disc);
    const S x0 = (-qb - sq) / (S(2) * qa);
    const S x1 = (-qb + sq) / (S(2) * qa);
    const S mid = (x0 + x1) / S(2), half = std::abs(x1 - x0) / S(2);
    const S rad_scale = std::abs(qa) * half * half;

    const auto integrand = [&](S theta) {
        const S x = mid + half * std::sin(theta);
        S r = (qa * x + qb) * x + qc;
        if (r < S(0)) {
            if (r < S(-1e-9) * rad_scale)
                throw NumericError("conic_area_quadrature: radicand negative inside extent");
            r = S(0);
        }
        return S(2) * std::sqrt(r) / std::abs(c.C) * half * std::cos(theta);
    };

    int n = strips;
    if (n % 2) ++n;
    const S lo = S(-M_PI_2), hi = S(M_PI_2);
    const S h = (hi - lo) / S(n);
    S acc = integrand(lo) + integrand(hi);
    for (int k = 1; k < n; ++k) acc += integrand(lo + h * S(k)) * (k % 2 ? S(4) : S(2));
    return acc * h / S(3) * c.frame.sin_omega();
}

/// Argmin of f over [lo, hi]: coarse uniform scan refined by golden-section
/// on the bracketing pair of samples.
template <class S, class F>
S grid_argmin(const F& f, S lo, S hi, int samples) {
    if (samples < 3) throw InvalidArgument("grid_argmin: need at least 3 samples");
    if (!(lo < hi)) throw InvalidArgument("grid_argmin: need lo < hi");
    const S step = (hi - lo) / S(samples - 1);
    int best = 0;
    S best_val = f(lo);
    for (int k = 1; k < samples; ++k) {
        const S x = lo + step * S(k);
        const S v = f(x);
        if (v < best_val) {
            best_val = v;
            best = k;
        }
    }
    S a = lo + step * S(std::max(0, best - 1));
    S b = lo + step * S(std::min(samples - 1, best + 1));
    const S inv_phi = (std::sqrt(S(5)) - S(1)) / S(2);
    S x1 = b - inv_phi * (b - a);
    S x2 = a + inv_phi * (b - a);
    S f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 64 && (b - a) > step * S(1e-9); ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return (a + b) / S(2);
}

/// Second-order central difference estimate of f'(x).
template <class S, class F>
S central_diff(const F& f, S x, S h) {
    if (!(h > S(0))) throw InvalidArgument("central_diff: h must be positive");
    return (f(x + h) - f(x - h)) / (S(2) * h);
}

/// Second-order central difference estimate of f''(x).
template <class S, class F>
S central_diff2(const F& f, S x, S h) {
    if (!(h > S(0))) throw InvalidArgument("central_diff2: h must be positive");
    return (f(x + h) - S(2) * f(x) + f(x - h)) / (h * h);
}

}  // namespace ellex
