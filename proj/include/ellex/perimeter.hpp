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
#include <utility>
#include <vector>

#include "ellex/errors.hpp"
#include "ellex/rational.hpp"

namespace ellex {

/// Highest term index whose coefficient product still fits 128-bit exact
/// rationals.
inline constexpr int kMaxExactTerms = 13;

/// Exact coefficient products of the quarter-perimeter series:
/// alpha = 1/16, then each further letter multiplies by
/// (4k-5)(4k-3)/(16 k^2), giving alpha, alpha*beta, alpha*beta*gamma, ...
inline std::vector<Rational> series_products_exact(int terms) {
    if (terms < 1 || terms > kMaxExactTerms)
        throw InvalidArgument("series_products_exact: 1 <= terms <= 13");
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(terms));
    Rational p(1, 16);
    out.push_back(p);
    for (int k = 2; k <= terms; ++k) {
        p = p * Rational((4LL * k - 5) * (4LL * k - 3), 16LL * k * k);
        out.push_back(p);
    }
    return out;
}

/// 1 - alpha - alpha*beta - ... (first `terms` products subtracted), exact.
inline Rational series_sum_partial_rational(int terms) {
    Rational s(1);
    for (const Rational& p : series_products_exact(terms)) s = s - p;
    return s;
}

/// (4.4)/(3.5) * (8.8)/(7.9) * ... with `terms` factors, exact. The k-term
/// partial product is the exact reciprocal of the k-term partial sum.
inline Rational product_partial_rational(int terms) {
    if (terms < 1 || terms > kMaxExactTerms)
        throw InvalidArgument("product_partial_rational: 1 <= terms <= 13");
    Rational q(1);
    for (long long m = 1; m <= terms; ++m)
        q = q * Rational(16 * m * m, 16 * m * m - 1);
    return q;
}

/// Coefficient products as reals. Up to kMaxExactTerms they are converted
/// from the exact rationals; beyond that the recurrence continues in floating
/// point (every factor is < 1, so no cancellation accumulates).
template <class S>
std::vector<S> series_products(int terms) {
    if (terms < 1) throw InvalidArgument("series_products: need at least one term");
    std::vector<S> out;
    out.reserve(static_cast<size_t>(terms));
    const auto exact = series_products_exact(std::min(terms, kMaxExactTerms));
    for (const Rational& p : exact) out.push_back(static_cast<S>(p.to_double()));
    for (int k = kMaxExactTerms + 1; k <= terms; ++k)
        out.push_back(out.back() * S((4LL * k - 5) * (4LL * k - 3)) / S(16LL * k * k));
    return out;
}

/// The quarter-perimeter series with coefficients cached once. `order` is the
/// number of retained terms, so the highest power kept is n^(2*order).
template <class S>
struct PerimeterSeries {
    int order = 24;
    std::vector<S> coeffs;          // alpha, alpha*beta, ...
    std::vector<Rational> exact;    // exact prefixes of the same products

    static PerimeterSeries make(int order) {
        if (order < 1) throw InvalidArgument("PerimeterSeries: order must be positive");
        PerimeterSeries ps;
        ps.order = order;
        ps.coeffs = series_products<S>(order);
        ps.exact = series_products_exact(std::min(order, kMaxExactTerms));
        return ps;
    }

    /// s(n) = 1 - sum_k coeff_k n^(2k); strictly decreasing on [0, 1].
    S s(S n) const {
        const S n2 = n * n;
        S acc = S(0);
        S pw = S(1);
        for (const S& c : coeffs) {
            pw *= n2;
            acc += c * pw;
        }
        return S(1) - acc;
    }

    /// t(n) = -n ds/dn = sum_k 2k coeff_k n^(2k): termwise exact derivative
    /// of the same truncation.
    S t(S n) const {
        const S n2 = n * n;
        S acc = S(0);
        S pw = S(1);
        for (size_t k = 0; k < coeffs.size(); ++k) {
            pw *= n2;
            acc += S(2) * S(k + 1) * coeffs[k] * pw;
        }
        return acc;
    }
};

template <class S>
S series_s(S n, int order) {
    if (!(n >= S(0)) || !(n <= S(1))) throw InvalidArgument("series_s: need 0 <= n <= 1");
    return PerimeterSeries<S>::make(order).s(n);
}

template <class S>
S series_t(S n, int order) {
    if (!(n >= S(0)) || !(n > S(-1)) || !(n < S(1) + S(1e-15)))
        throw InvalidArgument("series_t: need 0 <= n < 1");
    return PerimeterSeries<S>::make(order).t(n);
}

/// Rectangle with half-sides f >= g > 0; i = (f^2 - g^2)/(f^2 + g^2).
template <class S>
struct RectSpec {
    S f = 1, g = 1;

    static RectSpec make(S f, S g) {
        if (!(f > S(0)) || !(g > S(0)))
            throw InvalidArgument("rectangle half-sides must be positive");
        if (f < g) std::swap(f, g);
        return RectSpec{f, g};
    }
    S h2() const { return f * f + g * g; }
    S i() const { return (f * f - g * g) / (f * f + g * g); }
};

/// Ellipse with semiaxes a >= b > 0; n = (a^2 - b^2)/(a^2 + b^2).
template <class S>
struct EllipseSpec {
    S a = 1, b = 1;

    static EllipseSpec make(S a, S b) {
        if (!(a > S(0)) || !(b >= S(0)))
            throw InvalidArgument("ellipse semiaxes must be positive");
        if (a < b) std::swap(a, b);
        return EllipseSpec{a, b};
    }
    S c2() const { return a * a + b * b; }
    S n() const { return (a * a - b * b) / (a * a + b * b); }
};

/// pi*c/(2*sqrt(2)) * s(n): one quarter of the ellipse perimeter.
template <class S>
S quarter_perimeter(const EllipseSpec<S>& e, int order) {
    const S c = std::sqrt(e.c2());
    return S(M_PI) * c / (S(2) * std::sqrt(S(2))) * series_s(e.n(), order);
}

/// The rectangle shape i whose minimal-perimeter circumscribed ellipse has
/// shape n: i = (2n^2 s - 2(1-n^2) t)/(n(1+n^2) s - 2n(1-n^2) t).
/// At the removable 0/0 point n -> 0 the limit 7n/4 is returned.
template <class S>
S i_of_n(S n, int order) {
    if (!(n > S(0)) || !(n <= S(1))) throw InvalidArgument("i_of_n: need 0 < n <= 1");
    if (n < S(1e-12)) return S(7) * n / S(4);
    const PerimeterSeries<S> ps = PerimeterSeries<S>::make(order);
    const S s = ps.s(n), t = ps.t(n);
    const S one_m = S(1) - n * n;
    return (S(2) * n * n * s - S(2) * one_m * t) /
           (n * (S(1) + n * n) * s - S(2) * n * one_m * t);
}

namespace detail {

/// Monotonicity scan backing the reverse lookup: invertibility of i(n) is
/// assumed rather than proved, so it is checked at run time.
template <class S>
void check_i_of_n_monotone(int order, S lo, S hi) {
    constexpr int kScan = 512;
    S prev = i_of_n(lo, order);
    for (int k = 1; k < kScan; ++k) {
        const S n = lo + (hi - lo) * S(k) / S(kScan - 1);
        const S cur = i_of_n(n, order);
        if (!(cur > prev))
            throw NoBracket("i_of_n is not monotone on the lookup bracket");
        prev = cur;
    }
}

}  // namespace detail

/// Reverse lookup: the ellipse shape n for a given rectangle shape i, by
/// bracketed bisection on [1e-6, 1 - 1e-9] with a secant polish.
template <class S>
S n_of_i(S i, int order, S tol = S(1e-12)) {
    if (!(i > S(0)) || !(i < S(1))) throw InvalidArgument("n_of_i: need 0 < i < 1");
    const S lo0 = S(1e-6), hi0 = S(1) - S(1e-9);
    detail::check_i_of_n_monotone<S>(order, lo0, hi0);
    S lo = lo0, hi = hi0;
    S flo = i_of_n(lo, order) - i;
    S fhi = i_of_n(hi, order) - i;
    if (flo > S(0)) return S(4) * i / S(7);  // below the bracket: series limit region
    if (fhi < S(0)) throw NoBracket("n_of_i: i outside the bracketed range");
    while (hi - lo > tol) {
        const S mid = (lo + hi) / S(2);
        const S fm = i_of_n(mid, order) - i;
        if (fm <= S(0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    // One secant step inside the final bracket.
    if (fhi != flo) {
        const S sec = lo - flo * (hi - lo) / (fhi - flo);
        if (sec > lo && sec < hi) return sec;
    }
    return (lo + hi) / S(2);
}

enum class ApproxScheme { Linear, Cubic, Compromise };

/// Closed-form approximations of the reverse lookup:
/// n = 4i/7, n = 4i/7 - 306 i^3/2401, n = 4i/(7 - 3i^2).
template <class S>
S approx_n_of_i(S i, ApproxScheme scheme) {
    if (!(i >= S(0)) || !(i <= S(1))) throw InvalidArgument("approx_n_of_i: need 0 <= i <= 1");
    switch (scheme) {
        case ApproxScheme::Linear: return S(4) * i / S(7);
        case ApproxScheme::Cubic: return S(4) * i / S(7) - S(306) * i * i * i / S(2401);
        case ApproxScheme::Compromise: return S(4) * i / (S(7) - S(3) * i * i);
    }
    throw InvalidArgument("approx_n_of_i: unknown scheme");
}

/// Minimal-area circumscribed ellipse of a rectangle: a = f*sqrt(2),
/// b = g*sqrt(2).
template <class S>
EllipseSpec<S> min_area_rect(const RectSpec<S>& r) {
    return EllipseSpec<S>{r.f * std::sqrt(S(2)), r.g * std::sqrt(S(2))};
}

/// Minimal-perimeter circumscribed ellipse: n from the reverse lookup, then
/// c^2 = 2h^2(1 - i n)/(1 - n^2) and a^2 = c^2(1+n)/2, b^2 = c^2(1-n)/2.
/// A square short-circuits to the circle through its corners.
template <class S>
std::pair<EllipseSpec<S>, S> min_perimeter_rect(const RectSpec<S>& r, int order,
                                                S tol = S(1e-12)) {
    const S i = r.i();
    S n;
    if (i < S(1e-15))
        n = S(0);
    else
        n = n_of_i(i, order, tol);
    const S c2 = S(2) * r.h2() * (S(1) - i * n) / (S(1) - n * n);
    const EllipseSpec<S> e{std::sqrt(c2 * (S(1) + n) / S(2)),
                           std::sqrt(c2 * (S(1) - n) / S(2))};
    return {e, quarter_perimeter(e, order)};
}

/// Fixed-step fourth-order integration of the Riccati equation
/// dz/dn = n/(4(1-n^2)) + z^2/n from (n0, z0) to n1. z = t/s solves it.
template <class S>
S riccati_step_integrate(S n0, S z0, S n1, int steps) {
    if (!(n0 > S(0)) || !(n0 < n1) || !(n1 < S(1)))
        throw InvalidArgument("riccati_step_integrate: need 0 < n0 < n1 < 1");
    if (steps < 1) throw InvalidArgument("riccati_step_integrate: steps must be positive");
    const auto rhs = [](S n, S z) { return n / (S(4) * (S(1) - n * n)) + z * z / n; };
    const S h = (n1 - n0) / S(steps);
    S n = n0, z = z0;
    for (int k = 0; k < steps; ++k) {
        const S k1 = rhs(n, z);
        const S k2 = rhs(n + h / S(2), z + h * k1 / S(2));
        const S k3 = rhs(n + h / S(2), z + h * k2 / S(2));
        const S k4 = rhs(n + h, z + h * k3);
        z += h / S(6) * (k1 + S(2) * k2 + S(2) * k3 + k4);
        n = n0 + (n1 - n0) * S(k + 1) / S(steps);
        if (!std::isfinite(z) || std::abs(z) > S(1e6))
            throw StepOverflow("riccati_step_integrate: z diverged");
    }
    return z;
}

/// Residual of the first-order i-n equation as printed in the source problem:
/// -2n(1-n^2)^2 di/dn = -7n + 3n^3 + 2i(1 + 3n^2) + i^2 n(1 - 5n^2).
/// Vanishes along the exact minimal-perimeter curve i = i_of_n(n).
template <class S>
S ode_in_residual(S n, S i, S di_dn) {
    if (!(n > S(0)) || !(n < S(1))) throw InvalidArgument("ode_in_residual: need 0 < n < 1");
    const S one_m = S(1) - n * n;
    const S lhs = S(-2) * n * one_m * one_m * di_dn;
    const S rhs = S(-7) * n + S(3) * n * n * n + S(2) * i * (S(1) + S(3) * n * n) +
                  i * i * n * (S(1) - S(5) * n * n);
    return lhs - rhs;
}

/// Residual of the variant printed elsewhere in the same source, with a
/// first-power (1-n^2) factor and a 3n^2 term. Kept so the test suite can
/// record which of the two printed forms the series relation satisfies (this
/// one does not).
template <class S>
S ode_in_residual_alt(S n, S i, S di_dn) {
    if (!(n > S(0)) || !(n < S(1)))
        throw InvalidArgument("ode_in_residual_alt: need 0 < n < 1");
    const S one_m = S(1) - n * n;
    const S lhs = S(-2) * n * one_m * di_dn;
    const S rhs = S(-7) * n + S(3) * n * n + S(2) * i * (S(1) + S(3) * n * n) +
                  i * i * n * (S(1) - S(5) * n * n);
    return lhs - rhs;
}

/// Partial product (4.4/3.5)(8.8/7.9)... with `terms` factors; decreases
/// monotonically to pi/(2*sqrt(2)).
template <class S>
S product_pi_over_2sqrt2(int terms) {
    if (terms < 1) throw InvalidArgument("product_pi_over_2sqrt2: terms must be positive");
    S q = S(1);
    for (long long m = 1; m <= terms; ++m)
        q *= S(16 * m * m) / S(16 * m * m - 1);
    return q;
}

/// Finite-difference residual of 4n s'' + 4 s' + n s/(1-n^2) = 0 for the
/// truncated series.
template <class S>
S ode_s_residual(S n, S h, int order) {
    if (!(n > S(0)) || !(n < S(1))) throw InvalidArgument("ode_s_residual: need 0 < n < 1");
    if (!(h > S(0)) || !(n - h > S(0)) || !(n + h < S(1)))
        throw InvalidArgument("ode_s_residual: step h leaves the domain");
    const PerimeterSeries<S> ps = PerimeterSeries<S>::make(order);
    const S sm = ps.s(n - h), s0 = ps.s(n), sp = ps.s(n + h);
    const S d1 = (sp - sm) / (S(2) * h);
    const S d2 = (sp - S(2) * s0 + sm) / (h * h);
    return S(4) * n * d2 + S(4) * d1 + n * s0 / (S(1) - n * n);
}

template <class S>
struct TabulateRow {
    S n, s, t, z, i;
};

template <class S>
struct TabulateResult {
    std::vector<TabulateRow<S>> rows;
    bool monotone_i = true;
};

/// Tabulates (n, s, t, z = t/s, i) over a grid; flags any inversion of the
/// i column.
template <class S>
TabulateResult<S> tabulate(const std::vector<S>& n_grid, int order) {
    const PerimeterSeries<S> ps = PerimeterSeries<S>::make(order);
    TabulateResult<S> out;
    out.rows.reserve(n_grid.size());
    for (const S& n : n_grid) {
        if (!(n > S(0)) || !(n < S(1)))
            throw InvalidArgument("tabulate: grid values must lie in (0, 1)");
        TabulateRow<S> row;
        row.n = n;
        row.s = ps.s(n);
        row.t = ps.t(n);
        row.z = row.t / row.s;
        row.i = i_of_n(n, order);
        if (!out.rows.empty() && !(row.i > out.rows.back().i)) out.monotone_i = false;
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace ellex
