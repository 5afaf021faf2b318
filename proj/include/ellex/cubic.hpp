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
#include <array>
#include <cmath>

#include "ellex/errors.hpp"

namespace ellex {

/// Value of c3*x^3 + c2*x^2 + c1*x + c0.
template <class S>
S eval_cubic(S c3, S c2, S c1, S c0, S x) {
    return ((c3 * x + c2) * x + c1) * x + c0;
}

/// Discriminant of c3*x^3 + c2*x^2 + c1*x + c0; positive iff three distinct
/// real roots.
template <class S>
S cubic_discriminant(S c3, S c2, S c1, S c0) {
    return S(18) * c3 * c2 * c1 * c0 - S(4) * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 -
           S(4) * c3 * c1 * c1 * c1 - S(27) * c3 * c3 * c0 * c0;
}

/// All three real roots of a cubic with positive discriminant, ascending.
///
/// Uses the trigonometric form of Cardano's solution, which covers the
/// three-real-root branch without complex arithmetic, then polishes each root
/// with two Newton steps to absorb cancellation in the depressed-cubic shift.
template <class S>
std::array<S, 3> solve_cubic_three_real(S c3, S c2, S c1, S c0) {
    if (c3 == S(0)) throw InvalidArgument("cubic: leading coefficient is zero");
    const S b = c2 / c3;
    const S c = c1 / c3;
    const S d = c0 / c3;
    const S shift = b / S(3);
    const S p = c - b * b / S(3);
    const S q = S(2) * b * b * b / S(27) - b * c / S(3) + d;

    std::array<S, 3> roots;
    if (p >= S(0)) {
        // Only reachable at (near-)triple roots; the pencil cubic always has
        // p < 0, but keep the solver total.
        const S r = std::cbrt(-q);
        roots = {r - shift, r - shift, r - shift};
    } else {
        const S m = S(2) * std::sqrt(-p / S(3));
        S arg = S(3) * q / (p * m);
        arg = std::clamp(arg, S(-1), S(1));
        const S theta = std::acos(arg) / S(3);
        const S two_pi_3 = S(2) * S(M_PI) / S(3);
        for (int k = 0; k < 3; ++k)
            roots[static_cast<size_t>(k)] = m * std::cos(theta - two_pi_3 * S(k)) - shift;
    }

    for (S& r : roots) {
        for (int it = 0; it < 2; ++it) {
            const S f = eval_cubic(c3, c2, c1, c0, r);
            const S df = (S(3) * c3 * r + S(2) * c2) * r + c1;
            if (df != S(0)) r -= f / df;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace ellex
