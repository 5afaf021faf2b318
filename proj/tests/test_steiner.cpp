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

#include <doctest.h>

#include <cmath>
#include <random>

#include "ellex/oracles.hpp"
#include "ellex/steiner.hpp"

using ellex::Point2;
using ellex::Triangle;
using Vec2 = Point2<double>;

namespace {

Triangle<double> random_triangle(std::mt19937& rng) {
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    while (true) {
        const Vec2 p0(coord(rng), coord(rng)), p1(coord(rng), coord(rng)),
            p2(coord(rng), coord(rng));
        const Vec2 e1 = p1 - p0, e2 = p2 - p0;
        if (std::abs(e1.x() * e2.y() - e1.y() * e2.x()) > 0.5)
            return Triangle<double>::from_points(p0, p1, p2);
    }
}

}  // namespace

TEST_CASE("equilateral triangle gives the circumscribed circle") {
    Triangle<double> t;
    t.vB = Vec2(0, 0);
    t.vA = Vec2(1, 0);
    t.vC = Vec2(std::cos(M_PI / 3), std::sin(M_PI / 3));
    const auto r = ellex::steiner_ellipse(t);
    // x^2 + xy + y^2 - x - y = 0 in the frame
    CHECK(r.conic.A == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.conic.B == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.conic.C == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.conic.D == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(r.conic.E == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(r.conic.F == doctest::Approx(0.0));
    CHECK(r.area == doctest::Approx(M_PI / 3).epsilon(1e-14));
    const auto g = ellex::geometric_form(r.conic);
    CHECK(g.semi_major == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(g.semi_major - g.semi_minor < 1e-12);
    CHECK((g.center - ellex::centroid(t)).norm() < 1e-12);
}

TEST_CASE("area ratio is universal") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const auto t = random_triangle(rng);
        const auto r = ellex::steiner_ellipse(t);
        CHECK(r.area / t.area() ==
              doctest::Approx(ellex::steiner_area_ratio<double>()).epsilon(1e-12));
        // the closed-form conic is a real ellipse through the vertices
        CHECK(ellex::classify(r.conic) == ellex::ConicClass::Ellipse);
        CHECK(ellex::ellipse_area(r.conic) == doctest::Approx(r.area).epsilon(1e-10));
        const double a = t.side_a(), c = t.side_c();
        const Vec2 verts[3] = {Vec2(a, 0), Vec2(0, 0), Vec2(0, c)};
        for (const auto& v : verts) CHECK(ellex::conic_residual(r.conic, v) < 1e-10);
    }
    CHECK(ellex::steiner_area_ratio<double>() == doctest::Approx(2.41840).epsilon(1e-5));
}

TEST_CASE("isosceles case: explicit semiaxes") {
    const double a = 1.9, theta = 0.55;  // omega = 2*theta
    Triangle<double> t;
    t.vB = Vec2(0, 0);
    t.vA = Vec2(a, 0);
    t.vC = Vec2(a * std::cos(2 * theta), a * std::sin(2 * theta));
    const auto r = ellex::steiner_ellipse(t);
    const auto g = ellex::geometric_form(r.conic);
    const double s1 = 2.0 / 3.0 * a * std::cos(theta);
    const double s2 = 2.0 * a * std::sin(theta) / std::sqrt(3.0);
    CHECK(g.semi_major == doctest::Approx(std::max(s1, s2)).epsilon(1e-12));
    CHECK(g.semi_minor == doctest::Approx(std::min(s1, s2)).epsilon(1e-12));
}

TEST_CASE("area functional: value and stationarity at (a/c, 60 degrees)") {
    const double a = 3.0, c = 2.0, omega = 1.1;
    const double fmin = ellex::area_functional(a / c, M_PI / 3, a, c, omega);
    CHECK(fmin == doctest::Approx(2 * M_PI * a * c * std::sin(omega) / (3 * std::sqrt(3.0)))
                      .epsilon(1e-14));

    const double h = 1e-6;
    const double ds = (ellex::area_functional(a / c + h, M_PI / 3, a, c, omega) -
                       ellex::area_functional(a / c - h, M_PI / 3, a, c, omega)) /
                      (2 * h);
    CHECK(std::abs(ds) < 1e-6);
    const double dphi = (ellex::area_functional(a / c, M_PI / 3 + h, a, c, omega) -
                         ellex::area_functional(a / c, M_PI / 3 - h, a, c, omega)) /
                        (2 * h);
    CHECK(std::abs(dphi) < 1e-6);

    // grid minimum sits at (a/c, 60 degrees)
    const double s_best = ellex::grid_argmin(
        [&](double s) { return ellex::area_functional(s, M_PI / 3, a, c, omega); }, 0.05, 20.0,
        512);
    CHECK(std::abs(s_best - a / c) <= (20.0 - 0.05) / 511.0);
    const double phi_best = ellex::grid_argmin(
        [&](double phi) { return ellex::area_functional(a / c, phi, a, c, omega); }, 0.05,
        M_PI - 0.05, 512);
    CHECK(std::abs(phi_best - M_PI / 3) <= (M_PI - 0.1) / 511.0);

    CHECK_THROWS_AS(ellex::area_functional(-1.0, 1.0, a, c, omega), ellex::InvalidArgument);
}

TEST_CASE("steiner area is below the functional everywhere sampled") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const auto t = random_triangle(rng);
        const double best = ellex::steiner_ellipse(t).area;
        const double a = t.side_a(), c = t.side_c(), omega = t.omega();
        for (int is = 0; is < 40; ++is)
            for (int ip = 0; ip < 40; ++ip) {
                const double s = 0.05 + (20.0 - 0.05) * is / 39.0;
                const double phi = 0.05 + (M_PI - 0.1) * ip / 39.0;
                CHECK(best <= ellex::area_functional(s, phi, a, c, omega) * (1 + 1e-12));
            }
    }
}

TEST_CASE("centroid and centre") {
    Triangle<double> t;
    t.vB = Vec2(0, 0);
    t.vA = Vec2(3, 0);
    t.vC = Vec2(0, 3);
    CHECK((ellex::centroid(t) - Vec2(1, 1)).norm() < 1e-15);

    std::mt19937 rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        const auto tri = random_triangle(rng);
        const auto r = ellex::steiner_ellipse(tri);
        const auto g = ellex::geometric_form(r.conic);
        CHECK((g.center - ellex::centroid(tri)).norm() < 1e-10);
        // centre sits two thirds of the way down each median
        const Vec2 mid_bc = (tri.vB + tri.vC) / 2;
        const Vec2 along = tri.vA + 2.0 / 3.0 * (mid_bc - tri.vA);
        CHECK((g.center - along).norm() < 1e-10);
    }
}

TEST_CASE("vertex tangents are parallel to opposite sides") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        const auto t = random_triangle(rng);
        const auto r = ellex::steiner_ellipse(t);
        const auto dirs = ellex::vertex_tangents(r, t);
        const Vec2 opposite[3] = {(t.vC - t.vB).normalized(), (t.vC - t.vA).normalized(),
                                  (t.vA - t.vB).normalized()};
        for (int k = 0; k < 3; ++k) {
            const double cross = dirs[k].x() * opposite[k].y() - dirs[k].y() * opposite[k].x();
            CHECK(std::abs(cross) < 1e-9);
        }
    }

    // tangency point at frame coordinates (-a/3, 2c/3)
    Triangle<double> t;
    t.vB = Vec2(0, 0);
    t.vA = Vec2(2.5, 0);
    t.vC = Vec2(0.3, 1.7);
    const auto r = ellex::steiner_ellipse(t);
    const double a = t.side_a(), c = t.side_c();
    CHECK(ellex::conic_residual(r.conic, Vec2(-a / 3, 2 * c / 3)) < 1e-12);
}

TEST_CASE("frame vertex choice does not change the geometric ellipse") {
    const Vec2 p0(0.2, -0.4), p1(3.1, 0.5), p2(1.0, 2.2);
    const Vec2 order[3][3] = {{p0, p1, p2}, {p1, p2, p0}, {p2, p0, p1}};
    ellex::EllipseGeometry<double> ref;
    for (int k = 0; k < 3; ++k) {
        Triangle<double> t;
        t.vB = order[k][0];
        t.vA = order[k][1];
        t.vC = order[k][2];
        const auto g = ellex::geometric_form(ellex::steiner_ellipse(t).conic);
        if (k == 0) {
            ref = g;
        } else {
            CHECK((g.center - ref.center).norm() < 1e-9);
            CHECK(g.semi_major == doctest::Approx(ref.semi_major).epsilon(1e-9));
            CHECK(g.semi_minor == doctest::Approx(ref.semi_minor).epsilon(1e-9));
        }
    }
    // from_points picks the widest angle but the ellipse is the same
    const auto gf = ellex::geometric_form(
        ellex::steiner_ellipse(Triangle<double>::from_points(p0, p1, p2)).conic);
    CHECK((gf.center - ref.center).norm() < 1e-9);
}

TEST_CASE("affine naturality") {
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (int trial = 0; trial < 15; ++trial) {
        const auto t = random_triangle(rng);
        Eigen::Matrix2d linear;
        do {
            linear << entry(rng), entry(rng), entry(rng), entry(rng);
        } while (std::abs(linear.determinant()) < 0.3);
        const Vec2 shift(entry(rng), entry(rng));
        Triangle<double> tm;
        tm.vA = linear * t.vA + shift;
        tm.vB = linear * t.vB + shift;
        tm.vC = linear * t.vC + shift;
        const auto rm = ellex::steiner_ellipse(tm);
        const auto gm = ellex::geometric_form(rm.conic);
        // centres map to centres, areas scale by |det|
        const Vec2 mapped_center = linear * ellex::centroid(t) + shift;
        CHECK((gm.center - mapped_center).norm() < 1e-9);
        CHECK(rm.area == doctest::Approx(ellex::steiner_ellipse(t).area *
                                         std::abs(linear.determinant()))
                             .epsilon(1e-9));
    }
}

TEST_CASE("continued-fraction convergents of the ratio") {
    const auto c3 = ellex::ratio_convergents(3);
    REQUIRE(c3.size() == 3);
    CHECK(c3[0] == std::pair<long long, long long>(2, 1));
    CHECK(c3[1] == std::pair<long long, long long>(5, 2));
    CHECK(c3[2] == std::pair<long long, long long>(12, 5));

    const auto c7 = ellex::ratio_convergents(7);
    REQUIRE(c7.size() == 7);
    const std::pair<long long, long long> expected[7] = {{2, 1},   {5, 2},   {12, 5}, {17, 7},
                                                         {29, 12}, {104, 43}, {237, 98}};
    for (int k = 0; k < 7; ++k) CHECK(c7[static_cast<size_t>(k)] == expected[k]);

    // convergents alternate around the limit
    const double x = ellex::steiner_area_ratio<double>();
    for (size_t k = 0; k < c7.size(); ++k) {
        const double v = static_cast<double>(c7[k].first) / static_cast<double>(c7[k].second);
        if (k % 2 == 0)
            CHECK(v < x);
        else
            CHECK(v > x);
    }
    CHECK_THROWS_AS(ellex::ratio_convergents(0), ellex::InvalidArgument);
}

TEST_CASE("degenerate triangle is rejected") {
    Triangle<double> t;
    t.vB = Vec2(0, 0);
    t.vA = Vec2(1, 1);
    t.vC = Vec2(2, 2);
    CHECK_THROWS_AS(ellex::steiner_ellipse(t), ellex::DegenerateTriangle);
}
