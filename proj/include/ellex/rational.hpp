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

#include <cstdint>
#include <stdexcept>

#include "ellex/errors.hpp"

namespace ellex {

/// Exact rational arithmetic on 128-bit integers.
///
/// Wide enough for the perimeter-series coefficient products and the
/// partial-product/partial-sum identities up to a dozen or so terms, which is
/// all the exact layer is asked to certify. Every operation reduces to lowest
/// terms and throws on overflow rather than wrapping.
class Rational {
  public:
    using Int = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int n, Int d) : num_(n), den_(d) { normalize(); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        Int g = gcd_int(x.den_, y.den_);
        Int xs = y.den_ / g;
        Int ys = x.den_ / g;
        return Rational(checked_add(checked_mul(x.num_, xs), checked_mul(y.num_, ys)),
                        checked_mul(x.den_, xs));
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return x + Rational(-y.num_, y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        // Cross-reduce before multiplying to keep magnitudes down.
        Int g1 = gcd_int(x.num_, y.den_);
        Int g2 = gcd_int(y.num_, x.den_);
        return Rational(checked_mul(x.num_ / g1, y.num_ / g2),
                        checked_mul(x.den_ / g2, y.den_ / g1));
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw InvalidArgument("rational division by zero");
        return x * Rational(y.den_, y.num_);
    }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }

    bool is_one() const { return num_ == 1 && den_ == 1; }

  private:
    static Int iabs(Int v) { return v < 0 ? -v : v; }

    static Int gcd_int(Int a, Int b) {
        a = iabs(a);
        b = iabs(b);
        while (b != 0) {
            Int t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static Int checked_mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw NumericError("rational overflow in multiply");
        return r;
    }
    static Int checked_add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw NumericError("rational overflow in add");
        return r;
    }

    void normalize() {
        if (den_ == 0) throw InvalidArgument("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd_int(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int num_;
    Int den_;
};

}  // namespace ellex
