/*
   Copyright 2026 The projconn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace projconn {

/// Element a + b*i of the Gaussian rationals Q(i).
///
/// Both parts are kept in canonical mpq form (reduced, positive denominator),
/// so zero has exactly one representation and equality is structural.
class GaussianRational {
   public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT: implicit from integers
    GaussianRational(mpq_class re, mpq_class im = 0);

    /// Reduced fraction num/den; throws DivisionByZero when den == 0.
    static GaussianRational fraction(long num, long den);
    static GaussianRational imaginary_unit() { return GaussianRational(0, 1); }

    const mpq_class& real() const noexcept { return re_; }
    const mpq_class& imag() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    bool is_integer() const noexcept { return is_real() && re_.get_den() == 1; }

    GaussianRational conjugate() const { return {re_, -im_}; }
    /// Throws DivisionByZero for zero.
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Canonical text: `a`, `a/b`, `i`, `a/b*i` or `(a/b+c/d*i)`.
    std::string to_string() const;

    /// True when to_string() is a single factor that needs no parentheses in a product.
    bool prints_atomic() const noexcept { return is_real() || sgn(re_) == 0; }

   private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& c);

}  // namespace projconn
