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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "projconn/gaussian_rational.hpp"

namespace projconn {

using Exponent = std::uint32_t;

/// Exponent vector, one entry per ring variable.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    std::size_t arity() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept;
    bool is_one() const noexcept;
    bool divides(const Monomial& other) const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// a / b; requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

   private:
    std::vector<Exponent> exps_;
};

/// Graded reverse lexicographic order over a variable precedence.
///
/// precedence[0] is the largest variable. Ties in total degree are broken by the
/// smallest variable: the monomial with the smaller exponent there is larger.
class MonomialOrder {
   public:
    /// grevlex with declaration order x1 > x2 > ... > xn.
    static MonomialOrder grevlex(std::size_t arity);
    /// Throws std::invalid_argument unless `precedence` is a permutation of 0..n-1.
    static MonomialOrder grevlex(std::vector<std::size_t> precedence);

    std::size_t arity() const noexcept { return precedence_.size(); }
    const std::vector<std::size_t>& precedence() const noexcept { return precedence_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

   private:
    explicit MonomialOrder(std::vector<std::size_t> precedence) : precedence_(std::move(precedence)) {}
    std::vector<std::size_t> precedence_;
};

/// Immutable list of variable names shared between polynomials of one ring.
using Variables = std::shared_ptr<const std::vector<std::string>>;

/// Validated variable list; names must be identifiers, distinct, and not the reserved `i`.
Variables make_variables(std::vector<std::string> names);

struct Term {
    Monomial monomial;
    GaussianRational coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over Q(i).
///
/// Terms are stored strictly descending in grevlex over declaration order with no
/// zero coefficients, so the representation is canonical and == is structural.
class Polynomial {
   public:
    explicit Polynomial(Variables vars);

    static Polynomial constant(Variables vars, const GaussianRational& c);
    static Polynomial variable(Variables vars, std::size_t index);
    static Polynomial monomial(Variables vars, Monomial m, const GaussianRational& c = 1);
    /// Builds from arbitrary terms (any order, duplicates summed, zeros dropped).
    static Polynomial from_terms(Variables vars, std::vector<Term> terms);

    std::size_t arity() const noexcept { return vars_->size(); }
    const Variables& variables() const noexcept { return vars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term (0 if absent).
    GaussianRational constant_term() const;
    std::uint64_t total_degree() const noexcept;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p) { return p.scaled(c); }

    Polynomial scaled(const GaussianRational& c) const;
    /// c * m * this; stays sorted because grevlex is multiplicative.
    Polynomial shifted(const Monomial& m, const GaussianRational& c) const;
    Polynomial pow(unsigned exponent) const;

    /// Throws std::out_of_range if `index >= arity()`.
    Polynomial partial_derivative(std::size_t index) const;

    /// Value at a point of length arity(); throws ArityMismatch otherwise.
    GaussianRational evaluate(std::span<const GaussianRational> point) const;

    /// Canonical text, terms descending in grevlex.
    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.arity() == b.arity() && a.terms_ == b.terms_;
    }

   private:
    void check_arity(const Polynomial& o) const;
    Polynomial& merge_in(const Polynomial& o, bool subtract);

    Variables vars_;
    std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial negate(const Polynomial& p);
Polynomial scale(const GaussianRational& c, const Polynomial& p);
Polynomial partial_derivative(const Polynomial& p, std::size_t index);

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Multivariate division by a single nonzero divisor under `order`.
///
/// p = quotient*f + remainder and no remainder monomial is divisible by the
/// leading monomial of f. A principal ideal's generator is a Groebner basis of
/// it, so the remainder is the unique normal form of p modulo (f).
/// Throws DivisionByZero if f is zero, ArityMismatch on differing arities.
DivisionResult divide_remainder(const Polynomial& p, const Polynomial& f, const MonomialOrder& order);

/// Leading term of p under `order`; p must be nonzero.
const Term& leading_term(const Polynomial& p, const MonomialOrder& order);

/// Parses polynomial text over the given variables.
///
/// Grammar (loosest first): `+ -` binary, `* /`, unary `-`, `^` with a
/// non-negative integer literal exponent. `i` is the imaginary unit. Division
/// is only by nonzero constants. Implicit multiplication is rejected.
/// Throws ParseError carrying the offending byte offset.
Polynomial parse(std::string_view text, const Variables& vars);

}  // namespace projconn
