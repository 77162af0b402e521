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

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "projconn/quotient_ring.hpp"

namespace projconn {

using VectorA = std::vector<RingElement>;

/// Dense matrix over a quotient ring, entries in normal form, row-major.
class MatrixA {
   public:
    /// rows x cols zero matrix.
    MatrixA(QuotientRing ring, std::size_t rows, std::size_t cols);
    /// Throws DimensionMismatch on a wrong entry count, RingMismatch on a foreign entry.
    MatrixA(QuotientRing ring, std::size_t rows, std::size_t cols, std::vector<RingElement> entries);

    static MatrixA identity(const QuotientRing& ring, std::size_t n);
    static MatrixA zero(const QuotientRing& ring, std::size_t rows, std::size_t cols);
    /// Rows of polynomial text, e.g. {{"1-x^2", "-x*y"}, {...}}.
    static MatrixA from_text(const QuotientRing& ring,
                             std::initializer_list<std::initializer_list<std::string_view>> rows);
    static MatrixA column(const VectorA& v);

    const QuotientRing& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const RingElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    RingElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const std::vector<RingElement>& entries() const noexcept { return entries_; }
    VectorA col(std::size_t c) const;

    bool is_zero() const noexcept;

    MatrixA operator-() const;
    friend MatrixA operator+(const MatrixA& a, const MatrixA& b);
    friend MatrixA operator-(const MatrixA& a, const MatrixA& b);
    friend MatrixA operator*(const MatrixA& a, const MatrixA& b);
    friend VectorA operator*(const MatrixA& a, const VectorA& v);
    MatrixA scaled(const RingElement& a) const;
    MatrixA scaled(const GaussianRational& c) const;
    MatrixA transpose() const;

    /// `[[a, b], [c, d]]` with canonical entry text.
    std::string to_string() const;
    /// Nested rows of canonical entry text.
    std::vector<std::vector<std::string>> to_text_rows() const;

    friend bool operator==(const MatrixA& a, const MatrixA& b);

   private:
    QuotientRing ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<RingElement> entries_;
};

MatrixA add(const MatrixA& a, const MatrixA& b);
MatrixA mul(const MatrixA& a, const MatrixA& b);
MatrixA negate(const MatrixA& a);
MatrixA scale(const RingElement& a, const MatrixA& m);
MatrixA transpose(const MatrixA& m);

/// AB - BA for square matrices of equal size.
MatrixA commutator(const MatrixA& a, const MatrixA& b);
RingElement trace(const MatrixA& m);
/// Cofactor expansion; square and at most 6x6.
RingElement determinant(const MatrixA& m);

bool is_zero(const VectorA& v);
VectorA add(const VectorA& a, const VectorA& b);
VectorA sub(const VectorA& a, const VectorA& b);
VectorA scale(const RingElement& a, const VectorA& v);
std::string to_string(const VectorA& v);

/// P_g(t) = det(t*I - g) as coefficients over A, highest degree first.
struct CharPoly {
    std::vector<RingElement> coefficients;

    std::size_t degree() const noexcept { return coefficients.size() - 1; }
    /// Coefficient of t^k.
    const RingElement& coefficient(std::size_t k) const { return coefficients[degree() - k]; }
    /// Substitutes a square matrix for t.
    MatrixA evaluate(const MatrixA& g) const;
    friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
    friend bool operator==(const CharPoly&, const CharPoly&) = default;
    std::string to_string() const;
};

/// Square and at most 6x6.
CharPoly char_poly(const MatrixA& g);

/// Matrix with Gaussian rational entries, row-major.
struct NumericMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<GaussianRational> entries;
};

/// Evaluates every entry at an on-surface point; throws OffSurface.
NumericMatrix evaluate(const MatrixA& m, std::span<const GaussianRational> point);
/// Rank over Q(i) by exact Gaussian elimination.
std::size_t rank(NumericMatrix m);
/// Rank of m evaluated at an on-surface point; throws OffSurface.
std::size_t rank_at_point(const MatrixA& m, std::span<const GaussianRational> point);

}  // namespace projconn
