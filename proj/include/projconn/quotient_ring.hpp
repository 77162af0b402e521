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

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "projconn/polynomial.hpp"

namespace projconn {

class RingElement;

/// The hypersurface ring A = Q(i)[x1..xn]/(f).
///
/// A cheap handle to shared immutable data. Two handles are equal when their
/// variables, modulus and order agree, regardless of identity.
class QuotientRing {
   public:
    /// Throws std::invalid_argument when the modulus is constant.
    QuotientRing(Polynomial modulus, MonomialOrder order);
    explicit QuotientRing(Polynomial modulus);
    static QuotientRing from_text(std::string_view modulus, std::vector<std::string> names);

    std::size_t arity() const noexcept { return data_->modulus.arity(); }
    const Variables& variables() const noexcept { return data_->modulus.variables(); }
    const Polynomial& modulus() const noexcept { return data_->modulus; }
    const MonomialOrder& order() const noexcept { return data_->order; }

    /// Normal form of p modulo f; throws ArityMismatch.
    RingElement nf(const Polynomial& p) const;
    /// Parses `text` over this ring's variables and reduces it.
    RingElement element(std::string_view text) const;
    RingElement zero() const;
    RingElement one() const;
    RingElement constant(const GaussianRational& c) const;
    RingElement variable(std::size_t index) const;

    bool contains_point(std::span<const GaussianRational> point) const;
    /// Throws OffSurface unless f vanishes at `point`.
    void require_on_surface(std::span<const GaussianRational> point) const;

    friend bool operator==(const QuotientRing& a, const QuotientRing& b);

   private:
    struct Data {
        Polynomial modulus;
        MonomialOrder order;
        Monomial lead;
    };
    std::shared_ptr<const Data> data_;
};

/// Residue class in A, held by its normal-form representative.
class RingElement {
   public:
    const QuotientRing& ring() const noexcept { return ring_; }
    const Polynomial& representative() const noexcept { return rep_; }

    bool is_zero() const noexcept { return rep_.is_zero(); }

    RingElement operator-() const;
    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
    RingElement scaled(const GaussianRational& c) const;
    RingElement pow(unsigned e) const;

    /// Value at a point of the hypersurface; throws OffSurface otherwise.
    GaussianRational evaluate(std::span<const GaussianRational> point) const;

    std::string to_string() const { return rep_.to_string(); }

    /// Equal rings and equal normal forms.
    friend bool operator==(const RingElement& a, const RingElement& b);

   private:
    friend class QuotientRing;
    RingElement(QuotientRing ring, Polynomial rep) : ring_(std::move(ring)), rep_(std::move(rep)) {}

    QuotientRing ring_;
    Polynomial rep_;
};

RingElement nf(const Polynomial& p, const QuotientRing& ring);
RingElement add(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
RingElement negate(const RingElement& a);
RingElement scale(const GaussianRational& c, const RingElement& a);
inline bool is_zero(const RingElement& a) { return a.is_zero(); }
GaussianRational evaluate(const RingElement& a, std::span<const GaussianRational> point);

/// Throws RingMismatch unless the rings are equal.
void require_same_ring(const QuotientRing& a, const QuotientRing& b);

}  // namespace projconn
