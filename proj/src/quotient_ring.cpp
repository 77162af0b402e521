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

#include "projconn/quotient_ring.hpp"

#include <stdexcept>

#include "projconn/errors.hpp"

namespace projconn {

QuotientRing::QuotientRing(Polynomial modulus, MonomialOrder order) {
    if (modulus.is_constant()) throw std::invalid_argument("hypersurface modulus must be non-constant");
    if (order.arity() != modulus.arity()) throw ArityMismatch("monomial order arity differs from modulus");
    Monomial lead = leading_term(modulus, order).monomial;
    data_ = std::make_shared<const Data>(Data{std::move(modulus), std::move(order), std::move(lead)});
}

QuotientRing::QuotientRing(Polynomial modulus)
    : QuotientRing(modulus, MonomialOrder::grevlex(modulus.arity())) {}

QuotientRing QuotientRing::from_text(std::string_view modulus, std::vector<std::string> names) {
    return QuotientRing(parse(modulus, make_variables(std::move(names))));
}

bool operator==(const QuotientRing& a, const QuotientRing& b) {
    if (a.data_ == b.data_) return true;
    return *a.variables() == *b.variables() && a.order() == b.order() && a.modulus() == b.modulus();
}

void require_same_ring(const QuotientRing& a, const QuotientRing& b) {
    if (!(a == b)) throw RingMismatch("operands belong to different quotient rings");
}

RingElement QuotientRing::nf(const Polynomial& p) const {
    if (p.arity() != arity())
        throw ArityMismatch("polynomial arity " + std::to_string(p.arity()) + " differs from ring arity " +
                            std::to_string(arity()));
    // Already reduced when no term is divisible by the leading monomial of f.
    const Monomial& lead = data_->lead;
    bool reduced = true;
    for (const auto& t : p.terms())
        if (lead.divides(t.monomial)) {
            reduced = false;
            break;
        }
    Polynomial rep = reduced ? p : divide_remainder(p, modulus(), order()).remainder;
    if (p.variables() != variables()) rep = Polynomial::from_terms(variables(), rep.terms());
    return RingElement(*this, std::move(rep));
}

RingElement QuotientRing::element(std::string_view text) const { return nf(parse(text, variables())); }
RingElement QuotientRing::zero() const { return RingElement(*this, Polynomial(variables())); }
RingElement QuotientRing::one() const { return nf(Polynomial::constant(variables(), 1)); }
RingElement QuotientRing::constant(const GaussianRational& c) const {
    return nf(Polynomial::constant(variables(), c));
}
RingElement QuotientRing::variable(std::size_t index) const {
    return nf(Polynomial::variable(variables(), index));
}

bool QuotientRing::contains_point(std::span<const GaussianRational> point) const {
    return modulus().evaluate(point).is_zero();
}

void QuotientRing::require_on_surface(std::span<const GaussianRational> point) const {
    if (!contains_point(point)) throw OffSurface("point does not lie on the hypersurface " + modulus().to_string());
}

RingElement RingElement::operator-() const { return RingElement(ring_, -rep_); }

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring_, b.ring_);
    return a.ring_.nf(a.rep_ + b.rep_);
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring_, b.ring_);
    return a.ring_.nf(a.rep_ - b.rep_);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring_, b.ring_);
    return a.ring_.nf(a.rep_ * b.rep_);
}

RingElement RingElement::scaled(const GaussianRational& c) const { return RingElement(ring_, rep_.scaled(c)); }

RingElement RingElement::pow(unsigned e) const {
    RingElement result = ring_.one();
    RingElement base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

GaussianRational RingElement::evaluate(std::span<const GaussianRational> point) const {
    if (point.size() != ring_.arity()) throw ArityMismatch("point length differs from ring arity");
    ring_.require_on_surface(point);
    return rep_.evaluate(point);
}

bool operator==(const RingElement& a, const RingElement& b) { return a.ring_ == b.ring_ && a.rep_ == b.rep_; }

RingElement nf(const Polynomial& p, const QuotientRing& ring) { return ring.nf(p); }
RingElement add(const RingElement& a, const RingElement& b) { return a + b; }
RingElement mul(const RingElement& a, const RingElement& b) { return a * b; }
RingElement negate(const RingElement& a) { return -a; }
RingElement scale(const GaussianRational& c, const RingElement& a) { return a.scaled(c); }
GaussianRational evaluate(const RingElement& a, std::span<const GaussianRational> point) {
    return a.evaluate(point);
}

}  // namespace projconn
