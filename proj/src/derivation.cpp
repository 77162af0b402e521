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

#include "projconn/derivation.hpp"

#include <algorithm>

#include "projconn/errors.hpp"

namespace projconn {

namespace {

Polynomial action(const QuotientRing& ring, const std::vector<RingElement>& images, const Polynomial& p) {
    Polynomial sum(ring.variables());
    for (std::size_t k = 0; k < images.size(); ++k) {
        if (images[k].is_zero()) continue;
        Polynomial dp = p.partial_derivative(k);
        if (dp.is_zero()) continue;
        sum += dp * images[k].representative();
    }
    return sum;
}

}  // namespace

Derivation make_derivation(const QuotientRing& ring, std::vector<RingElement> images, std::string label) {
    if (images.size() != ring.arity())
        throw DimensionMismatch("derivation needs " + std::to_string(ring.arity()) + " images, got " +
                                std::to_string(images.size()));
    for (const auto& im : images) require_same_ring(ring, im.ring());
    RingElement df = ring.nf(action(ring, images, ring.modulus()));
    if (!df.is_zero())
        throw NotTangent("delta(f) = " + df.to_string() + " is nonzero in A; not a derivation of the quotient");
    return Derivation(ring, std::move(images), std::move(label));
}

Derivation Derivation::zero(const QuotientRing& ring) {
    return Derivation(ring, std::vector<RingElement>(ring.arity(), ring.zero()), "0");
}

Derivation Derivation::with_label(std::string label) const {
    Derivation d(*this);
    d.label_ = std::move(label);
    return d;
}

bool Derivation::is_zero() const noexcept {
    return std::all_of(images_.begin(), images_.end(), [](const RingElement& e) { return e.is_zero(); });
}

Derivation Derivation::scaled(const RingElement& a) const {
    require_same_ring(ring_, a.ring());
    std::vector<RingElement> im;
    im.reserve(images_.size());
    for (const auto& e : images_) im.push_back(a * e);
    return Derivation(ring_, std::move(im), {});
}

Derivation Derivation::operator-() const {
    std::vector<RingElement> im;
    im.reserve(images_.size());
    for (const auto& e : images_) im.push_back(-e);
    return Derivation(ring_, std::move(im), label_.empty() ? std::string{} : "-" + label_);
}

Derivation operator+(const Derivation& a, const Derivation& b) {
    require_same_ring(a.ring_, b.ring_);
    std::vector<RingElement> im;
    im.reserve(a.images_.size());
    for (std::size_t k = 0; k < a.images_.size(); ++k) im.push_back(a.images_[k] + b.images_[k]);
    return Derivation(a.ring_, std::move(im), {});
}

std::string Derivation::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < images_.size(); ++k) {
        const auto& c = images_[k];
        if (c.is_zero()) continue;
        std::string coeff = c.to_string();
        std::string d = "d/d" + (*ring_.variables())[k];
        std::string term;
        bool negative = false;
        if (c.representative().size() > 1) {
            term = "(" + coeff + ")*" + d;
        } else {
            negative = coeff.front() == '-';
            if (negative) coeff.erase(0, 1);
            term = coeff == "1" ? d : coeff + "*" + d;
        }
        if (s.empty())
            s = negative ? "-" + term : term;
        else
            s += (negative ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

RingElement apply(const Derivation& d, const RingElement& a) {
    require_same_ring(d.ring(), a.ring());
    return d.ring().nf(action(d.ring(), d.images(), a.representative()));
}

RingElement apply(const Derivation& d, const Polynomial& p) {
    return d.ring().nf(action(d.ring(), d.images(), p));
}

MatrixA apply_to_matrix(const Derivation& d, const MatrixA& m) {
    require_same_ring(d.ring(), m.ring());
    std::vector<RingElement> out;
    out.reserve(m.entries().size());
    for (const auto& e : m.entries()) out.push_back(apply(d, e));
    return MatrixA(m.ring(), m.rows(), m.cols(), std::move(out));
}

VectorA apply(const Derivation& d, const VectorA& v) {
    VectorA out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(apply(d, e));
    return out;
}

Derivation bracket(const Derivation& d, const Derivation& e) {
    require_same_ring(d.ring(), e.ring());
    std::vector<RingElement> im;
    im.reserve(d.images().size());
    for (std::size_t k = 0; k < d.images().size(); ++k)
        im.push_back(apply(d, e.image(k)) - apply(e, d.image(k)));
    std::string label;
    if (!d.label().empty() && !e.label().empty()) label = "[" + d.label() + "," + e.label() + "]";
    // The bracket of tangent derivations is tangent; the constructor re-verifies.
    return make_derivation(d.ring(), std::move(im), std::move(label));
}

}  // namespace projconn
