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

#include <string>
#include <vector>

#include "projconn/matrix.hpp"

namespace projconn {

/// Derivation of A = k[x1..xn]/(f), stored as the images of the generators.
///
/// Construction enforces tangency, delta(f) = 0 in A, so every instance
/// descends to A. Equality is component-wise in A; the label is cosmetic.
class Derivation {
   public:
    const QuotientRing& ring() const noexcept { return ring_; }
    const std::vector<RingElement>& images() const noexcept { return images_; }
    const RingElement& image(std::size_t k) const { return images_.at(k); }
    const std::string& label() const noexcept { return label_; }
    Derivation with_label(std::string label) const;

    bool is_zero() const noexcept;

    /// a * delta; tangency is preserved, so no re-check.
    Derivation scaled(const RingElement& a) const;
    Derivation operator-() const;
    friend Derivation operator+(const Derivation& a, const Derivation& b);

    /// `a1*d/dx + a2*d/dy + ...`, zero components omitted; `0` for the zero derivation.
    std::string to_string() const;

    friend bool operator==(const Derivation& a, const Derivation& b) {
        return a.ring_ == b.ring_ && a.images_ == b.images_;
    }

    static Derivation zero(const QuotientRing& ring);

   private:
    friend Derivation make_derivation(const QuotientRing&, std::vector<RingElement>, std::string);
    Derivation(QuotientRing ring, std::vector<RingElement> images, std::string label)
        : ring_(std::move(ring)), images_(std::move(images)), label_(std::move(label)) {}

    QuotientRing ring_;
    std::vector<RingElement> images_;
    std::string label_;
};

/// Throws NotTangent (with the nonzero normal form of delta(f) in the message)
/// when the images do not define a derivation of A; DimensionMismatch on a
/// wrong image count; RingMismatch on foreign images.
Derivation make_derivation(const QuotientRing& ring, std::vector<RingElement> images, std::string label = {});

/// sum_i (d rep / d x_i) * delta(x_i), reduced.
RingElement apply(const Derivation& d, const RingElement& a);
/// Acts on a polynomial representative directly; the result is reduced in A.
RingElement apply(const Derivation& d, const Polynomial& p);
/// Entry-wise action, producing delta(M).
MatrixA apply_to_matrix(const Derivation& d, const MatrixA& m);
/// Component-wise action D_delta on A^n.
VectorA apply(const Derivation& d, const VectorA& v);

/// [delta, eta] with images delta(eta(x_i)) - eta(delta(x_i)).
Derivation bracket(const Derivation& d, const Derivation& e);

}  // namespace projconn
