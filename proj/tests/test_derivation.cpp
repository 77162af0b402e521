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

#include <doctest.h>

#include "projconn/catalog.hpp"
#include "projconn/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace projconn;
using projconn::testing::kCases;
using projconn::testing::Rng;

namespace {

const std::vector<std::string> kXyz{"x", "y", "z"};

QuotientRing sphere() { return QuotientRing::from_text("x^2+y^2+z^2-1", kXyz); }

Derivation from_text(const QuotientRing& a, std::vector<std::string_view> images, std::string label = {}) {
    std::vector<RingElement> els;
    for (auto t : images) els.push_back(a.element(t));
    return make_derivation(a, std::move(els), std::move(label));
}

}  // namespace

TEST_SUITE("deriv") {
    TEST_CASE("tangency is checked at construction") {
        QuotientRing a = sphere();
        CHECK_NOTHROW(from_text(a, {"y", "-x", "0"}));
        CHECK(from_text(a, {"0", "0", "0"}).is_zero());
        try {
            from_text(a, {"1", "0", "0"});
            FAIL("expected NotTangent");
        } catch (const NotTangent& e) {
            CHECK(std::string(e.what()).find("2*x") != std::string::npos);
        }
        CHECK_THROWS_AS(from_text(a, {"1", "0"}), DimensionMismatch);
        QuotientRing b = QuotientRing::from_text("x^3+y^2+z^2-1", kXyz);
        CHECK_THROWS_AS(make_derivation(a, {b.one(), b.zero(), b.zero()}), RingMismatch);
    }

    TEST_CASE("ellipsoid generators act on coordinates") {
        for (int q = 2; q <= 4; ++q) {
            auto e = build_ellipsoid_cotangent(3, q, 2);
            const QuotientRing& a = e.ring;
            // d1(x) = q*y^(q-1), d1(y) = -p*x^(p-1)
            CHECK(apply(e.derivations[0], a.variable(0)) == a.element(std::to_string(q) + "*y^" + std::to_string(q - 1)));
            CHECK(apply(e.derivations[0], a.variable(1)) == a.element("-3*x^2"));
            CHECK(apply(e.derivations[0], a.one()).is_zero());
        }
    }

    TEST_CASE("sphere D1 reproduces the first row of D1(M)") {
        QuotientRing a = sphere();
        Derivation d1 = from_text(a, {"y", "-x", "0"});
        CHECK(apply(d1, a.element("1+x")) == a.element("y"));
        CHECK(apply(d1, a.element("y+i*z")) == a.element("-x"));
        auto s = build_sphere_line_bundle(1, 1, 1);
        CHECK(apply_to_matrix(s.derivations[1], s.idempotent) ==
              MatrixA::from_text(s.ring, {{"z/2", "-i*x/2"}, {"i*x/2", "-z/2"}}));
        CHECK(apply_to_matrix(s.derivations[0], MatrixA::identity(s.ring, 2)).is_zero());
    }

    TEST_CASE("brackets") {
        auto s = build_sphere_line_bundle(1, 1, 1);
        const auto& d = s.derivations;
        CHECK(bracket(d[0], d[0]).is_zero());
        // [D1, D2] = z d/dy - y d/dz = -D3
        Derivation b = bracket(d[0], d[1]);
        CHECK(b == from_text(s.ring, {"0", "z", "-y"}));
        CHECK(b == -d[2]);
        CHECK(b.label() == "[D1,D2]");
        CHECK(b.to_string() == "z*d/dy - y*d/dz");
    }

    TEST_CASE("ellipsoid bracket relations for all (p,q,r) in {2,3,4}^3") {
        for (int p = 2; p <= 4; ++p)
            for (int q = 2; q <= 4; ++q)
                for (int r = 2; r <= 4; ++r) {
                    auto e = build_ellipsoid_cotangent(p, q, r);
                    const QuotientRing& a = e.ring;
                    const auto& d = e.derivations;
                    // coefficients written out by hand from the power rule
                    RingElement c12 = a.constant(p * (p - 1)) * a.variable(0).pow(static_cast<unsigned>(p - 2));
                    RingElement c13 = a.constant(-q * (q - 1)) * a.variable(1).pow(static_cast<unsigned>(q - 2));
                    RingElement c23 = a.constant(r * (r - 1)) * a.variable(2).pow(static_cast<unsigned>(r - 2));
                    CHECK(bracket(d[0], d[1]) == d[2].scaled(c12));
                    CHECK(bracket(d[0], d[2]) == d[1].scaled(c13));
                    CHECK(bracket(d[1], d[2]) == d[0].scaled(c23));
                }
    }

    TEST_CASE("printing") {
        QuotientRing a = sphere();
        CHECK(from_text(a, {"y", "-x", "0"}).to_string() == "y*d/dx - x*d/dy");
        CHECK(Derivation::zero(a).to_string() == "0");
        CHECK(from_text(a, {"z*y", "-x*z", "0"}).to_string() == "y*z*d/dx - x*z*d/dy");
        CHECK(from_text(a, {"y+z", "-x", "-x"}).to_string() == "(y+z)*d/dx - x*d/dy - x*d/dz");
    }

    TEST_CASE("Leibniz rule on random tangent derivations") {
        Rng rng(61);
        auto e = build_ellipsoid_cotangent(2, 3, 2);
        for (int k = 0; k < kCases; ++k) {
            Derivation d = rng.derivation(e.derivations);
            RingElement a = rng.element(e.ring), b = rng.element(e.ring);
            CHECK((apply(d, a * b) - a * apply(d, b) - b * apply(d, a)).is_zero());
        }
    }

    TEST_CASE("apply agrees with the chain rule on the lex oracle") {
        // delta(a) = sum_i (da/dx_i) delta(x_i), checked as an ideal membership.
        Rng rng(62);
        auto e = build_ellipsoid_cotangent(3, 2, 2);
        for (int k = 0; k < kCases; ++k) {
            Derivation d = rng.derivation(e.derivations);
            Polynomial a = rng.polynomial(e.ring.variables(), 4, 4);
            Polynomial chain(e.ring.variables());
            for (std::size_t i = 0; i < 3; ++i) chain += a.partial_derivative(i) * d.image(i).representative();
            CHECK(projconn::testing::congruent(apply(d, a), chain));
        }
    }

    TEST_CASE("bracket antisymmetry and Jacobi") {
        Rng rng(63);
        auto e = build_ellipsoid_cotangent(3, 3, 2);
        const auto& d = e.derivations;
        CHECK((bracket(bracket(d[0], d[1]), d[2]) + bracket(bracket(d[1], d[2]), d[0]) +
               bracket(bracket(d[2], d[0]), d[1]))
                  .is_zero());
        for (int k = 0; k < kCases; ++k) {
            Derivation a = rng.derivation(d), b = rng.derivation(d), c = rng.derivation(d);
            CHECK(bracket(a, b) == -bracket(b, a));
            if (k < 20)
                CHECK((bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)).is_zero());
        }
    }

    TEST_CASE("matrix Leibniz rule") {
        Rng rng(64);
        auto s = build_sphere_line_bundle(1, 2, 1);
        for (int k = 0; k < kCases; ++k) {
            Derivation d = rng.derivation(s.derivations);
            MatrixA m = rng.matrix(s.ring, 2, 2), n = rng.matrix(s.ring, 2, 2);
            CHECK(apply_to_matrix(d, m * n) == apply_to_matrix(d, m) * n + m * apply_to_matrix(d, n));
        }
    }
}
