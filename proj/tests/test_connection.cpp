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
using projconn::testing::Num;
using projconn::testing::q;
using projconn::testing::Rng;

namespace {

const std::vector<std::string> kXyz{"x", "y", "z"};
QuotientRing sphere() { return QuotientRing::from_text("x^2+y^2+z^2-1", kXyz); }

// Sphere p=q=r=1 evaluated first: D(M) = D(P)/2 with
// D(P) = [[D(x), D(y) + i D(z)], [D(y) - i D(z), -D(x)]], D given by the
// numeric images (dx, dy, dz) at a point.
Num sphere_dm(const GaussianRational& dx, const GaussianRational& dy, const GaussianRational& dz) {
    const GaussianRational i = GaussianRational::imaginary_unit(), h = q(1, 2);
    Num m = Num::zero(2);
    m(0, 0) = h * dx;
    m(0, 1) = h * (dy + i * dz);
    m(1, 0) = h * (dy - i * dz);
    m(1, 1) = -h * dx;
    return m;
}

Num sphere_m(const GaussianRational& x, const GaussianRational& y, const GaussianRational& z) {
    const GaussianRational i = GaussianRational::imaginary_unit(), h = q(1, 2);
    Num m = Num::zero(2);
    m(0, 0) = h * (1 + x);
    m(0, 1) = h * (y + i * z);
    m(1, 0) = h * (y - i * z);
    m(1, 1) = h * (1 - x);
    return m;
}

const std::vector<std::array<GaussianRational, 3>>& sphere_points() {
    static const std::vector<std::array<GaussianRational, 3>> pts{
        {q(3, 5), q(4, 5), 0}, {q(2, 7), q(3, 7), q(6, 7)}, {q(-2, 3), q(1, 3), q(2, 3)},
        {0, q(-12, 13), q(5, 13)}, {q(6, 11), q(-6, 11), q(7, 11)}};
    return pts;
}

}  // namespace

TEST_SUITE("conn") {
    TEST_CASE("presentation validation") {
        QuotientRing a = sphere();
        auto id = make_presentation(MatrixA::identity(a, 2));
        CHECK(id.psi().is_zero());
        CHECK(make_presentation(MatrixA::from_text(a, {{"1", "1"}, {"0", "0"}})).ambient_rank() == 2);
        CHECK_THROWS_AS(make_presentation(MatrixA::from_text(a, {{"x", "0"}, {"0", "0"}})), NotIdempotent);
        CHECK_THROWS_AS(make_presentation(MatrixA::zero(a, 2, 3)), DimensionMismatch);
        MatrixA proj = MatrixA::from_text(a, {{"1", "0"}, {"0", "0"}});
        CHECK_NOTHROW(make_presentation(proj, VectorA{a.zero(), a.one()}));
        CHECK_THROWS_AS(make_presentation(proj, VectorA{a.one(), a.zero()}), KernelNotAnnihilated);
        CHECK_THROWS_AS(make_presentation(proj, VectorA{a.zero(), a.zero()}), KernelNotAnnihilated);
        CHECK_THROWS_AS(make_presentation(proj, VectorA{a.zero()}), DimensionMismatch);
    }

    TEST_CASE("presentation invariants for the catalog examples") {
        for (int p = 2; p <= 3; ++p) {
            auto e = build_ellipsoid_cotangent(p, 3, 2);
            const auto& pr = e.presentation;
            MatrixA id = MatrixA::identity(e.ring, 3);
            CHECK((pr.phi() * pr.phi() - pr.phi()).is_zero());
            CHECK((pr.psi() * pr.psi() - pr.psi()).is_zero());
            CHECK((pr.phi() * pr.psi()).is_zero());
            CHECK(pr.phi() + pr.psi() == id);
        }
        auto s = build_sphere_line_bundle(2, 1, 1);
        CHECK(s.line_bundle.phi() == s.image_of_m.psi());
    }

    TEST_CASE("connection operator examples") {
        auto e = build_ellipsoid_cotangent(3, 2, 4);
        const QuotientRing& a = e.ring;
        // (D + d1(M))(dF) = (p-q) x^(p-1) y^(q-1) dF
        RingElement c = a.element("(3-2)*x^2*y");
        CHECK(connection_apply(e.presentation, e.derivations[0], e.dF) == scale(c, e.dF));
        CHECK(is_zero(connection_apply(e.presentation, e.derivations[1], VectorA(3, a.zero()))));
        CHECK_THROWS_AS(connection_apply(e.presentation, e.derivations[1], VectorA(2, a.zero())), DimensionMismatch);
        // A_d1(A_d2(dF)) = (p-r) x^(p-2) y^(q-1) z^(r-1) ((p-q) x^p + q(p-1)) dF
        VectorA nested = connection_apply(e.presentation, e.derivations[0],
                                          connection_apply(e.presentation, e.derivations[1], e.dF));
        RingElement s = a.element("(3-4)*x*y*z^3*((3-2)*x^3+2*(3-1))");
        CHECK(nested == scale(s, e.dF));
    }

    TEST_CASE("kernel stability under the connection") {
        for (auto [p, q, r] : {std::array{2, 2, 2}, std::array{2, 3, 4}, std::array{4, 2, 3}}) {
            auto e = build_ellipsoid_cotangent(p, q, r);
            for (const auto& d : e.derivations)
                CHECK(is_zero(e.presentation.phi() * connection_apply(e.presentation, d, e.dF)));
        }
    }

    TEST_CASE("curvature examples") {
        auto s = build_sphere_line_bundle(1, 1, 1);
        const auto& d = s.derivations;
        CHECK(curvature_matrix(s.line_bundle, d[0], d[0]).is_zero());
        MatrixA expected = MatrixA::from_text(
            s.ring, {{"-2*i*x^2/4", "2*x*(z-i*y)/4"}, {"-2*x*(z+i*y)/4", "2*i*x^2/4"}});
        CHECK(curvature_matrix(s.line_bundle, d[0], d[1]) == expected);
        CHECK(curvature_matrix(s.image_of_m, d[0], d[1]) == expected);

        auto e = build_ellipsoid_cotangent(2, 3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                MatrixA c = curvature_matrix(e.presentation, e.derivations[i], e.derivations[j]);
                CHECK(is_zero(c * e.dF));
                CHECK(kernel_annihilated(e.presentation, c) == std::optional<bool>(true));
            }
        CHECK_FALSE(kernel_annihilated(s.line_bundle, expected).has_value());
    }

    TEST_CASE("operator commutator equals d(Phi) on the standard basis") {
        // [D_d, Phi](u_j) = D_d(Phi u_j) - Phi D_d(u_j) = D_d(Phi u_j).
        auto e = build_ellipsoid_cotangent(2, 3, 2);
        const MatrixA& phi = e.presentation.phi();
        for (const auto& d : e.derivations) {
            MatrixA dphi = apply_to_matrix(d, phi);
            for (std::size_t j = 0; j < 3; ++j) CHECK(projconn::apply(d, phi.col(j)) == dphi.col(j));
        }
    }

    TEST_CASE("traces over image and kernel") {
        QuotientRing a = sphere();
        Rng rng(71);
        MatrixA c = commutator(rng.matrix(a, 2, 2), rng.matrix(a, 2, 2));
        auto id = make_presentation(MatrixA::identity(a, 2));
        CHECK(trace_over_image(id, c) == trace(c));
        CHECK(trace_over_kernel(id, c).is_zero());
        CHECK_THROWS_AS(trace_over_image(id, MatrixA::identity(a, 3)), DimensionMismatch);

        for (auto [p, q, r] : {std::array{2, 2, 2}, std::array{3, 4, 2}}) {
            auto e = build_ellipsoid_cotangent(p, q, r);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i + 1; j < 3; ++j) {
                    auto rep = curvature_report(e.presentation, e.derivations[i], e.derivations[j]);
                    CHECK(rep.trace_image.is_zero());
                    CHECK(rep.trace_kernel.is_zero());
                }
        }
    }

    TEST_CASE("sphere traces: symbolic result matches evaluate-first computation") {
        auto s = build_sphere_line_bundle(1, 1, 1);
        const auto& d = s.derivations;
        const QuotientRing& a = s.ring;
        // image of M: tr(M C M) = -1/2 i x, +1/2 i y, +1/2 i z for (D1,D2), (D1,D3), (D2,D3)
        const std::array<RingElement, 3> expected{a.element("-1/2*i*x"), a.element("1/2*i*y"), a.element("1/2*i*z")};
        const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
        for (std::size_t n = 0; n < 3; ++n) {
            auto [u, v] = pairs[n];
            MatrixA c = curvature_matrix(s.image_of_m, d[u], d[v]);
            CHECK(trace_over_image(s.image_of_m, c) == expected[n]);
            CHECK(trace_over_kernel(s.line_bundle, c) == expected[n]);
            CHECK(trace_over_image(s.line_bundle, c) == -expected[n]);
            for (const auto& pt : sphere_points()) {
                auto [x, y, z] = pt;
                // D1 = (y, -x, 0), D2 = (z, 0, -x), D3 = (0, -z, y)
                std::array<Num, 3> dm{sphere_dm(y, -x, 0), sphere_dm(z, 0, -x), sphere_dm(0, -z, y)};
                Num m = sphere_m(x, y, z);
                Num cn = dm[u] * dm[v] - dm[v] * dm[u];
                GaussianRational tr = (m * cn * m).trace();
                CHECK(tr == expected[n].evaluate(pt));
                CHECK(cn == projconn::testing::evaluate_num(c, pt));
            }
        }
        // (D_i, -D3) flips the sign: -1/2 i y and -1/2 i z
        CHECK(curvature_report(s.image_of_m, d[0], -d[2]).trace_image == a.element("-1/2*i*y"));
        CHECK(curvature_report(s.image_of_m, d[1], -d[2]).trace_image == a.element("-1/2*i*z"));
    }

    TEST_CASE("flatness") {
        auto e = build_ellipsoid_cotangent(2, 2, 2);
        CHECK(is_flat_pair(e.presentation, e.derivations[0], e.derivations[0]));
        CHECK_FALSE(is_flat_pair(e.presentation, e.derivations[0], e.derivations[1]));
        // free module: Phi = I, so d(Phi) = 0 for every derivation
        auto s = build_sphere_line_bundle(1, 1, 1);
        auto free = make_presentation(MatrixA::identity(s.ring, 2));
        CHECK(is_flat_pair(free, s.derivations[0], s.derivations[1]));
    }

    TEST_CASE("curvature is alternating and A-bilinear") {
        Rng rng(72);
        auto e = build_ellipsoid_cotangent(2, 2, 3);
        for (int k = 0; k < 30; ++k) {
            Derivation d = rng.derivation(e.derivations), f = rng.derivation(e.derivations);
            RingElement s = rng.element(e.ring, 2, 2);
            MatrixA c = curvature_matrix(e.presentation, d, f);
            CHECK(c == -curvature_matrix(e.presentation, f, d));
            CHECK(curvature_matrix(e.presentation, d.scaled(s), f) == c.scaled(s));
        }
    }

    TEST_CASE("modified curvature") {
        auto e = build_ellipsoid_cotangent(2, 2, 2);
        const auto& pr = e.presentation;
        const auto& d = e.derivations;
        const QuotientRing& a = e.ring;
        const MatrixA& phi = pr.phi();
        Derivation b = bracket(d[0], d[1]);
        MatrixA zero = MatrixA::zero(a, 3, 3);

        SUBCASE("zero potential gives the curvature on the module") {
            MatrixA got = modified_curvature(pr, d[0], d[1], b, {zero, zero, zero});
            CHECK(phi * got * phi == phi * curvature_matrix(pr, d[0], d[1]) * phi);
        }
        SUBCASE("scalar potentials") {
            Rng rng(73);
            for (int k = 0; k < 5; ++k) {
                RingElement s = rng.element(a, 2, 2), t = rng.element(a, 2, 2);
                CHECK_NOTHROW(modified_curvature(pr, d[0], d[1], b, {phi.scaled(s), phi.scaled(t), zero}));
            }
        }
        SUBCASE("Phi as every potential") { CHECK_NOTHROW(modified_curvature(pr, d[0], d[1], b, {phi, phi, phi})); }
        SUBCASE("errors") {
            MatrixA x = MatrixA::from_text(a, {{"x", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}});
            CHECK_THROWS_AS(modified_curvature(pr, d[0], d[1], b, {x, zero, zero}), PotentialNotPreserving);
            CHECK_THROWS_AS(modified_curvature(pr, d[0], d[1], d[2], {zero, zero, zero}), BracketMismatch);
            CHECK_THROWS_AS(modified_curvature(pr, d[0], d[1], b, {MatrixA::zero(a, 2, 2), zero, zero}),
                            DimensionMismatch);
        }
    }

    TEST_CASE("deviation") {
        QuotientRing a = sphere();
        std::vector<GaussianRational> pt{1, 0, 0};
        auto free = make_presentation(MatrixA::identity(a, 3));
        auto dv = deviation_report(free, pt);
        CHECK(dv.deviation == 0);
        auto e = build_ellipsoid_cotangent(2, 2, 2);
        dv = deviation_report(e.presentation, pt);
        CHECK(dv.ambient == 3);
        CHECK(dv.rank == 2);
        CHECK(dv.deviation == 1);
        auto s = build_sphere_line_bundle(1, 1, 1);
        dv = deviation_report(s.line_bundle, pt);
        CHECK(dv.ambient == 2);
        CHECK(dv.rank == 1);
        CHECK(dv.deviation == 1);
        CHECK_THROWS_AS(deviation_report(s.line_bundle, std::vector<GaussianRational>{1, 1, 0}), OffSurface);
    }
}
