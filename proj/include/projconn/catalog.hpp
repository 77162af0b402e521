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
#include <string_view>
#include <variant>
#include <vector>

#include "projconn/connection.hpp"

namespace projconn {

struct Params {
    int p = 0;
    int q = 0;
    int r = 0;
    friend bool operator==(const Params&, const Params&) = default;
};

/// Cotangent module of A = Q(i)[x,y,z]/(x^p + y^q + z^r - 1), presented as the
/// image of M = I - dF * (x/p, y/q, z/r)^T inside A^3, with kernel A*dF.
struct EllipsoidCotangent {
    Params params;
    QuotientRing ring;
    VectorA dF;
    ProjectivePresentation presentation;
    /// d1 = f_y d/dx - f_x d/dy, d2 = f_z d/dx - f_x d/dz, d3 = f_z d/dy - f_y d/dz.
    std::vector<Derivation> derivations;
};

/// Requires p, q, r >= 2 (InvalidParameters otherwise); verifies all invariants.
EllipsoidCotangent build_ellipsoid_cotangent(int p, int q, int r);

/// Line bundle on x^(2p) + y^(2q) + z^(2r) = 1 cut out by the involution
/// P = [[x^p, y^q + i z^r], [y^q - i z^r, -x^p]] and M = (P + I)/2.
///
/// L = ker(M) = im(I - M), so `line_bundle` uses Phi_L = I - M; `image_of_m`
/// presents the complementary summand im(M).
struct SphereLineBundle {
    Params params;
    QuotientRing ring;
    MatrixA involution;
    MatrixA idempotent;
    ProjectivePresentation line_bundle;
    ProjectivePresentation image_of_m;
    /// D1 = q y^(2q-1) d/dx - p x^(2p-1) d/dy, D2 = r z^(2r-1) d/dx - p x^(2p-1) d/dz,
    /// D3 = q y^(2q-1) d/dz - r z^(2r-1) d/dy.
    std::vector<Derivation> derivations;
};

/// Requires p, q, r >= 1 (InvalidParameters otherwise); verifies P^2 = I.
SphereLineBundle build_sphere_line_bundle(int p, int q, int r);

/// Ring used by an example family for the given parameters.
QuotientRing ellipsoid_ring(const Params& params);
QuotientRing sphere_ring(const Params& params);

using Expected = std::variant<RingElement, VectorA, MatrixA>;

/// Transcribed displays for an example family, instantiated at `params` and
/// parsed into its ring. Throws UnknownCheck for an unknown id, or for a
/// display that only exists at particular parameters.
Expected paper_expected(std::string_view example, std::string_view check, const Params& params);

/// Ids accepted by paper_expected for an example.
std::vector<std::string> paper_expected_ids(std::string_view example);

/// Substitutes every `{expr}` (an expression in p, q, r) by its value.
/// Non-negative integers print bare; anything else is parenthesized.
std::string instantiate(std::string_view text, const Params& params);

}  // namespace projconn
