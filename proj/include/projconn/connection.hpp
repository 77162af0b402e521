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

#include <optional>
#include <span>
#include <string>

#include "projconn/derivation.hpp"

namespace projconn {

/// A projective module E presented as the image of an idempotent Phi on A^n.
///
/// Phi is the fundamental matrix of the presentation, Psi = I - Phi projects
/// onto the complement K = ker(Phi). An optional generator k of K (for a
/// hypersurface cotangent module, the coefficient vector of dF) is checked to
/// satisfy Phi*k = 0.
class ProjectivePresentation {
   public:
    const QuotientRing& ring() const noexcept { return phi_.ring(); }
    std::size_t ambient_rank() const noexcept { return phi_.rows(); }
    const MatrixA& phi() const noexcept { return phi_; }
    const MatrixA& psi() const noexcept { return psi_; }
    const std::optional<VectorA>& kernel_generator() const noexcept { return kernel_; }

   private:
    friend ProjectivePresentation make_presentation(const MatrixA&, std::optional<VectorA>);
    ProjectivePresentation(MatrixA phi, MatrixA psi, std::optional<VectorA> kernel)
        : phi_(std::move(phi)), psi_(std::move(psi)), kernel_(std::move(kernel)) {}

    MatrixA phi_;
    MatrixA psi_;
    std::optional<VectorA> kernel_;
};

/// Verifies Phi^2 = Phi (NotIdempotent, with the nonzero entry of Phi^2 - Phi
/// in the message) and, when given, Phi*k = 0 with k != 0 (KernelNotAnnihilated).
ProjectivePresentation make_presentation(const MatrixA& phi, std::optional<VectorA> kernel_generator = {});

/// A_delta(v) = D_delta(v) + delta(Phi)*v.
VectorA connection_apply(const ProjectivePresentation& p, const Derivation& d, const VectorA& v);

/// [delta(Phi), eta(Phi)], the lift of the curvature R(delta ^ eta) to A^n.
MatrixA curvature_matrix(const ProjectivePresentation& p, const Derivation& d, const Derivation& e);

/// trace(Phi*C*Phi): trace of the endomorphism C induces on E.
RingElement trace_over_image(const ProjectivePresentation& p, const MatrixA& c);
/// trace(Psi*C*Psi): trace of the endomorphism C induces on K.
RingElement trace_over_kernel(const ProjectivePresentation& p, const MatrixA& c);

/// C*k = 0 for the kernel generator k; nullopt when the presentation has none.
std::optional<bool> kernel_annihilated(const ProjectivePresentation& p, const MatrixA& c);

/// True iff Phi*[delta(Phi), eta(Phi)]*Phi = 0, i.e. R(delta ^ eta) vanishes on E.
bool is_flat_pair(const ProjectivePresentation& p, const Derivation& d, const Derivation& e);

struct CurvatureReport {
    std::string first;
    std::string second;
    MatrixA commutator;
    RingElement trace_image;
    RingElement trace_kernel;
    bool flat;
    std::optional<bool> kernel_annihilated;
};

CurvatureReport curvature_report(const ProjectivePresentation& p, const Derivation& d, const Derivation& e);

/// Potentials phi(delta), phi(eta), phi([delta, eta]) as matrices on A^n
/// commuting with Phi (so each maps E into E).
struct Potential {
    MatrixA first;
    MatrixA second;
    MatrixA bracket;
};

/// Curvature of A' = A + phi from the operators themselves: column j is
/// A'_d(A'_e(u_j)) - A'_e(A'_d(u_j)) - A'_[d,e](u_j).
MatrixA modified_curvature_direct(const ProjectivePresentation& p, const Derivation& d, const Derivation& e,
                                  const Derivation& bracket_de, const Potential& phi);

/// R(d^e) + r_phi(d^e) + [A_d, phi(e)] - [A_e, phi(d)] with
/// r_phi = [phi(d), phi(e)] - phi([d,e]) and [A_d, X] = d(X) + [d(Phi), X].
MatrixA modified_curvature_lemma(const ProjectivePresentation& p, const Derivation& d, const Derivation& e,
                                 const Potential& phi);

/// Validates the potential (PotentialNotPreserving) and the bracket
/// (BracketMismatch), computes both routes and requires
/// Phi*direct*Phi == Phi*lemma*Phi (IdentityViolation otherwise).
/// Returns the directly computed lifted curvature.
MatrixA modified_curvature(const ProjectivePresentation& p, const Derivation& d, const Derivation& e,
                           const Derivation& bracket_de, const Potential& phi);

struct DeviationReport {
    std::size_t ambient;
    std::size_t rank;
    std::size_t deviation;
};

/// n - rank(Phi(point)): an upper bound witness for the deviation of E, not its minimum.
DeviationReport deviation_report(const ProjectivePresentation& p, std::span<const GaussianRational> point);

}  // namespace projconn
