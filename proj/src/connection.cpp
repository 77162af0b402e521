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

#include "projconn/connection.hpp"

#include "projconn/errors.hpp"

namespace projconn {

namespace {

std::string first_nonzero(const MatrixA& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + m(i, j).to_string();
    return "none";
}

void require_compatible(const ProjectivePresentation& p, const Derivation& d) {
    require_same_ring(p.ring(), d.ring());
}

VectorA basis_vector(const QuotientRing& ring, std::size_t n, std::size_t j) {
    VectorA v(n, ring.zero());
    v[j] = ring.one();
    return v;
}

}  // namespace

ProjectivePresentation make_presentation(const MatrixA& phi, std::optional<VectorA> kernel_generator) {
    if (!phi.is_square()) throw DimensionMismatch("fundamental matrix must be square");
    MatrixA defect = phi * phi - phi;
    if (!defect.is_zero()) throw NotIdempotent("Phi^2 - Phi is nonzero: " + first_nonzero(defect));
    if (kernel_generator) {
        if (kernel_generator->size() != phi.rows()) throw DimensionMismatch("kernel generator length differs from n");
        for (const auto& e : *kernel_generator) require_same_ring(phi.ring(), e.ring());
        if (is_zero(*kernel_generator)) throw KernelNotAnnihilated("kernel generator is zero");
        VectorA image = phi * *kernel_generator;
        if (!is_zero(image)) throw KernelNotAnnihilated("Phi*k is nonzero: " + to_string(image));
    }
    MatrixA psi = MatrixA::identity(phi.ring(), phi.rows()) - phi;
    return ProjectivePresentation(phi, std::move(psi), std::move(kernel_generator));
}

VectorA connection_apply(const ProjectivePresentation& p, const Derivation& d, const VectorA& v) {
    require_compatible(p, d);
    if (v.size() != p.ambient_rank()) throw DimensionMismatch("vector length differs from ambient rank");
    return add(projconn::apply(d, v), apply_to_matrix(d, p.phi()) * v);
}

MatrixA curvature_matrix(const ProjectivePresentation& p, const Derivation& d, const Derivation& e) {
    require_compatible(p, d);
    require_compatible(p, e);
    return commutator(apply_to_matrix(d, p.phi()), apply_to_matrix(e, p.phi()));
}

RingElement trace_over_image(const ProjectivePresentation& p, const MatrixA& c) {
    if (c.rows() != p.ambient_rank() || !c.is_square()) throw DimensionMismatch("matrix size differs from n");
    return trace(p.phi() * c * p.phi());
}

RingElement trace_over_kernel(const ProjectivePresentation& p, const MatrixA& c) {
    if (c.rows() != p.ambient_rank() || !c.is_square()) throw DimensionMismatch("matrix size differs from n");
    return trace(p.psi() * c * p.psi());
}

std::optional<bool> kernel_annihilated(const ProjectivePresentation& p, const MatrixA& c) {
    if (!p.kernel_generator()) return std::nullopt;
    return is_zero(c * *p.kernel_generator());
}

bool is_flat_pair(const ProjectivePresentation& p, const Derivation& d, const Derivation& e) {
    return (p.phi() * curvature_matrix(p, d, e) * p.phi()).is_zero();
}

CurvatureReport curvature_report(const ProjectivePresentation& p, const Derivation& d, const Derivation& e) {
    MatrixA c = curvature_matrix(p, d, e);
    RingElement ti = trace_over_image(p, c);
    RingElement tk = trace_over_kernel(p, c);
    bool flat = (p.phi() * c * p.phi()).is_zero();
    auto annihilated = kernel_annihilated(p, c);
    return {d.label(), e.label(), std::move(c), std::move(ti), std::move(tk), flat, annihilated};
}

MatrixA modified_curvature_direct(const ProjectivePresentation& p, const Derivation& d, const Derivation& e,
                                  const Derivation& bracket_de, const Potential& phi) {
    const std::size_t n = p.ambient_rank();
    auto op = [&](const Derivation& der, const MatrixA& pot, const VectorA& v) {
        return add(connection_apply(p, der, v), pot * v);
    };
    std::vector<VectorA> columns;
    for (std::size_t j = 0; j < n; ++j) {
        VectorA u = basis_vector(p.ring(), n, j);
        VectorA de = op(d, phi.first, op(e, phi.second, u));
        VectorA ed = op(e, phi.second, op(d, phi.first, u));
        columns.push_back(sub(sub(de, ed), op(bracket_de, phi.bracket, u)));
    }
    MatrixA out(p.ring(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = columns[j][i];
    return out;
}

MatrixA modified_curvature_lemma(const ProjectivePresentation& p, const Derivation& d, const Derivation& e,
                                 const Potential& phi) {
    MatrixA dphi = apply_to_matrix(d, p.phi());
    MatrixA ephi = apply_to_matrix(e, p.phi());
    MatrixA curvature = commutator(dphi, ephi);
    MatrixA r_phi = commutator(phi.first, phi.second) - phi.bracket;
    MatrixA d_with_e = apply_to_matrix(d, phi.second) + commutator(dphi, phi.second);
    MatrixA e_with_d = apply_to_matrix(e, phi.first) + commutator(ephi, phi.first);
    return curvature + r_phi + d_with_e - e_with_d;
}

MatrixA modified_curvature(const ProjectivePresentation& p, const Derivation& d, const Derivation& e,
                           const Derivation& bracket_de, const Potential& phi) {
    const MatrixA& P = p.phi();
    for (const MatrixA* m : {&phi.first, &phi.second, &phi.bracket}) {
        if (m->rows() != p.ambient_rank() || !m->is_square()) throw DimensionMismatch("potential size differs from n");
        MatrixA right = *m * P;
        if (!(P * *m * P == right) || !(right == P * *m))
            throw PotentialNotPreserving("potential does not commute with Phi, so it does not preserve the module");
    }
    if (!(bracket(d, e) == bracket_de)) throw BracketMismatch("supplied bracket differs from [delta, eta]");

    MatrixA direct = modified_curvature_direct(p, d, e, bracket_de, phi);
    MatrixA lemma = modified_curvature_lemma(p, d, e, phi);
    MatrixA gap = P * direct * P - P * lemma * P;
    if (!gap.is_zero())
        throw IdentityViolation("modified curvature routes disagree on the module: " + first_nonzero(gap));
    return direct;
}

DeviationReport deviation_report(const ProjectivePresentation& p, std::span<const GaussianRational> point) {
    std::size_t r = rank_at_point(p.phi(), point);
    return {p.ambient_rank(), r, p.ambient_rank() - r};
}

}  // namespace projconn
