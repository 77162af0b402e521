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

#include "projconn/catalog.hpp"

#include <map>

#include "projconn/errors.hpp"

namespace projconn {

namespace {

const std::vector<std::string> kXyz{"x", "y", "z"};

Variables parameter_variables() {
    static const Variables vars = make_variables({"p", "q", "r"});
    return vars;
}

// One transcribed display: a scalar, a vector, or rows of entries.
struct Display {
    enum class Kind { Scalar, Vector, Matrix } kind;
    std::vector<std::vector<std::string>> rows;
    bool only_at_one = false;  // the display is given for p = q = r = 1 only
};

Display scalar(std::string s) { return {Display::Kind::Scalar, {{std::move(s)}}}; }
Display vector(std::vector<std::string> v) { return {Display::Kind::Vector, {std::move(v)}}; }
Display matrix(std::vector<std::vector<std::string>> rows, bool only_at_one = false) {
    return {Display::Kind::Matrix, std::move(rows), only_at_one};
}
Display scalar_at_one(std::string s) {
    Display d = scalar(std::move(s));
    d.only_at_one = true;
    return d;
}

const std::map<std::string, Display, std::less<>>& ellipsoid_displays() {
    static const std::map<std::string, Display, std::less<>> table{
        {"M", matrix({{"1-x^{p}", "-{p/q}*x^{p-1}*y", "-{p/r}*x^{p-1}*z"},
                      {"-{q/p}*x*y^{q-1}", "1-y^{q}", "-{q/r}*y^{q-1}*z"},
                      {"-{r/p}*x*z^{r-1}", "-{r/q}*y*z^{r-1}", "1-z^{r}"}})},
        {"dFvec", vector({"{p}*x^{p-1}", "{q}*y^{q-1}", "{r}*z^{r-1}"})},
        {"d1", vector({"{q}*y^{q-1}", "-{p}*x^{p-1}", "0"})},
        {"d2", vector({"{r}*z^{r-1}", "0", "-{p}*x^{p-1}"})},
        {"d3", vector({"0", "{r}*z^{r-1}", "-{q}*y^{q-1}"})},
        {"d1M",
         matrix({{"-{p*q}*x^{p-1}*y^{q-1}", "-{p*(p-1)}*x^{p-2}*y^{q}+{p^2/q}*x^{2*(p-1)}",
                  "-{q*p*(p-1)/r}*x^{p-2}*y^{q-1}*z"},
                 {"-{q^2/p}*y^{2*(q-1)}+{q*(q-1)}*x^{p}*y^{q-2}", "{p*q}*x^{p-1}*y^{q-1}",
                  "{p*q*(q-1)/r}*x^{p-1}*y^{q-2}*z"},
                 {"-{q*r/p}*y^{q-1}*z^{r-1}", "{p*r/q}*x^{p-1}*z^{r-1}", "0"}})},
        {"d2M",
         matrix({{"-{p*r}*x^{p-1}*z^{r-1}", "-{r*p*(p-1)/q}*x^{p-2}*y*z^{r-1}",
                  "-{p*(p-1)}*x^{p-2}*z^{r}+{p^2/r}*x^{2*(p-1)}"},
                 {"-{q*r/p}*y^{q-1}*z^{r-1}", "0", "{p*q/r}*x^{p-1}*y^{q-1}"},
                 {"-{r^2/p}*z^{2*(r-1)}+{r*(r-1)}*x^{p}*z^{r-2}", "{p*r*(r-1)/q}*x^{p-1}*y*z^{r-2}",
                  "{p*r}*x^{p-1}*z^{r-1}"}})},
        {"d3M",
         matrix({{"0", "-{p*r/q}*x^{p-1}*z^{r-1}", "{p*q/r}*x^{p-1}*y^{q-1}"},
                 {"-{r*q*(q-1)/p}*x*y^{q-2}*z^{r-1}", "-{q*r}*y^{q-1}*z^{r-1}",
                  "-{q*(q-1)}*y^{q-2}*z^{r}+{q^2/r}*y^{2*(q-1)}"},
                 {"{q*r*(r-1)/p}*x*y^{q-1}*z^{r-2}", "-{r^2/q}*z^{2*(r-1)}+{r*(r-1)}*y^{q}*z^{r-2}",
                  "{q*r}*y^{q-1}*z^{r-1}"}})},
        {"formone-scalar-1", scalar("{p-q}*x^{p-1}*y^{q-1}")},
        {"formone-scalar-2", scalar("{p-r}*x^{p-1}*z^{r-1}")},
        {"formone-scalar-3", scalar("{q-r}*y^{q-1}*z^{r-1}")},
        {"bracket-12-scalar", scalar("{p*(p-1)}*x^{p-2}")},
        {"bracket-13-scalar", scalar("-{q*(q-1)}*y^{q-2}")},
        {"bracket-23-scalar", scalar("{r*(r-1)}*z^{r-2}")},
        {"nested-12-scalar", scalar("{p-r}*x^{p-2}*y^{q-1}*z^{r-1}*({p-q}*x^{p}+{q*(p-1)})")},
        {"nested-21-scalar", scalar("{p-q}*x^{p-2}*y^{q-1}*z^{r-1}*({p-r}*x^{p}+{(p-1)*r})")},
        {"bracket-action-12-scalar", scalar("-{(q-r)*p*(p-1)}*x^{p-2}*y^{q-1}*z^{r-1}")},
    };
    return table;
}

const std::map<std::string, Display, std::less<>>& sphere_displays() {
    static const std::map<std::string, Display, std::less<>> table{
        // Entry (2,1) as printed; P^2 = I forces y^q - i*z^r.
        {"P-printed", matrix({{"x^{p}", "y^{q}+i*z^{r}"}, {"y^{p}-i*z^{r}", "-x^{p}"}})},
        {"P", matrix({{"x^{p}", "y^{q}+i*z^{r}"}, {"y^{q}-i*z^{r}", "-x^{p}"}})},
        {"D1", vector({"{q}*y^{2*q-1}", "-{p}*x^{2*p-1}", "0"})},
        {"D2", vector({"{r}*z^{2*r-1}", "0", "-{p}*x^{2*p-1}"})},
        {"D3", vector({"0", "-{r}*z^{2*r-1}", "{q}*y^{2*q-1}"})},
        {"D1M", matrix({{"1/2*y", "-1/2*x"}, {"-1/2*x", "-1/2*y"}}, true)},
        {"D2M", matrix({{"1/2*z", "-1/2*i*x"}, {"1/2*i*x", "-1/2*z"}}, true)},
        {"D3M-printed", matrix({{"0", "1/2*(z-i*y)"}, {"1/2*(z+i*y)", "0"}}, true)},
        {"D3M-corrected", matrix({{"0", "-1/2*(z-i*y)"}, {"-1/2*(z+i*y)", "0"}}, true)},
        {"R12", matrix({{"1/4*(-2*i*x^2)", "1/4*(2*x*(z-i*y))"}, {"1/4*(-2*x*(z+i*y))", "1/4*(2*i*x^2)"}}, true)},
        {"R13-printed",
         matrix({{"1/4*(-2*i*x*y)", "1/4*(2*y*(z-i*y))"}, {"1/4*(-2*y*(z+i*y))", "1/4*(2*i*x*y)"}}, true)},
        {"R13-corrected",
         matrix({{"-1/4*(-2*i*x*y)", "-1/4*(2*y*(z-i*y))"}, {"-1/4*(-2*y*(z+i*y))", "-1/4*(2*i*x*y)"}}, true)},
        // Printed (1,2) entry reads 2z(z-iz).
        {"R23-printed",
         matrix({{"1/4*(-2*i*x*z)", "1/4*(2*z*(z-i*z))"}, {"1/4*(-2*z*(z+i*y))", "1/4*(2*i*x*z)"}}, true)},
        {"R23-corrected",
         matrix({{"-1/4*(-2*i*x*z)", "-1/4*(2*z*(z-i*y))"}, {"-1/4*(-2*z*(z+i*y))", "-1/4*(2*i*x*z)"}}, true)},
        {"trace12-printed", scalar_at_one("-i*x")},
        {"trace13-printed", scalar_at_one("-i*y")},
        {"trace23-printed", scalar_at_one("-i*z")},
    };
    return table;
}

const std::map<std::string, Display, std::less<>>& displays_for(std::string_view example) {
    if (example == "ellipsoid") return ellipsoid_displays();
    if (example == "sphere") return sphere_displays();
    throw UnknownCheck("unknown example '" + std::string(example) + "'");
}

void require_at_least(const Params& params, int min, std::string_view example) {
    if (params.p < min || params.q < min || params.r < min)
        throw InvalidParameters(std::string(example) + " requires p, q, r >= " + std::to_string(min));
}

Polynomial power(const Variables& vars, std::size_t var, int e) {
    Monomial m(vars->size());
    m[var] = static_cast<Exponent>(e);
    return Polynomial::monomial(vars, std::move(m));
}

std::vector<RingElement> images(const QuotientRing& ring, const std::vector<Polynomial>& polys) {
    std::vector<RingElement> out;
    for (const auto& p : polys) out.push_back(ring.nf(p));
    return out;
}

}  // namespace

std::string instantiate(std::string_view text, const Params& params) {
    const GaussianRational point[] = {params.p, params.q, params.r};
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t open = text.find('{', pos);
        if (open == std::string_view::npos) {
            out += text.substr(pos);
            break;
        }
        std::size_t close = text.find('}', open);
        if (close == std::string_view::npos) throw ParseError("unterminated '{' in template", open);
        out += text.substr(pos, open - pos);
        // Substitute first so p/q is a division by a constant.
        std::string expr;
        for (char ch : text.substr(open + 1, close - open - 1)) {
            if (ch == 'p' || ch == 'q' || ch == 'r')
                expr += "(" + point[ch == 'p' ? 0 : ch == 'q' ? 1 : 2].to_string() + ")";
            else
                expr += ch;
        }
        GaussianRational value = parse(expr, parameter_variables()).constant_term();
        bool bare = value.is_integer() && sgn(value.real()) >= 0;
        out += bare ? value.to_string() : "(" + value.to_string() + ")";
        pos = close + 1;
    }
    return out;
}

QuotientRing ellipsoid_ring(const Params& params) {
    return QuotientRing::from_text(instantiate("x^{p}+y^{q}+z^{r}-1", params), kXyz);
}

QuotientRing sphere_ring(const Params& params) {
    return QuotientRing::from_text(instantiate("x^{2*p}+y^{2*q}+z^{2*r}-1", params), kXyz);
}

EllipsoidCotangent build_ellipsoid_cotangent(int p, int q, int r) {
    Params params{p, q, r};
    require_at_least(params, 2, "ellipsoid");
    QuotientRing ring = ellipsoid_ring(params);
    const Polynomial& f = ring.modulus();
    const int degrees[] = {p, q, r};

    // s(e_j) = u_j - (x_j / deg_j) dF, so M = I - dF * w^T with w_j = x_j / deg_j.
    VectorA dF;
    for (std::size_t k = 0; k < 3; ++k) dF.push_back(ring.nf(f.partial_derivative(k)));
    MatrixA m = MatrixA::identity(ring, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            RingElement w = ring.variable(j).scaled(GaussianRational::fraction(1, degrees[j]));
            m(i, j) -= dF[i] * w;
        }
    ProjectivePresentation presentation = make_presentation(m, dF);

    Polynomial fx = f.partial_derivative(0), fy = f.partial_derivative(1), fz = f.partial_derivative(2);
    Polynomial zero(ring.variables());
    std::vector<Derivation> ds;
    ds.push_back(make_derivation(ring, images(ring, {fy, -fx, zero}), "d1"));
    ds.push_back(make_derivation(ring, images(ring, {fz, zero, -fx}), "d2"));
    ds.push_back(make_derivation(ring, images(ring, {zero, fz, -fy}), "d3"));
    return {params, ring, std::move(dF), std::move(presentation), std::move(ds)};
}

SphereLineBundle build_sphere_line_bundle(int p, int q, int r) {
    Params params{p, q, r};
    require_at_least(params, 1, "sphere");
    QuotientRing ring = sphere_ring(params);
    const Variables& v = ring.variables();
    const GaussianRational i = GaussianRational::imaginary_unit();

    Polynomial xp = power(v, 0, p), yq = power(v, 1, q), zr = power(v, 2, r);
    MatrixA involution(ring, 2, 2,
                       {ring.nf(xp), ring.nf(yq + zr.scaled(i)), ring.nf(yq - zr.scaled(i)), ring.nf(-xp)});
    MatrixA id = MatrixA::identity(ring, 2);
    MatrixA defect = involution * involution - id;
    if (!defect.is_zero()) throw IdentityViolation("P^2 != I: " + defect.to_string());

    MatrixA m = (involution + id).scaled(GaussianRational::fraction(1, 2));
    ProjectivePresentation image_of_m = make_presentation(m);
    ProjectivePresentation line_bundle = make_presentation(id - m);

    // D_k are half the Hamiltonian pairs (f_a d/db - f_b d/da).
    const Polynomial& f = ring.modulus();
    const GaussianRational half = GaussianRational::fraction(1, 2);
    Polynomial fx = f.partial_derivative(0).scaled(half), fy = f.partial_derivative(1).scaled(half),
               fz = f.partial_derivative(2).scaled(half);
    Polynomial zero(v);
    std::vector<Derivation> ds;
    ds.push_back(make_derivation(ring, images(ring, {fy, -fx, zero}), "D1"));
    ds.push_back(make_derivation(ring, images(ring, {fz, zero, -fx}), "D2"));
    ds.push_back(make_derivation(ring, images(ring, {zero, -fz, fy}), "D3"));
    return {params, ring, std::move(involution), std::move(m), std::move(line_bundle), std::move(image_of_m),
            std::move(ds)};
}

Expected paper_expected(std::string_view example, std::string_view check, const Params& params) {
    const auto& table = displays_for(example);
    auto it = table.find(check);
    if (it == table.end())
        throw UnknownCheck("unknown check '" + std::string(check) + "' for example '" + std::string(example) + "'");
    const Display& d = it->second;
    if (d.only_at_one && !(params == Params{1, 1, 1}))
        throw UnknownCheck("display '" + std::string(check) + "' is only given for p = q = r = 1");
    QuotientRing ring = example == "ellipsoid" ? ellipsoid_ring(params) : sphere_ring(params);
    auto element = [&](const std::string& t) { return ring.element(instantiate(t, params)); };
    switch (d.kind) {
        case Display::Kind::Scalar: return element(d.rows[0][0]);
        case Display::Kind::Vector: {
            VectorA v;
            for (const auto& t : d.rows[0]) v.push_back(element(t));
            return v;
        }
        case Display::Kind::Matrix: {
            std::vector<RingElement> entries;
            for (const auto& row : d.rows)
                for (const auto& t : row) entries.push_back(element(t));
            return MatrixA(ring, d.rows.size(), d.rows[0].size(), std::move(entries));
        }
    }
    throw UnknownCheck("unreachable");
}

std::vector<std::string> paper_expected_ids(std::string_view example) {
    std::vector<std::string> ids;
    for (const auto& [id, _] : displays_for(example)) ids.push_back(id);
    return ids;
}

}  // namespace projconn
