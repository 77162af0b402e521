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

#include "projconn/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "projconn/errors.hpp"

namespace projconn {

// --- Monomial --------------------------------------------------------------

std::uint64_t Monomial::degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (other.exps_.size() != exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    return r;
}

// --- MonomialOrder ---------------------------------------------------------

namespace {

// grevlex with declaration order; the storage order of every Polynomial.
std::strong_ordering default_compare(const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (std::size_t k = a.arity(); k-- > 0;) {
        if (a[k] != b[k]) return b[k] <=> a[k];
    }
    return std::strong_ordering::equal;
}

bool term_greater(const Term& a, const Term& b) { return default_compare(a.monomial, b.monomial) > 0; }

}  // namespace

MonomialOrder MonomialOrder::grevlex(std::size_t arity) {
    std::vector<std::size_t> prec(arity);
    std::iota(prec.begin(), prec.end(), std::size_t{0});
    return MonomialOrder(std::move(prec));
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> precedence) {
    std::vector<std::size_t> sorted = precedence;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw std::invalid_argument("variable precedence is not a permutation");
    return MonomialOrder(std::move(precedence));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (std::size_t k = precedence_.size(); k-- > 0;) {
        std::size_t v = precedence_[k];
        if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
}

// --- Variables -------------------------------------------------------------

Variables make_variables(std::vector<std::string> names) {
    if (names.empty()) throw std::invalid_argument("a ring needs at least one variable");
    for (std::size_t k = 0; k < names.size(); ++k) {
        const auto& n = names[k];
        bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
        for (char c : n) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok) throw std::invalid_argument("invalid variable name '" + n + "'");
        if (n == "i") throw std::invalid_argument("'i' is reserved for the imaginary unit");
        if (std::find(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(k), n) !=
            names.begin() + static_cast<std::ptrdiff_t>(k))
            throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

// --- Polynomial ------------------------------------------------------------

Polynomial::Polynomial(Variables vars) : vars_(std::move(vars)) {
    if (!vars_) throw std::invalid_argument("null variable list");
}

Polynomial Polynomial::constant(Variables vars, const GaussianRational& c) {
    Polynomial p(std::move(vars));
    if (!c.is_zero()) p.terms_.push_back({Monomial(p.arity()), c});
    return p;
}

Polynomial Polynomial::variable(Variables vars, std::size_t index) {
    Polynomial p(std::move(vars));
    if (index >= p.arity()) throw std::out_of_range("variable index out of range");
    Monomial m(p.arity());
    m[index] = 1;
    p.terms_.push_back({std::move(m), 1});
    return p;
}

Polynomial Polynomial::monomial(Variables vars, Monomial m, const GaussianRational& c) {
    Polynomial p(std::move(vars));
    if (m.arity() != p.arity()) throw ArityMismatch("monomial arity differs from variable count");
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
}

Polynomial Polynomial::from_terms(Variables vars, std::vector<Term> terms) {
    Polynomial p(std::move(vars));
    for (const auto& t : terms)
        if (t.monomial.arity() != p.arity()) throw ArityMismatch("term arity differs from variable count");
    std::sort(terms.begin(), terms.end(), term_greater);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

GaussianRational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
    return 0;
}

std::uint64_t Polynomial::total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

void Polynomial::check_arity(const Polynomial& o) const {
    if (o.arity() != arity())
        throw ArityMismatch("polynomial arities differ: " + std::to_string(arity()) + " vs " +
                            std::to_string(o.arity()));
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial& Polynomial::merge_in(const Polynomial& o, bool subtract) {
    check_arity(o);
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae || b != be) {
        std::strong_ordering c = std::strong_ordering::greater;
        if (a == ae)
            c = std::strong_ordering::less;
        else if (b != be)
            c = default_compare(a->monomial, b->monomial);
        if (c > 0) {
            out.push_back(std::move(*a++));
        } else if (c < 0) {
            out.push_back(subtract ? Term{b->monomial, -b->coeff} : *b);
            ++b;
        } else {
            Term t = std::move(*a++);
            if (subtract)
                t.coeff -= b->coeff;
            else
                t.coeff += b->coeff;
            ++b;
            if (!t.coeff.is_zero()) out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return merge_in(o, false); }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return merge_in(o, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_arity(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.vars_);
    if (b.size() == 1) return a.shifted(b.terms_.front().monomial, b.terms_.front().coeff);
    if (a.size() == 1) return b.shifted(a.terms_.front().monomial, a.terms_.front().coeff);
    std::vector<Term> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prods.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    return Polynomial::from_terms(a.vars_, std::move(prods));
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    if (c.is_zero()) return Polynomial(vars_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::shifted(const Monomial& m, const GaussianRational& c) const {
    if (m.arity() != arity()) throw ArityMismatch("monomial arity differs from variable count");
    if (c.is_zero()) return Polynomial(vars_);
    Polynomial r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(vars_, 1);
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return result;
}

Polynomial Polynomial::partial_derivative(std::size_t index) const {
    if (index >= arity()) throw std::out_of_range("partial derivative index out of range");
    // Every surviving term is m*x_index, and grevlex is multiplicative, so the
    // descending order is preserved.
    Polynomial r(vars_);
    for (const auto& t : terms_) {
        Exponent e = t.monomial[index];
        if (e == 0) continue;
        Monomial m = t.monomial;
        m[index] = e - 1;
        r.terms_.push_back({std::move(m), t.coeff * GaussianRational(static_cast<long>(e))});
    }
    return r;
}

GaussianRational Polynomial::evaluate(std::span<const GaussianRational> point) const {
    if (point.size() != arity())
        throw ArityMismatch("point has " + std::to_string(point.size()) + " coordinates, expected " +
                            std::to_string(arity()));
    GaussianRational sum;
    for (const auto& t : terms_) {
        GaussianRational v = t.coeff;
        for (std::size_t k = 0; k < arity(); ++k)
            for (Exponent e = 0; e < t.monomial[k]; ++e) v *= point[k];
        sum += v;
    }
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        std::string mono;
        for (std::size_t k = 0; k < arity(); ++k) {
            Exponent e = t.monomial[k];
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += (*vars_)[k];
            if (e > 1) mono += '^' + std::to_string(e);
        }
        std::string text;
        if (mono.empty())
            text = t.coeff.to_string();
        else if (t.coeff.is_one())
            text = mono;
        else if (t.coeff == GaussianRational(-1))
            text = "-" + mono;
        else
            text = t.coeff.to_string() + "*" + mono;
        if (!out.empty() && text.front() != '-') out += '+';
        out += text;
    }
    return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial negate(const Polynomial& p) { return -p; }
Polynomial scale(const GaussianRational& c, const Polynomial& p) { return p.scaled(c); }
Polynomial partial_derivative(const Polynomial& p, std::size_t index) { return p.partial_derivative(index); }

// --- division --------------------------------------------------------------

const Term& leading_term(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading term");
    if (order == MonomialOrder::grevlex(p.arity())) return p.terms().front();
    const Term* best = &p.terms().front();
    for (const auto& t : p.terms())
        if (order.greater(t.monomial, best->monomial)) best = &t;
    return *best;
}

DivisionResult divide_remainder(const Polynomial& p, const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (p.arity() != f.arity()) throw ArityMismatch("dividend and divisor arities differ");
    if (order.arity() != p.arity()) throw ArityMismatch("monomial order arity differs from polynomial");

    const Term lead = leading_term(f, order);
    const GaussianRational inv_lc = lead.coeff.inverse();
    const bool native = order == MonomialOrder::grevlex(p.arity());

    Polynomial rest = p;
    std::vector<Term> quotient, remainder;
    while (!rest.is_zero()) {
        Term lt = native ? rest.terms().front() : leading_term(rest, order);
        if (lead.monomial.divides(lt.monomial)) {
            Monomial m = lt.monomial / lead.monomial;
            GaussianRational c = lt.coeff * inv_lc;
            rest -= f.shifted(m, c);
            quotient.push_back({std::move(m), std::move(c)});
        } else {
            rest -= Polynomial::monomial(p.variables(), lt.monomial, lt.coeff);
            remainder.push_back(std::move(lt));
        }
    }
    return {Polynomial::from_terms(p.variables(), std::move(quotient)),
            Polynomial::from_terms(p.variables(), std::move(remainder))};
}

}  // namespace projconn
