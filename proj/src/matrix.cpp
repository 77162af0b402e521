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

#include "projconn/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "projconn/errors.hpp"

namespace projconn {

namespace {

void require_same_shape(const MatrixA& a, const MatrixA& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix shapes differ: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
}

void require_square(const MatrixA& m, std::size_t max_n = 0) {
    if (!m.is_square()) throw DimensionMismatch("matrix is not square");
    if (max_n && m.rows() > max_n)
        throw DimensionMismatch("cofactor expansion is limited to " + std::to_string(max_n) + "x" +
                                std::to_string(max_n) + " matrices");
}

constexpr std::size_t kMaxCofactorSize = 6;

}  // namespace

MatrixA::MatrixA(QuotientRing ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_.zero()) {}

MatrixA::MatrixA(QuotientRing ring, std::size_t rows, std::size_t cols, std::vector<RingElement> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
        throw DimensionMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                                std::to_string(entries_.size()));
    for (const auto& e : entries_) require_same_ring(ring_, e.ring());
}

MatrixA MatrixA::identity(const QuotientRing& ring, std::size_t n) {
    MatrixA m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
}

MatrixA MatrixA::zero(const QuotientRing& ring, std::size_t rows, std::size_t cols) {
    return MatrixA(ring, rows, cols);
}

MatrixA MatrixA::from_text(const QuotientRing& ring,
                           std::initializer_list<std::initializer_list<std::string_view>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<RingElement> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("ragged matrix rows");
        for (auto text : row) entries.push_back(ring.element(text));
    }
    return MatrixA(ring, r, c, std::move(entries));
}

MatrixA MatrixA::column(const VectorA& v) {
    if (v.empty()) throw DimensionMismatch("empty vector");
    return MatrixA(v.front().ring(), v.size(), 1, v);
}

VectorA MatrixA::col(std::size_t c) const {
    VectorA v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

bool MatrixA::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const RingElement& e) { return e.is_zero(); });
}

MatrixA MatrixA::operator-() const {
    MatrixA r(*this);
    for (auto& e : r.entries_) e = -e;
    return r;
}

MatrixA operator+(const MatrixA& a, const MatrixA& b) {
    require_same_shape(a, b);
    MatrixA r(a);
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
    return r;
}

MatrixA operator-(const MatrixA& a, const MatrixA& b) {
    require_same_shape(a, b);
    MatrixA r(a);
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
    return r;
}

MatrixA operator*(const MatrixA& a, const MatrixA& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    MatrixA r(a.ring_, a.rows_, b.cols_);
    // Accumulate unreduced products and reduce each entry once.
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            Polynomial sum(a.ring_.variables());
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(i, k);
                const auto& y = b(k, j);
                if (x.is_zero() || y.is_zero()) continue;
                sum += x.representative() * y.representative();
            }
            r(i, j) = a.ring_.nf(sum);
        }
    return r;
}

VectorA operator*(const MatrixA& a, const VectorA& v) {
    if (a.cols_ != v.size())
        throw DimensionMismatch("matrix has " + std::to_string(a.cols_) + " columns, vector has " +
                                std::to_string(v.size()) + " entries");
    VectorA out;
    out.reserve(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        Polynomial sum(a.ring_.variables());
        for (std::size_t k = 0; k < a.cols_; ++k) {
            require_same_ring(a.ring_, v[k].ring());
            if (a(i, k).is_zero() || v[k].is_zero()) continue;
            sum += a(i, k).representative() * v[k].representative();
        }
        out.push_back(a.ring_.nf(sum));
    }
    return out;
}

MatrixA MatrixA::scaled(const RingElement& a) const {
    MatrixA r(*this);
    for (auto& e : r.entries_) e *= a;
    return r;
}

MatrixA MatrixA::scaled(const GaussianRational& c) const {
    MatrixA r(*this);
    for (auto& e : r.entries_) e = e.scaled(c);
    return r;
}

MatrixA MatrixA::transpose() const {
    MatrixA r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

std::vector<std::vector<std::string>> MatrixA::to_text_rows() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
    return out;
}

std::string MatrixA::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += (*this)(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

bool operator==(const MatrixA& a, const MatrixA& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

MatrixA add(const MatrixA& a, const MatrixA& b) { return a + b; }
MatrixA mul(const MatrixA& a, const MatrixA& b) { return a * b; }
MatrixA negate(const MatrixA& a) { return -a; }
MatrixA scale(const RingElement& a, const MatrixA& m) { return m.scaled(a); }
MatrixA transpose(const MatrixA& m) { return m.transpose(); }

MatrixA commutator(const MatrixA& a, const MatrixA& b) {
    require_square(a);
    require_same_shape(a, b);
    return a * b - b * a;
}

RingElement trace(const MatrixA& m) {
    require_square(m);
    Polynomial sum(m.ring().variables());
    for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, i).representative();
    return m.ring().nf(sum);
}

// --- vectors ---------------------------------------------------------------

bool is_zero(const VectorA& v) {
    return std::all_of(v.begin(), v.end(), [](const RingElement& e) { return e.is_zero(); });
}

VectorA add(const VectorA& a, const VectorA& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    VectorA r;
    r.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r.push_back(a[k] + b[k]);
    return r;
}

VectorA sub(const VectorA& a, const VectorA& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    VectorA r;
    r.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r.push_back(a[k] - b[k]);
    return r;
}

VectorA scale(const RingElement& a, const VectorA& v) {
    VectorA r;
    r.reserve(v.size());
    for (const auto& e : v) r.push_back(a * e);
    return r;
}

std::string to_string(const VectorA& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].to_string();
    return s + ")";
}

// --- determinant and characteristic polynomial ------------------------------

namespace {

// Cofactor expansion along the first of the remaining rows. `cols` lists the
// still-available columns; works for any commutative entry type with the
// operations used below.
template <class T, class Entry>
T cofactor_det(std::size_t row, std::vector<std::size_t>& cols, const Entry& entry, const T& zero) {
    if (cols.empty()) return entry.one();
    T sum = zero;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::size_t c = cols[k];
        T e = entry(row, c);
        if (entry.is_zero(e)) continue;
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        T minor = cofactor_det<T>(row + 1, cols, entry, zero);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
        T prod = entry.mul(e, minor);
        sum = (k % 2 == 0) ? entry.add(sum, prod) : entry.sub(sum, prod);
    }
    return sum;
}

struct RingEntries {
    const MatrixA& m;
    RingElement operator()(std::size_t r, std::size_t c) const { return m(r, c); }
    RingElement one() const { return m.ring().one(); }
    static bool is_zero(const RingElement& e) { return e.is_zero(); }
    static RingElement mul(const RingElement& a, const RingElement& b) { return a * b; }
    static RingElement add(const RingElement& a, const RingElement& b) { return a + b; }
    static RingElement sub(const RingElement& a, const RingElement& b) { return a - b; }
};

// Polynomial in t over A, coefficients lowest degree first, no trailing zeros.
using TPoly = std::vector<RingElement>;

void trim(TPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

struct TPolyEntries {
    const MatrixA& g;
    TPoly operator()(std::size_t r, std::size_t c) const {
        // (t*I - g)(r, c)
        TPoly p{-g(r, c)};
        if (r == c) p.push_back(g.ring().one());
        trim(p);
        return p;
    }
    TPoly one() const { return {g.ring().one()}; }
    static bool is_zero(const TPoly& p) { return p.empty(); }
    static TPoly mul(const TPoly& a, const TPoly& b) {
        if (a.empty() || b.empty()) return {};
        const QuotientRing& ring = a.front().ring();
        TPoly r(a.size() + b.size() - 1, ring.zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        trim(r);
        return r;
    }
    static TPoly combine(const TPoly& a, const TPoly& b, bool subtract) {
        TPoly r = a;
        if (r.size() < b.size()) {
            const QuotientRing& ring = b.front().ring();
            r.resize(b.size(), ring.zero());
        }
        for (std::size_t k = 0; k < b.size(); ++k) r[k] = subtract ? r[k] - b[k] : r[k] + b[k];
        trim(r);
        return r;
    }
    static TPoly add(const TPoly& a, const TPoly& b) { return combine(a, b, false); }
    static TPoly sub(const TPoly& a, const TPoly& b) { return combine(a, b, true); }
};

}  // namespace

RingElement determinant(const MatrixA& m) {
    require_square(m, kMaxCofactorSize);
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t k = 0; k < cols.size(); ++k) cols[k] = k;
    return cofactor_det<RingElement>(0, cols, RingEntries{m}, m.ring().zero());
}

CharPoly char_poly(const MatrixA& g) {
    require_square(g, kMaxCofactorSize);
    std::vector<std::size_t> cols(g.cols());
    for (std::size_t k = 0; k < cols.size(); ++k) cols[k] = k;
    TPoly p = cofactor_det<TPoly>(0, cols, TPolyEntries{g}, TPoly{});
    p.resize(g.rows() + 1, g.ring().zero());
    return CharPoly{{p.rbegin(), p.rend()}};
}

MatrixA CharPoly::evaluate(const MatrixA& g) const {
    require_square(g);
    // Horner: (((c_n) g + c_{n-1}) g + ...) + c_0
    const QuotientRing& ring = g.ring();
    MatrixA acc = MatrixA::zero(ring, g.rows(), g.cols());
    MatrixA id = MatrixA::identity(ring, g.rows());
    for (const auto& c : coefficients) acc = acc * g + id.scaled(c);
    return acc;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
    TPoly x(a.coefficients.rbegin(), a.coefficients.rend());
    TPoly y(b.coefficients.rbegin(), b.coefficients.rend());
    std::size_t deg = a.degree() + b.degree();
    TPoly r = TPolyEntries::mul(x, y);
    r.resize(deg + 1, a.coefficients.front().ring().zero());
    return CharPoly{{r.rbegin(), r.rend()}};
}

std::string CharPoly::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        const auto& c = coefficients[k];
        if (c.is_zero()) continue;
        std::size_t power = degree() - k;
        std::string coeff = c.to_string();
        if (c.representative().size() > 1) coeff = "(" + coeff + ")";
        std::string tpow = power == 0 ? "" : (power == 1 ? "t" : "t^" + std::to_string(power));
        std::string term;
        if (tpow.empty())
            term = coeff;
        else if (coeff == "1")
            term = tpow;
        else if (coeff == "-1")
            term = "-" + tpow;
        else
            term = coeff + "*" + tpow;
        if (!s.empty() && term.front() != '-') s += "+";
        s += term;
    }
    return s.empty() ? "0" : s;
}

// --- numeric evaluation ----------------------------------------------------

NumericMatrix evaluate(const MatrixA& m, std::span<const GaussianRational> point) {
    if (point.size() != m.ring().arity()) throw ArityMismatch("point length differs from ring arity");
    m.ring().require_on_surface(point);
    NumericMatrix out{m.rows(), m.cols(), {}};
    out.entries.reserve(m.entries().size());
    for (const auto& e : m.entries()) out.entries.push_back(e.representative().evaluate(point));
    return out;
}

std::size_t rank(NumericMatrix m) {
    std::size_t r = 0;
    auto at = [&](std::size_t i, std::size_t j) -> GaussianRational& { return m.entries[i * m.cols + j]; };
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows && at(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(at(r, j), at(pivot, j));
        GaussianRational inv = at(r, c).inverse();
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (at(i, c).is_zero()) continue;
            GaussianRational factor = at(i, c) * inv;
            for (std::size_t j = c; j < m.cols; ++j) at(i, j) -= factor * at(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t rank_at_point(const MatrixA& m, std::span<const GaussianRational> point) {
    return rank(evaluate(m, point));
}

}  // namespace projconn
