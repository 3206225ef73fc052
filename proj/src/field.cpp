/*
   Copyright 2026 The cherednik authors

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

#include "cherednik/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cherednik {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorCode::BadDegree: return "BadDegree";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::ExponentOnS: return "ExponentOnS";
        case ErrorCode::NotScalar: return "NotScalar";
        case ErrorCode::Inconclusive: return "Inconclusive";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

namespace {

using i64 = std::int64_t;
using Poly = std::vector<i64>; // low degree first, not necessarily normalized

i64 mod_p(i64 v, i64 p) {
    v %= p;
    return v < 0 ? v + p : v;
}

i64 inv_mod_p(i64 a, i64 p) {
    // extended Euclid on integers
    i64 t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
    while (new_r != 0) {
        i64 q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw Error(ErrorCode::DivisionByZero, "element has no inverse mod p");
    return mod_p(t, p);
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_p(r[i + j] + a[i] * b[j], p);
    poly_trim(r);
    return r;
}

// remainder of a mod b, b nonzero
Poly poly_rem(Poly a, const Poly& b, i64 p) {
    poly_trim(a);
    i64 lead_inv = inv_mod_p(b.back(), p);
    while (poly_deg(a) >= poly_deg(b)) {
        i64 c = mod_p(a.back() * lead_inv, p);
        int shift = poly_deg(a) - poly_deg(b);
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] = mod_p(a[i + shift] - c * b[i], p);
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, i64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_powmod_x(i64 exp_base, int exp_pow, const Poly& f, i64 p) {
    // computes x^(exp_base^exp_pow) mod f by repeated p-power via square-and-multiply
    Poly x = {0, 1};
    Poly result = poly_rem(x, f, p);
    for (int i = 0; i < exp_pow; ++i) {
        // result = result^exp_base mod f
        Poly acc = {1};
        Poly base = result;
        i64 e = exp_base;
        while (e > 0) {
            if (e & 1) acc = poly_rem(poly_mul(acc, base, p), f, p);
            base = poly_rem(poly_mul(base, base, p), f, p);
            e >>= 1;
        }
        result = std::move(acc);
    }
    return result;
}

Poly poly_sub(Poly a, const Poly& b, i64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = mod_p(a[i] - b[i], p);
    poly_trim(a);
    return a;
}

// Rabin irreducibility test for a monic polynomial of degree m over F_p.
bool poly_irreducible(const Poly& f, i64 p) {
    int m = poly_deg(f);
    if (m < 1) return false;
    if (m == 1) return true;
    Poly x = {0, 1};
    // x^(p^m) == x mod f
    Poly xpm = poly_powmod_x(p, m, f, p);
    if (!poly_sub(xpm, x, p).empty()) return false;
    // for each prime q | m: gcd(x^(p^(m/q)) - x, f) == 1
    int rest = m;
    for (int q = 2; q * q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        Poly g = poly_gcd(poly_sub(poly_powmod_x(p, m / q, f, p), x, p), f, p);
        if (poly_deg(g) != 0) return false;
    }
    if (rest > 1) {
        Poly g = poly_gcd(poly_sub(poly_powmod_x(p, m / rest, f, p), x, p), f, p);
        if (poly_deg(g) != 0) return false;
    }
    return true;
}

// extended Euclid over F_p[x]: returns u with u*a == gcd(a,b) mod b (b the modulus)
Poly poly_inv_mod(const Poly& a, const Poly& f, i64 p) {
    Poly r0 = f, r1 = a;
    poly_trim(r1);
    if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "division by zero in GF(p^m)");
    Poly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // q, rem = divmod(r0, r1)
        Poly rem = r0;
        Poly q(std::max<size_t>(r0.size(), 1), 0);
        i64 lead_inv = inv_mod_p(r1.back(), p);
        poly_trim(rem);
        while (poly_deg(rem) >= poly_deg(r1)) {
            i64 c = mod_p(rem.back() * lead_inv, p);
            int shift = poly_deg(rem) - poly_deg(r1);
            q[shift] = mod_p(q[shift] + c, p);
            for (size_t i = 0; i < r1.size(); ++i)
                rem[i + shift] = mod_p(rem[i + shift] - c * r1[i], p);
            poly_trim(rem);
            if (rem.empty()) break;
        }
        poly_trim(q);
        Poly t2 = poly_sub(t0, poly_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (poly_deg(r0) != 0)
        throw Error(ErrorCode::DivisionByZero, "element not invertible");
    i64 c = inv_mod_p(r0[0], p);
    Poly u = t0;
    for (auto& v : u) v = mod_p(v * c, p);
    return u;
}

} // namespace

FieldContextPtr make_field(std::int64_t p, int m) {
    if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "p must be an odd prime");
    if (m < 1) throw Error(ErrorCode::BadDegree, "extension degree must be >= 1");

    auto ctx = std::make_shared<FieldContext>();
    ctx->p = p;
    ctx->m = m;
    if (m == 1) {
        ctx->modulus = {0, 1}; // x
        return ctx;
    }
    // scan monic degree-m polynomials; counter digits are (c_{m-1}, ..., c_0)
    std::vector<i64> c(m, 0);
    for (;;) {
        Poly f(c.rbegin(), c.rend());
        f.push_back(1);
        if (poly_irreducible(f, p)) {
            ctx->modulus = std::move(f);
            return ctx;
        }
        int i = m - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
    }
    throw Error(ErrorCode::BadDegree, "no irreducible polynomial found"); // unreachable
}

FieldElement::FieldElement(FieldContextPtr ctx, std::vector<std::int64_t> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    c_.resize(ctx_->m, 0);
    for (auto& v : c_) v = mod_p(v, ctx_->p);
}

FieldElement FieldElement::zero(const FieldContextPtr& ctx) {
    return FieldElement(ctx, std::vector<i64>(ctx->m, 0));
}

FieldElement FieldElement::one(const FieldContextPtr& ctx) {
    std::vector<i64> c(ctx->m, 0);
    c[0] = 1;
    return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::from_int(const FieldContextPtr& ctx, std::int64_t v) {
    std::vector<i64> c(ctx->m, 0);
    c[0] = mod_p(v, ctx->p);
    return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::generator(const FieldContextPtr& ctx) {
    if (ctx->m < 2)
        throw Error(ErrorCode::BadDegree, "generator requires an extension of degree >= 2");
    std::vector<i64> c(ctx->m, 0);
    c[1] = 1;
    return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::random(const FieldContextPtr& ctx, std::mt19937_64& rng) {
    std::vector<i64> c(ctx->m);
    std::uniform_int_distribution<i64> dist(0, ctx->p - 1);
    for (auto& v : c) v = dist(rng);
    return FieldElement(ctx, std::move(c));
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](i64 v) { return v == 0; });
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](i64 v) { return v == 0; });
}

void FieldElement::check_same_ctx(const FieldElement& o) const {
    if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))
        throw Error(ErrorCode::ContextMismatch, "field contexts differ");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_ctx(o);
    std::vector<i64> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_p(c_[i] + o.c_[i], ctx_->p);
    return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_ctx(o);
    std::vector<i64> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_p(c_[i] - o.c_[i], ctx_->p);
    return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<i64> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_p(-c_[i], ctx_->p);
    return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_ctx(o);
    if (ctx_->m == 1)
        return FieldElement(ctx_, {mod_p(c_[0] * o.c_[0], ctx_->p)});
    Poly r = poly_rem(poly_mul(c_, o.c_, ctx_->p), ctx_->modulus, ctx_->p);
    r.resize(ctx_->m, 0);
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (ctx_->m == 1)
        return FieldElement(ctx_, {inv_mod_p(c_[0], ctx_->p)});
    Poly u = poly_inv_mod(c_, ctx_->modulus, ctx_->p);
    u.resize(ctx_->m, 0);
    return FieldElement(ctx_, std::move(u));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inv();
}

FieldElement FieldElement::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    FieldElement acc = one(ctx_);
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::frobenius() const { return pow(ctx_->p); }

bool FieldElement::operator==(const FieldElement& o) const {
    return ctx_ && o.ctx_ && *ctx_ == *o.ctx_ && c_ == o.c_;
}

bool FieldElement::in_prime_subfield() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](i64 v) { return v == 0; });
}

std::int64_t FieldElement::lift() const {
    if (!in_prime_subfield())
        throw Error(ErrorCode::BadParameter, "element is not in the prime subfield");
    return c_[0];
}

std::string FieldElement::str() const {
    if (ctx_->m == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ']';
    return os.str();
}

Matrix::Matrix(FieldContextPtr ctx, int rows, int cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * cols, FieldElement::zero(ctx_)) {}

Matrix Matrix::identity(const FieldContextPtr& ctx, int n) {
    Matrix m(ctx, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(ctx);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
    Matrix r(ctx_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
    Matrix r(ctx_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw Error(ErrorCode::DimensionMismatch, "matrix shapes incompatible");
    Matrix r(ctx_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::scaled(const FieldElement& s) const {
    Matrix r(ctx_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(ctx_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::pow(std::int64_t e) const {
    if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "pow of non-square matrix");
    if (e < 0) throw Error(ErrorCode::BadParameter, "negative matrix power");
    Matrix acc = identity(ctx_, rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const FieldElement& v) { return v.is_zero(); });
}

bool Matrix::is_scalar(FieldElement* scalar_out) const {
    if (rows_ != cols_ || rows_ == 0) return false;
    const FieldElement& s = at(0, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? at(i, j) != s : !at(i, j).is_zero()) return false;
        }
    if (scalar_out) *scalar_out = s;
    return true;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw Error(ErrorCode::DimensionMismatch, "vector length differs from cols");
    std::vector<FieldElement> r(rows_, FieldElement::zero(ctx_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    return r;
}

namespace {

// in-place elimination; returns pivot columns
std::vector<int> rref_in_place(Matrix& a) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pr = -1;
        for (int r = row; r < a.rows(); ++r)
            if (!a.at(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(pr, c), a.at(row, c));
        FieldElement piv_inv = a.at(row, col).inv();
        for (int c = col; c < a.cols(); ++c) a.at(row, c) = a.at(row, c) * piv_inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            FieldElement f = a.at(r, col);
            for (int c = col; c < a.cols(); ++c)
                a.at(r, c) = a.at(r, c) - f * a.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Matrix Matrix::rref() const {
    Matrix a = *this;
    rref_in_place(a);
    return a;
}

int Matrix::rank() const {
    Matrix a = *this;
    return static_cast<int>(rref_in_place(a).size());
}

std::vector<std::vector<FieldElement>> Matrix::kernel_basis() const {
    Matrix a = *this;
    std::vector<int> pivots = rref_in_place(a);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(cols_, FieldElement::zero(ctx_));
        v[free_col] = FieldElement::one(ctx_);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -a.at(static_cast<int>(pr), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

FieldElement Matrix::det() const {
    if (rows_ != cols_)
        throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    Matrix a = *this;
    FieldElement d = FieldElement::one(ctx_);
    for (int col = 0; col < cols_; ++col) {
        int pr = -1;
        for (int r = col; r < rows_; ++r)
            if (!a.at(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) return FieldElement::zero(ctx_);
        if (pr != col) {
            for (int c = 0; c < cols_; ++c) std::swap(a.at(pr, c), a.at(col, c));
            d = -d;
        }
        d = d * a.at(col, col);
        FieldElement piv_inv = a.at(col, col).inv();
        for (int r = col + 1; r < rows_; ++r) {
            if (a.at(r, col).is_zero()) continue;
            FieldElement f = a.at(r, col) * piv_inv;
            for (int c = col; c < cols_; ++c)
                a.at(r, c) = a.at(r, c) - f * a.at(col, c);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_)
        throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    Matrix aug(ctx_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = FieldElement::one(ctx_);
    }
    std::vector<int> pivots = rref_in_place(aug);
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
        throw Error(ErrorCode::Singular, "matrix is singular");
    for (int c : pivots)
        if (c >= cols_) throw Error(ErrorCode::Singular, "matrix is singular");
    Matrix inv(ctx_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

} // namespace cherednik
