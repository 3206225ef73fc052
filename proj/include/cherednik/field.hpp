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

#ifndef CHEREDNIK_FIELD_HPP
#define CHEREDNIK_FIELD_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cherednik/error.hpp"

namespace cherednik {

/// Description of GF(p^m) as F_p[x]/(modulus). Immutable after construction.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree m over F_p, so identical (p, m) inputs always yield bit-identical
/// contexts. For m = 1 elements are plain residues and the modulus is x.
struct FieldContext {
    std::int64_t p;
    int m;
    std::vector<std::int64_t> modulus; // monic, length m + 1, low degree first

    bool operator==(const FieldContext& other) const {
        return p == other.p && m == other.m && modulus == other.modulus;
    }
};

using FieldContextPtr = std::shared_ptr<const FieldContext>;

/// Builds the deterministic GF(p^m) context. Rejects p = 2, non-primes and
/// degrees below 1.
FieldContextPtr make_field(std::int64_t p, int m);

/// Element of GF(p^m) as a polynomial residue; coefficients low degree first,
/// always of length m, always reduced mod p. All arithmetic is exact.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldContextPtr ctx, std::vector<std::int64_t> coeffs);

    static FieldElement zero(const FieldContextPtr& ctx);
    static FieldElement one(const FieldContextPtr& ctx);
    static FieldElement from_int(const FieldContextPtr& ctx, std::int64_t v);
    /// The generator x of the extension (equals from_int(0) shifted); for
    /// m = 1 this is the residue 0... not meaningful, so it requires m >= 2.
    static FieldElement generator(const FieldContextPtr& ctx);
    static FieldElement random(const FieldContextPtr& ctx, std::mt19937_64& rng);

    const FieldContextPtr& ctx() const { return ctx_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const; // negative e inverts first
    FieldElement frobenius() const;         // x -> x^p

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// True iff the element lies in the prime subfield F_p (frobenius-fixed).
    bool in_prime_subfield() const;
    /// Canonical lift to {0, ..., p-1}; requires in_prime_subfield().
    std::int64_t lift() const;

    std::string str() const;

private:
    FieldContextPtr ctx_;
    std::vector<std::int64_t> c_;

    void check_same_ctx(const FieldElement& o) const;
};

/// Dense rows x cols matrix over one field context, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldContextPtr ctx, int rows, int cols); // zero-filled

    static Matrix identity(const FieldContextPtr& ctx, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldContextPtr& ctx() const { return ctx_; }

    FieldElement& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const FieldElement& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const FieldElement& s) const;
    Matrix transpose() const;
    Matrix pow(std::int64_t e) const; // square matrices, e >= 0

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_scalar(FieldElement* scalar_out = nullptr) const;

    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

    /// Exact reduced row-echelon form; first-nonzero pivot scan in column order.
    Matrix rref() const;
    int rank() const;
    std::vector<std::vector<FieldElement>> kernel_basis() const;
    FieldElement det() const;
    Matrix inverse() const; // throws Singular when not invertible

private:
    FieldContextPtr ctx_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<FieldElement> data_;
};

} // namespace cherednik

#endif
