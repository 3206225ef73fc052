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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cherednik/field.hpp"

using namespace cherednik;

TEST_CASE("context construction is deterministic and canonical") {
    auto f9 = make_field(3, 2);
    CHECK(f9->p == 3);
    CHECK(f9->m == 2);
    // smallest monic irreducible quadratic over F_3 is x^2 + 1
    CHECK(f9->modulus == std::vector<std::int64_t>{1, 0, 1});

    auto f25 = make_field(5, 2);
    // x^2 + 2 is the smallest monic irreducible quadratic over F_5
    CHECK(f25->modulus == std::vector<std::int64_t>{2, 0, 1});

    auto f7 = make_field(7, 1);
    CHECK(f7->modulus == std::vector<std::int64_t>{0, 1});

    auto again = make_field(3, 2);
    CHECK(*again == *f9);
}

TEST_CASE("bad contexts are rejected") {
    CHECK_THROWS_AS(make_field(9, 1), Error);
    CHECK_THROWS_AS(make_field(2, 1), Error);
    CHECK_THROWS_AS(make_field(5, 0), Error);
    CHECK_THROWS_AS(make_field(-3, 1), Error);
    try {
        make_field(2, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EvenCharacteristic);
    }
    try {
        make_field(15, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrime);
    }
}

TEST_CASE("prime field arithmetic") {
    auto f5 = make_field(5, 1);
    auto f = [&](std::int64_t v) { return FieldElement::from_int(f5, v); };
    CHECK(f(2) + f(4) == f(1));
    CHECK(f(3) * f(4) == f(2));
    CHECK(f(3).inv() == f(2));
    CHECK(f(2).pow(-1) == f(3));
    CHECK(f(4) / f(3) == f(3));
    CHECK(-f(1) == f(4));
    CHECK(f(0).is_zero());
    CHECK(f(1).is_one());
    CHECK_THROWS_AS(f(0).inv(), Error);
    for (std::int64_t v = 1; v < 5; ++v) CHECK(f(v) * f(v).inv() == f(1));
}

TEST_CASE("extension field arithmetic in GF(9)") {
    auto f9 = make_field(3, 2);
    FieldElement x = FieldElement::generator(f9);
    FieldElement one = FieldElement::one(f9);
    // modulus x^2 + 1 means x^2 = -1
    CHECK(x * x == -one);
    CHECK(x.pow(4) == one);
    CHECK(x.pow(8) == one);
    CHECK(x.frobenius() == -x);
    CHECK(x.frobenius().frobenius() == x);
    CHECK_FALSE(x.in_prime_subfield());
    CHECK((x * x).in_prime_subfield());
    CHECK(one.in_prime_subfield());
    CHECK(one.lift() == 1);
    CHECK((x * x).lift() == 2);
    CHECK_THROWS_AS(x.lift(), Error);
    // every nonzero element inverts
    for (std::int64_t a = 0; a < 3; ++a)
        for (std::int64_t b = 0; b < 3; ++b) {
            FieldElement e(f9, {a, b});
            if (e.is_zero()) continue;
            CHECK(e * e.inv() == one);
        }
}

TEST_CASE("context mixing is rejected") {
    auto f5 = make_field(5, 1);
    auto f7 = make_field(7, 1);
    CHECK_THROWS_AS(FieldElement::one(f5) + FieldElement::one(f7), Error);
}

TEST_CASE("matrix arithmetic over F_5") {
    auto f5 = make_field(5, 1);
    auto f = [&](std::int64_t v) { return FieldElement::from_int(f5, v); };
    Matrix m(f5, 2, 2);
    m.at(0, 0) = f(1);
    m.at(0, 1) = f(2);
    m.at(1, 0) = f(3);
    m.at(1, 1) = f(4);
    CHECK(m.det() == f(3)); // 4 - 6 = -2 = 3 mod 5
    CHECK(m.rank() == 2);
    Matrix id = Matrix::identity(f5, 2);
    CHECK(m * m.inverse() == id);
    CHECK(m.inverse() * m == id);
    CHECK(m.pow(0) == id);
    CHECK(m.pow(3) == m * m * m);
    CHECK(m.transpose().at(0, 1) == f(3));

    Matrix sing(f5, 2, 2);
    sing.at(0, 0) = f(1);
    sing.at(0, 1) = f(2);
    sing.at(1, 0) = f(2);
    sing.at(1, 1) = f(4);
    CHECK(sing.det() == f(0));
    CHECK(sing.rank() == 1);
    CHECK_THROWS_AS(sing.inverse(), Error);
    auto kernel = sing.kernel_basis();
    REQUIRE(kernel.size() == 1);
    auto img = sing.apply(kernel[0]);
    CHECK(img[0].is_zero());
    CHECK(img[1].is_zero());
}

TEST_CASE("scalar detection") {
    auto f7 = make_field(7, 1);
    auto f = [&](std::int64_t v) { return FieldElement::from_int(f7, v); };
    Matrix s = Matrix::identity(f7, 3).scaled(f(4));
    FieldElement value;
    CHECK(s.is_scalar(&value));
    CHECK(value == f(4));
    s.at(0, 1) = f(1);
    CHECK_FALSE(s.is_scalar(nullptr));
    Matrix z(f7, 2, 2);
    CHECK(z.is_zero());
    CHECK(z.is_scalar(&value));
    CHECK(value == f(0));
}

TEST_CASE("rref is idempotent and reveals rank") {
    auto f3 = make_field(3, 1);
    auto f = [&](std::int64_t v) { return FieldElement::from_int(f3, v); };
    Matrix m(f3, 3, 4);
    std::int64_t vals[3][4] = {{1, 2, 0, 1}, {2, 1, 1, 0}, {0, 0, 1, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = f(vals[r][c]);
    Matrix e = m.rref();
    CHECK(e.rref() == e);
    CHECK(m.rank() == e.rank());
    // kernel vectors of a wide matrix annihilate it
    for (const auto& v : m.kernel_basis()) {
        auto img = m.apply(v);
        for (const auto& c : img) CHECK(c.is_zero());
    }
    CHECK(m.rank() + static_cast<int>(m.kernel_basis().size()) == 4);
}

TEST_CASE("deterministic random elements stay in the field") {
    auto f9 = make_field(3, 2);
    std::mt19937_64 rng(42);
    std::mt19937_64 rng2(42);
    for (int i = 0; i < 20; ++i) {
        FieldElement a = FieldElement::random(f9, rng);
        FieldElement b = FieldElement::random(f9, rng2);
        CHECK(a == b);
        for (std::int64_t c : a.coeffs()) {
            CHECK(c >= 0);
            CHECK(c < 3);
        }
    }
}
