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

#include "cherednik/analysis.hpp"

using namespace cherednik;

namespace {

FieldElement f(const FieldContextPtr& ctx, std::int64_t v) {
    return FieldElement::from_int(ctx, v);
}

Representation rep_of(const AlgebraParams& par, Family fam,
                      std::map<std::string, FieldElement> values) {
    return build_rep(RepSpec{par, fam, std::move(values), {}});
}

} // namespace

TEST_CASE("verify_relations passes on family instances") {
    auto ctx = make_field(7, 1);
    AlgebraParams par{ctx, 1, f(ctx, 4)};
    auto rep = rep_of(par, Family::V15, {{"c", f(ctx, 5)}});
    for (const CheckReport& r : verify_relations(rep)) {
        CHECK(r.pass);
        CHECK(r.witness.empty());
    }
}

TEST_CASE("verify_relations reports a witness on corrupted matrices") {
    auto ctx = make_field(5, 1);
    AlgebraParams par{ctx, 1, f(ctx, 2)};
    auto rep = rep_of(par, Family::V13, {{"theta", f(ctx, 1)}});
    rep.S.at(0, 1) = rep.S.at(0, 1) + f(ctx, 1);
    auto reports = verify_relations(rep);
    bool any_fail = false;
    for (const CheckReport& r : reports) {
        if (!r.pass) {
            any_fail = true;
            CHECK_FALSE(r.witness.empty());
        }
    }
    CHECK(any_fail);
}

TEST_CASE("central characters of V03 match closed forms") {
    auto ctx = make_field(7, 1);
    AlgebraParams par{ctx, 0, f(ctx, 0)};
    auto rep = rep_of(par, Family::V03, {{"beta", f(ctx, 2)}, {"a", f(ctx, 3)}});
    auto chars = central_character(rep);
    REQUIRE(chars.size() == 3);
    // X + X^-1 acts as a + 1/a = 3 + 5 = 1
    CHECK(chars[0].scalar);
    CHECK(chars[0].value == f(ctx, 1));
    // y^2 acts as beta^2 = 4
    CHECK(chars[1].scalar);
    CHECK(chars[1].value == f(ctx, 4));
    // Xy - yX^-1 acts as beta(a - 1/a) = 2*(3-5) = 3
    CHECK(chars[2].scalar);
    CHECK(chars[2].value == f(ctx, 3));
}

TEST_CASE("central characters of V02 match closed forms") {
    auto ctx = make_field(11, 1);
    AlgebraParams par{ctx, 0, f(ctx, 3)};
    auto rep = rep_of(par, Family::V02, {{"a", f(ctx, 1)}, {"b", f(ctx, 7)}});
    auto chars = central_character(rep);
    REQUIRE(chars.size() == 3);
    // X + X^-1 acts as 2a - kb = 2 - 21 = -19 = 3
    CHECK(chars[0].value == f(ctx, 3));
    // y^2 acts as 0
    CHECK(chars[1].value == f(ctx, 0));
    // Xy - yX^-1 acts as -ak = -3 = 8
    CHECK(chars[2].value == f(ctx, 8));
}

TEST_CASE("central character of V11 matches (mu^p - mu)^2") {
    auto ctx = make_field(5, 2);
    AlgebraParams par{ctx, 1, f(ctx, 2)};
    FieldElement mu = FieldElement::generator(ctx) + f(ctx, 3);
    auto rep = rep_of(par, Family::V11, {{"mu", mu}, {"d", f(ctx, 4)}});
    auto chars = central_character(rep);
    REQUIRE(chars.size() == 2);
    CHECK(chars[0].scalar);
    CHECK(chars[1].scalar);
    FieldElement b = (mu.pow(5) - mu) * (mu.pow(5) - mu);
    CHECK(chars[1].value == b);
}

TEST_CASE("central elements act non-scalar on mixed direct sums") {
    auto ctx = make_field(5, 1);
    AlgebraParams par{ctx, 1, f(ctx, 0)};
    auto r1 = rep_of(par, Family::V16, {{"c", f(ctx, 1)}, {"theta", f(ctx, 1)}});
    auto r2 = rep_of(par, Family::V16, {{"c", f(ctx, 1)}, {"theta", -f(ctx, 1)}});
    auto sum = direct_sum(r1, r2);
    auto chars = central_character(sum);
    bool any_non_scalar = false;
    for (const CentralScalar& cs : chars) any_non_scalar |= !cs.scalar;
    // X^p + X^-p separates theta = 1 from theta = -1
    CHECK(any_non_scalar);
}

TEST_CASE("eigen census of V13 and V12") {
    auto ctx = make_field(7, 1);
    AlgebraParams par{ctx, 1, f(ctx, 2)};
    auto v13 = rep_of(par, Family::V13, {{"theta", f(ctx, 1)}});
    EigenReport r = eigen_census(v13);
    CHECK(r.dim == 5);
    CHECK(r.geometric_total == 5);
    CHECK(r.algebraic_total == 5);
    for (const EigenEntry& e : r.entries) {
        CHECK(e.geometric == 1);
        CHECK(e.algebraic == 1);
    }
    REQUIRE(r.entries.size() == 5);

    auto ctx2 = make_field(5, 2);
    AlgebraParams par2{ctx2, 1, FieldElement::generator(ctx2)};
    auto v12 = rep_of(par2, Family::V12, {{"theta", f(ctx2, 1)}});
    EigenReport r2 = eigen_census(v12);
    CHECK(r2.dim == 10);
    CHECK(r2.geometric_total == 5);
    CHECK(r2.algebraic_total == 10);
    for (const EigenEntry& e : r2.entries) {
        CHECK(e.geometric == 1);
        CHECK(e.algebraic == 2);
    }
}

TEST_CASE("V11 spectrum is +-mu + c with multiplicity one") {
    auto ctx = make_field(3, 2);
    AlgebraParams par{ctx, 1, f(ctx, 2)};
    FieldElement mu = FieldElement::generator(ctx);
    auto rep = rep_of(par, Family::V11, {{"mu", mu}, {"d", f(ctx, 2)}});
    EigenReport r = eigen_census(rep);
    CHECK(r.dim == 6);
    CHECK(r.geometric_total == 6);
    REQUIRE(r.entries.size() == 6);
    for (const EigenEntry& e : r.entries) {
        CHECK(e.geometric == 1);
        CHECK(e.algebraic == 1);
    }
}

TEST_CASE("randomized irreducibility test") {
    auto ctx = make_field(5, 1);
    AlgebraParams par{ctx, 1, f(ctx, 2)};
    auto v13 = rep_of(par, Family::V13, {{"theta", f(ctx, 1)}});
    auto v14 = rep_of(par, Family::V14, {{"c", f(ctx, 1)}});
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        CHECK(is_irreducible(v13, seed).status == IrrStatus::Irreducible);
        CHECK(is_irreducible(v14, seed).status == IrrStatus::Irreducible);
    }
    auto sum = direct_sum(v13, v13);
    IrrReport r = is_irreducible(sum, 1);
    REQUIRE(r.status == IrrStatus::Reducible);
    // witness is proper, nonzero and invariant
    int n = static_cast<int>(r.invariant_basis.size());
    REQUIRE(n > 0);
    REQUIRE(n < sum.dim);
    Matrix span(ctx, n, sum.dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < sum.dim; ++j) span.at(i, j) = r.invariant_basis[i][j];
    int base_rank = span.rank();
    CHECK(base_rank == n);
    for (const Matrix* g : {&sum.X, &sum.Xinv, &sum.S, &sum.Y}) {
        Matrix extended(ctx, 2 * n, sum.dim);
        for (int i = 0; i < n; ++i) {
            auto img = g->apply(r.invariant_basis[i]);
            for (int j = 0; j < sum.dim; ++j) {
                extended.at(i, j) = span.at(i, j);
                extended.at(n + i, j) = img[j];
            }
        }
        CHECK(extended.rank() == base_rank);
    }
}

TEST_CASE("one dimensional representations are trivially irreducible") {
    auto ctx = make_field(3, 1);
    AlgebraParams par{ctx, 0, f(ctx, 0)};
    auto v05 = rep_of(par, Family::V05, {{"a", f(ctx, 1)}, {"b", -f(ctx, 1)}});
    CHECK(is_irreducible(v05, 9).status == IrrStatus::Irreducible);
}

TEST_CASE("exhaustive search agrees with the randomized test") {
    auto ctx = make_field(5, 1);
    AlgebraParams par{ctx, 1, f(ctx, 2)};
    auto v13 = rep_of(par, Family::V13, {{"theta", -f(ctx, 1)}});
    CHECK_FALSE(exhaustive_invariant_search(v13).has_value());
    auto v14 = rep_of(par, Family::V14, {{"c", f(ctx, 1)}});
    CHECK_FALSE(exhaustive_invariant_search(v14).has_value());
    auto sum = direct_sum(v13, v13);
    auto witness = exhaustive_invariant_search(sum);
    REQUIRE(witness.has_value());
    CHECK(witness->size() < static_cast<size_t>(sum.dim));

    // out of budget cases raise instead of running forever
    auto ctx2 = make_field(5, 2);
    AlgebraParams par2{ctx2, 1, f(ctx2, 2)};
    auto big = rep_of(par2, Family::V15, {{"c", f(ctx2, 1)}});
    CHECK_THROWS_AS(exhaustive_invariant_search(big), Error);
}

TEST_CASE("intertwiner operator laws hold on family instances") {
    auto ctx = make_field(7, 1);
    AlgebraParams par{ctx, 1, f(ctx, 2)};
    for (auto& rep : {rep_of(par, Family::V13, {{"theta", f(ctx, 1)}}),
                      rep_of(par, Family::V14, {{"c", -f(ctx, 1)}}),
                      rep_of(par, Family::V15, {{"c", f(ctx, 3)}})})
        for (const CheckReport& r : check_intertwiner_maps(rep)) CHECK(r.pass);
}

TEST_CASE("cycle scalars of V11") {
    auto ctx = make_field(3, 2);
    FieldElement x = FieldElement::generator(ctx);
    for (std::int64_t kv : {0, 2}) {
        AlgebraParams par{ctx, 1, f(ctx, kv)};
        for (std::int64_t dv : {1, 2}) {
            FieldElement mu = x + f(ctx, dv);
            FieldElement d = f(ctx, dv);
            auto rep = rep_of(par, Family::V11, {{"mu", mu}, {"d", d}});
            auto [dp, dm] = ba_cycle_scalars(rep);
            CHECK(dp == d);
            CHECK(dp * dm == product_term(par, mu));
        }
    }
}

TEST_CASE("product term closed form at k = 0") {
    auto ctx = make_field(5, 2);
    AlgebraParams par{ctx, 1, f(ctx, 0)};
    FieldElement mu = FieldElement::generator(ctx) + f(ctx, 2);
    FieldElement frob = mu.pow(5) - mu;
    CHECK(product_term(par, mu) == -(frob * frob));
}

TEST_CASE("classify censuses the families") {
    auto ctx5 = make_field(5, 1);
    AlgebraParams par{ctx5, 1, f(ctx5, 2)};
    auto entries = classify(par, 3);
    REQUIRE(entries.size() == 4);
    CHECK(entries[0].family == Family::V11);
    CHECK_FALSE(entries[0].applicable); // mu needs an extension field
    CHECK(entries[1].family == Family::V13);
    CHECK(entries[1].dim == 3);
    CHECK(entries[2].family == Family::V14);
    CHECK(entries[2].dim == 7);
    CHECK(entries[3].family == Family::V15);
    CHECK(entries[3].dim == 10);
    for (size_t i = 1; i < entries.size(); ++i)
        CHECK(entries[i].irr == IrrStatus::Irreducible);

    AlgebraParams park0{ctx5, 1, f(ctx5, 0)};
    auto e2 = classify(park0, 3);
    REQUIRE(e2.size() == 3);
    CHECK(e2[1].family == Family::V16);
    CHECK(e2[2].family == Family::V17);

    auto ctx9 = make_field(3, 2);
    AlgebraParams parq{ctx9, 1, FieldElement::generator(ctx9)};
    auto e3 = classify(parq, 3);
    REQUIRE(e3.size() == 2);
    CHECK(e3[0].family == Family::V11);
    CHECK(e3[0].applicable);
    CHECK(e3[0].irr == IrrStatus::Irreducible);
    CHECK(e3[1].family == Family::V12);
    CHECK(e3[1].dim == 6);

    AlgebraParams part0{ctx5, 0, f(ctx5, 1)};
    auto e4 = classify(part0, 3);
    REQUIRE(e4.size() == 2);
    CHECK(e4[0].family == Family::V01);
    CHECK(e4[1].family == Family::V02);
}
