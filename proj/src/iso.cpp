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

#include "cherednik/iso.hpp"

#include <random>

#include "cherednik/analysis.hpp"

namespace cherednik {

namespace {

using i64 = std::int64_t;

Matrix solution_matrix(const FieldContextPtr& ctx, int n,
                       const std::vector<std::vector<FieldElement>>& basis,
                       const std::vector<FieldElement>& coeffs) {
    Matrix t(ctx, n, n);
    for (size_t b = 0; b < basis.size(); ++b) {
        if (coeffs[b].is_zero()) continue;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                t.at(r, c) += coeffs[b] * basis[b][static_cast<size_t>(r) * n + c];
    }
    return t;
}

bool invertible(const Matrix& m) { return !m.det().is_zero(); }

} // namespace

IsoVerdict find_intertwiner(const Representation& r1, const Representation& r2,
                            std::uint64_t seed) {
    IsoVerdict verdict;
    if (!(r1.spec.params == r2.spec.params)) {
        verdict.criterion = "different algebra parameters";
        return verdict;
    }
    if (r1.dim != r2.dim) {
        verdict.criterion = "different dimensions";
        return verdict;
    }
    const FieldContextPtr& ctx = r1.spec.params.ctx;
    const int n = r1.dim;
    // unknowns T_{ij}, row-major; constraints T r1(g) - r2(g) T = 0
    const Matrix* g1[] = {&r1.X, &r1.S, &r1.Y};
    const Matrix* g2[] = {&r2.X, &r2.S, &r2.Y};
    Matrix system(ctx, 3 * n * n, n * n);
    int row = 0;
    for (int g = 0; g < 3; ++g) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c, ++row)
                for (int j = 0; j < n; ++j) {
                    system.at(row, r * n + j) += g1[g]->at(j, c);
                    system.at(row, j * n + c) -= g2[g]->at(r, j);
                }
    }
    auto basis = system.kernel_basis();
    if (basis.empty()) {
        verdict.criterion = "empty intertwiner space";
        return verdict;
    }
    for (const auto& b : basis) {
        Matrix t(ctx, n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) t.at(r, c) = b[static_cast<size_t>(r) * n + c];
        if (invertible(t)) {
            verdict.isomorphic = true;
            verdict.criterion = "invertible intertwiner found";
            verdict.intertwiner = std::move(t);
            return verdict;
        }
    }
    i64 q = 1;
    for (int i = 0; i < ctx->m; ++i) q *= ctx->p;
    if (basis.size() <= 2 && q <= 49) {
        // scan the projective solution space
        std::vector<FieldElement> elems = all_field_elements(ctx);
        if (basis.size() == 2) {
            for (const FieldElement& c : elems) {
                Matrix t = solution_matrix(ctx, n, basis, {c, FieldElement::one(ctx)});
                if (invertible(t)) {
                    verdict.isomorphic = true;
                    verdict.criterion = "invertible intertwiner found";
                    verdict.intertwiner = std::move(t);
                    return verdict;
                }
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        for (int round = 0; round < 256; ++round) {
            std::vector<FieldElement> coeffs;
            coeffs.reserve(basis.size());
            for (size_t i = 0; i < basis.size(); ++i)
                coeffs.push_back(FieldElement::random(ctx, rng));
            Matrix t = solution_matrix(ctx, n, basis, coeffs);
            if (invertible(t)) {
                verdict.isomorphic = true;
                verdict.criterion = "invertible intertwiner found";
                verdict.intertwiner = std::move(t);
                return verdict;
            }
        }
    }
    verdict.criterion = "no invertible intertwiner in the solution space";
    return verdict;
}

namespace {

bool same_value(const RepSpec& a, const RepSpec& b, const char* name) {
    return a.value(name) == b.value(name);
}

} // namespace

IsoVerdict criterion_iso(const RepSpec& a, const RepSpec& b) {
    IsoVerdict verdict;
    if (!(a.params == b.params)) {
        verdict.criterion = "different algebra parameters";
        return verdict;
    }
    if (a.family != b.family) {
        verdict.criterion = "different families are never isomorphic";
        return verdict;
    }
    const FieldContextPtr& ctx = a.params.ctx;
    const FieldElement& k = a.params.k;
    FieldElement four = FieldElement::from_int(ctx, 4);
    switch (a.family) {
        case Family::V01: {
            FieldElement beta = a.value("beta"), av = a.value("a");
            FieldElement beta2 = b.value("beta"), av2 = b.value("a");
            bool same = beta2 == beta && av2 == av;
            FieldElement mirrored =
                (four * beta * beta - k * k) / (four * av * beta * beta);
            bool mirror = beta2 == -beta && av2 == mirrored;
            verdict.isomorphic = same || mirror;
            verdict.criterion = same ? "equal (beta, a)" : "mirrored (-beta, a')";
            break;
        }
        case Family::V02:
            verdict.isomorphic = same_value(a, b, "a") && same_value(a, b, "b");
            verdict.criterion = "equal (a, b)";
            break;
        case Family::V03: {
            FieldElement beta = a.value("beta"), av = a.value("a");
            bool same = b.value("beta") == beta && b.value("a") == av;
            bool mirror = b.value("beta") == -beta && b.value("a") == av.inv();
            verdict.isomorphic = same || mirror;
            verdict.criterion = same ? "equal (beta, a)" : "mirrored (-beta, 1/a)";
            break;
        }
        case Family::V04: {
            FieldElement av = a.value("a");
            verdict.isomorphic = b.value("a") == av || b.value("a") == av.inv();
            verdict.criterion = "a matches up to inversion";
            break;
        }
        case Family::V05:
            verdict.isomorphic = same_value(a, b, "a") && same_value(a, b, "b");
            verdict.criterion = "equal (a, b)";
            break;
        case Family::V11: {
            FieldElement mu = a.value("mu"), d = a.value("d");
            FieldElement mu2 = b.value("mu"), d2 = b.value("d");
            bool translate = (mu2 - mu).in_prime_subfield() && d2 == d;
            bool reflect = (mu2 + mu).in_prime_subfield() &&
                           d * d2 == product_term(a.params, mu);
            verdict.isomorphic = translate || reflect;
            verdict.criterion =
                translate ? "mu shift with equal d" : "mu reflection with dd' = prod";
            break;
        }
        case Family::V12:
        case Family::V13:
            verdict.isomorphic = same_value(a, b, "theta");
            verdict.criterion = "equal theta";
            break;
        case Family::V14:
        case Family::V15:
            verdict.isomorphic = same_value(a, b, "c");
            verdict.criterion = "equal c";
            break;
        case Family::V16:
            verdict.isomorphic = same_value(a, b, "c") && same_value(a, b, "theta");
            verdict.criterion = "equal (c, theta)";
            break;
        case Family::V17:
            verdict.isomorphic = same_value(a, b, "a");
            verdict.criterion = "equal a";
            break;
        case Family::Synthetic:
            throw Error(ErrorCode::BadParameter,
                        "no closed-form criterion for synthetic sums");
    }
    if (!verdict.isomorphic && verdict.criterion.empty())
        verdict.criterion = "parameters differ";
    return verdict;
}

} // namespace cherednik
