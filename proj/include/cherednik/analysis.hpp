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

#ifndef CHEREDNIK_ANALYSIS_HPP
#define CHEREDNIK_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/reps.hpp"

namespace cherednik {

/// Residual matrices of the four defining relations, in order:
/// sX - X^-1 s, s^2 - 1, sy + ys + k, XyX^-1 - y + t - ks.
/// All four are zero exactly when the matrices form a representation.
std::vector<Matrix> relation_matrices(const Matrix& X, const Matrix& Xinv,
                                      const Matrix& S, const Matrix& Y,
                                      const AlgebraParams& params);

struct CheckReport {
    std::string name;
    bool pass = false;
    std::string witness; // empty on pass
};

/// One report per defining relation plus the X X^-1 = 1 check.
std::vector<CheckReport> verify_relations(const Representation& rep);

/// Image of one distinguished central element together with its scalar value
/// when the image is scalar.
struct CentralScalar {
    AlgebraElement element;
    bool scalar = false;
    FieldElement value;
};

std::vector<CentralScalar> central_character(const Representation& rep);

struct EigenEntry {
    FieldElement value;
    int geometric = 0;
    int algebraic = 0;
};

/// Eigenvalue census of y over the candidate set of the representation:
/// geometric multiplicity dim ker(y - b) and algebraic multiplicity
/// dim ker (y - b)^n for each candidate b.
struct EigenReport {
    std::vector<EigenEntry> entries;
    int dim = 0;
    int geometric_total = 0;
    int algebraic_total = 0;
};

EigenReport eigen_census(const Representation& rep);

enum class IrrStatus { Irreducible, Reducible, Inconclusive };

struct IrrReport {
    IrrStatus status = IrrStatus::Inconclusive;
    /// Echelonized basis of a proper invariant subspace when reducible.
    std::vector<std::vector<FieldElement>> invariant_basis;
    int rounds_used = 0;
};

/// Randomized irreducibility test (kernel-vector spinning on random algebra
/// elements, with the dual spin fallback). Deterministic for a fixed seed.
IrrReport is_irreducible(const Representation& rep, std::uint64_t seed,
                         int budget = 64);

/// Exhaustive oracle: spins every one-dimensional subspace. Only for small
/// dim and field size; throws BudgetExceeded past roughly 2 * 10^5 lines.
std::optional<std::vector<std::vector<FieldElement>>>
exhaustive_invariant_search(const Representation& rep);

/// Checks the operator identities of A = sX and B = sy + k/2 on the given
/// representation, plus the eigenspace shift laws of both maps.
std::vector<CheckReport> check_intertwiner_maps(const Representation& rep);

/// For V11: the two block scalars of (BA)^p on the +mu and -mu eigenblocks.
/// Throws NotScalar when a block image is not scalar.
std::pair<FieldElement, FieldElement> ba_cycle_scalars(const Representation& rep);

/// prod over c in F_p of (k^2/4 - (mu + c)^2), at t = 1.
FieldElement product_term(const AlgebraParams& params, const FieldElement& mu);

/// All q = p^m field elements, constant term fastest. Intended for small q.
std::vector<FieldElement> all_field_elements(const FieldContextPtr& ctx);

/// One classified family at the given parameters: a sample instance, its
/// dimension and the outcome of the irreducibility test. Families whose
/// side conditions cannot be met over the given field are listed with
/// applicable = false and a note saying why.
struct ClassifyEntry {
    Family family = Family::V01;
    bool applicable = false;
    std::string note;
    int dim = 0;
    IrrStatus irr = IrrStatus::Inconclusive;
    RepSpec sample;
};

/// Enumerates the irreducible families at normalized (t, k) and builds one
/// verified sample of each.
std::vector<ClassifyEntry> classify(const AlgebraParams& params, std::uint64_t seed);

} // namespace cherednik

#endif
