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

#ifndef CHEREDNIK_REPS_HPP
#define CHEREDNIK_REPS_HPP

#include <map>
#include <string>
#include <vector>

#include "cherednik/algebra.hpp"
#include "cherednik/field.hpp"

namespace cherednik {

/// The representation families of H(0,k) and H(1,k). Synthetic marks direct
/// sums produced by direct_sum, never a constructed family.
enum class Family { V01, V02, V03, V04, V05, V11, V12, V13, V14, V15, V16, V17, Synthetic };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Tagged description of one representation: the ambient parameters plus the
/// family-dependent scalars (beta, a, b, mu, d, theta, c).
struct RepSpec {
    AlgebraParams params;
    Family family = Family::V01;
    std::map<std::string, FieldElement> values;
    std::vector<RepSpec> components; // only for Synthetic

    const FieldElement& value(const std::string& name) const;
};

/// Concrete representation: dim x dim matrices for X, X^-1, s, y plus basis
/// labels and the eigenvalue candidate set of y. Constructors self-check the
/// defining relations before returning, so a Representation is always valid.
struct Representation {
    RepSpec spec;
    int dim = 0;
    std::vector<std::string> labels;
    Matrix X, Xinv, S, Y;
    std::vector<FieldElement> y_candidates;
};

/// Builds the family instance described by spec; all divisions in the action
/// formulas are guarded and reported as BadParameter.
Representation build_rep(const RepSpec& spec);

/// Applies an algebra element to a vector: each PBW monomial s^i X^j y^l acts
/// as the composition y^l first, then X^j, then s^i.
std::vector<FieldElement> act(const Representation& rep, const AlgebraElement& elem,
                              const std::vector<FieldElement>& v);

/// Matrix image of an algebra element.
Matrix matrix_of(const Representation& rep, const AlgebraElement& elem);

/// Block-diagonal sum; the result is marked Family::Synthetic.
Representation direct_sum(const Representation& r1, const Representation& r2);

/// Entries of the generic two-dimensional model at t = 0, k != 0, solved from
/// the constraint chain det X = 1, relation (4) and s^2 = 1 with omega_0 = 1.
struct TwoDimModel {
    FieldElement gamma0, gamma1, delta0, delta1; // s matrix entries
    FieldElement theta0, theta1, omega0, omega1; // X matrix entries

    Matrix s_matrix() const;
    Matrix x_matrix() const;
};

/// Reconstructs the two-dimensional model from (beta, theta0); the resulting
/// matrices coincide exactly with build_rep of V01(beta, theta0).
TwoDimModel solve_two_dim_model(const FieldElement& beta, const FieldElement& theta0,
                                const AlgebraParams& params);

} // namespace cherednik

#endif
