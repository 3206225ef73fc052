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

#ifndef CHEREDNIK_SERIALIZE_HPP
#define CHEREDNIK_SERIALIZE_HPP

#include <json.hpp>

#include "cherednik/analysis.hpp"
#include "cherednik/iso.hpp"
#include "cherednik/reps.hpp"

namespace cherednik {

/// Field elements serialize as coefficient arrays, low degree first, always
/// of length m. Contexts serialize as {"p", "m", "modulus"} and deserialize
/// through make_field, so a tampered modulus is rejected.
nlohmann::json to_json(const FieldContext& ctx);
FieldContextPtr field_context_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FieldElement& e);
FieldElement field_element_from_json(const nlohmann::json& j, const FieldContextPtr& ctx);

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const FieldContextPtr& ctx);

/// Algebra elements serialize as a list of {"i", "j", "l", "coeff"} terms in
/// ascending monomial order.
nlohmann::json to_json(const AlgebraElement& e);
AlgebraElement algebra_element_from_json(const nlohmann::json& j,
                                         const AlgebraParams& params);

/// Spec serializes as {"t", "k", "family", "parameters"}; synthetic sums add
/// a "components" list.
nlohmann::json to_json(const RepSpec& spec);
RepSpec rep_spec_from_json(const nlohmann::json& j, const FieldContextPtr& ctx);

/// Representations carry their field context inline and re-validate the
/// defining relations on load; a corrupted matrix block is rejected.
nlohmann::json to_json(const Representation& rep);
Representation representation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const IsoVerdict& v);
nlohmann::json to_json(const EigenReport& r);
nlohmann::json to_json(const IrrReport& r, const FieldContextPtr& ctx);

} // namespace cherednik

#endif
