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

#ifndef CHEREDNIK_ISO_HPP
#define CHEREDNIK_ISO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "cherednik/reps.hpp"

namespace cherednik {

struct IsoVerdict {
    bool isomorphic = false;
    std::string criterion; // which rule or search path decided
    std::optional<Matrix> intertwiner;
};

/// Searches for an invertible T with T r1(g) = r2(g) T for all generators by
/// solving the linear intertwiner system, then scanning the solution space
/// (exhaustively when small, seeded-randomly otherwise). Complete for
/// irreducible inputs.
IsoVerdict find_intertwiner(const Representation& r1, const Representation& r2,
                            std::uint64_t seed);

/// Closed-form isomorphism criterion on the family parameters. Distinct
/// families are never isomorphic; within one family the parameter rules of
/// the classification apply.
IsoVerdict criterion_iso(const RepSpec& a, const RepSpec& b);

} // namespace cherednik

#endif
