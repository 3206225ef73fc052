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

#ifndef CHEREDNIK_ALGEBRA_HPP
#define CHEREDNIK_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/field.hpp"

namespace cherednik {

/// Parameters of the rank-1 trigonometric algebra H(t,k) over one field
/// context, with t already normalized into {0,1}.
struct AlgebraParams {
    FieldContextPtr ctx;
    int t = 0; // 0 or 1
    FieldElement k;

    bool operator==(const AlgebraParams& o) const {
        return *ctx == *o.ctx && t == o.t && k == o.k;
    }
};

/// Record of the change of variables performed by normalize_params.
struct ParamChange {
    FieldElement y_scale; // y -> y_scale * y
    int s_sign = 1;       // s -> s_sign * s
    std::string note;
};

/// Maps (t,k) to the normalized parameters: t != 0 goes to (1, k/t) with
/// y scaled by 1/t; for t = 1 and k in F_p the even representative of +-k
/// is chosen, flipping the sign of s when needed.
std::pair<AlgebraParams, ParamChange> normalize_params(const FieldElement& t,
                                                       const FieldElement& k);

/// PBW monomial s^i X^j y^l with i in {0,1}, l >= 0.
struct PBWMonomial {
    int i = 0;
    std::int64_t j = 0;
    std::int64_t l = 0;

    auto operator<=>(const PBWMonomial&) const = default;
};

/// Single generator tokens of a word.
enum class Gen { X, Xinv, S, Y };

/// Word in the generators with an optional leading scalar.
struct GeneratorWord {
    FieldElement scalar; // defaults handled by callers; must be set
    std::vector<Gen> tokens;
};

/// Element of H(t,k) as a finite combination of PBW monomials. Zero
/// coefficients are never stored; the empty map is the zero element.
class AlgebraElement {
public:
    explicit AlgebraElement(AlgebraParams params);

    static AlgebraElement zero(const AlgebraParams& params);
    static AlgebraElement one(const AlgebraParams& params);
    static AlgebraElement monomial(const AlgebraParams& params, PBWMonomial m,
                                   FieldElement coeff);

    const AlgebraParams& params() const { return params_; }
    const std::map<PBWMonomial, FieldElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    void add_term(const PBWMonomial& m, const FieldElement& c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const FieldElement& s) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    /// Canonical text form, terms in ascending (i, j, l) order.
    std::string str() const;

private:
    AlgebraParams params_;
    std::map<PBWMonomial, FieldElement> terms_;
};

enum class RewriteStrategy { LeftmostInnermost, RightmostOutermost };

/// Rewrites a generator word to its unique PBW normal form by exhaustively
/// applying the defining relations. The strategy only affects the order of
/// rule applications, never the result.
AlgebraElement normalize(const GeneratorWord& word, const AlgebraParams& params,
                         RewriteStrategy strategy = RewriteStrategy::LeftmostInnermost);

/// Normal-form product; equals normalization of the concatenated expansion.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// Parses the expression grammar (sums of scalar-times-generator-power
/// products) and returns the normalized element. Scalars are integer
/// literals, coefficient tuples [c0,c1,...], or the symbols t and k.
AlgebraElement parse(const std::string& text, const AlgebraParams& params);

/// Distinguished central elements: t=0 gives {X+X^-1, y^2, Xy-yX^-1},
/// t=1 gives {X^p+X^-p, (y^p-y)^2}, all in normal form.
std::vector<AlgebraElement> central_elements(const AlgebraParams& params);

/// The intertwiners A = sX and B = sy + k/2.
std::pair<AlgebraElement, AlgebraElement> intertwiners(const AlgebraParams& params);

/// The H(1,k) -> H(1,-k) substitution y -> y, s -> -s, X -> X applied
/// term-wise; coefficients are carried over unchanged into `target`.
AlgebraElement flip_s_sign(const AlgebraElement& e, const AlgebraParams& target);

} // namespace cherednik

#endif
