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

#include "cherednik.h"

#include <cstring>
#include <new>
#include <string>

#include "cherednik/serialize.hpp"

using namespace cherednik;
using nlohmann::json;

struct chk_field {
    FieldContextPtr ctx;
};

struct chk_rep {
    Representation rep;
};

namespace {

thread_local std::string g_last_error;

chk_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return CHK_NOT_PRIME;
        case ErrorCode::EvenCharacteristic: return CHK_EVEN_CHARACTERISTIC;
        case ErrorCode::BadDegree: return CHK_BAD_DEGREE;
        case ErrorCode::DivisionByZero: return CHK_DIVISION_BY_ZERO;
        case ErrorCode::ContextMismatch: return CHK_CONTEXT_MISMATCH;
        case ErrorCode::Singular: return CHK_SINGULAR;
        case ErrorCode::BadParameter: return CHK_BAD_PARAMETER;
        case ErrorCode::DimensionMismatch: return CHK_DIMENSION_MISMATCH;
        case ErrorCode::SyntaxError: return CHK_SYNTAX_ERROR;
        case ErrorCode::ExponentOnS: return CHK_EXPONENT_ON_S;
        case ErrorCode::NotScalar: return CHK_NOT_SCALAR;
        case ErrorCode::Inconclusive: return CHK_INCONCLUSIVE;
        case ErrorCode::BudgetExceeded: return CHK_BUDGET_EXCEEDED;
        case ErrorCode::BadInput: return CHK_BAD_INPUT;
    }
    return CHK_UNKNOWN;
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_out(char** out, const std::string& s) {
    if (out) *out = dup_string(s);
}

template <typename F>
chk_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return CHK_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const json::exception& e) {
        g_last_error = e.what();
        return CHK_BAD_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CHK_UNKNOWN;
    }
}

json parse_json(const char* text, const char* what) {
    if (!text) throw Error(ErrorCode::BadInput, std::string(what) + " is null");
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(ErrorCode::BadInput, std::string(what) + " is not valid JSON");
    return j;
}

AlgebraParams params_from(const chk_field* f, int t, const char* k_json) {
    if (!f) throw Error(ErrorCode::BadInput, "field handle is null");
    if (t != 0 && t != 1) throw Error(ErrorCode::BadParameter, "t must be 0 or 1");
    FieldElement k = field_element_from_json(parse_json(k_json, "k"), f->ctx);
    return AlgebraParams{f->ctx, t, k};
}

} // namespace

extern "C" {

const char* chk_last_error(void) { return g_last_error.c_str(); }

void chk_string_free(char* s) { delete[] s; }

chk_status chk_field_create(int64_t p, int m, chk_field** out) {
    return guarded([&] {
        if (!out) throw Error(ErrorCode::BadInput, "output pointer is null");
        *out = new chk_field{make_field(p, m)};
    });
}

void chk_field_free(chk_field* f) { delete f; }

chk_status chk_field_to_json(const chk_field* f, char** out_json) {
    return guarded([&] {
        if (!f) throw Error(ErrorCode::BadInput, "field handle is null");
        set_out(out_json, to_json(*f->ctx).dump());
    });
}

chk_status chk_normal_form(const chk_field* f, int t, const char* k_json,
                           const char* expr, char** out_json, char** out_text) {
    return guarded([&] {
        AlgebraParams params = params_from(f, t, k_json);
        if (!expr) throw Error(ErrorCode::BadInput, "expression is null");
        AlgebraElement e = parse(expr, params);
        set_out(out_json, to_json(e).dump());
        set_out(out_text, e.str());
    });
}

chk_status chk_rep_build(const chk_field* f, const char* spec_json, chk_rep** out) {
    return guarded([&] {
        if (!f) throw Error(ErrorCode::BadInput, "field handle is null");
        if (!out) throw Error(ErrorCode::BadInput, "output pointer is null");
        RepSpec spec = rep_spec_from_json(parse_json(spec_json, "spec"), f->ctx);
        *out = new chk_rep{build_rep(spec)};
    });
}

chk_status chk_rep_from_json(const char* rep_json, chk_rep** out) {
    return guarded([&] {
        if (!out) throw Error(ErrorCode::BadInput, "output pointer is null");
        *out = new chk_rep{
            representation_from_json(parse_json(rep_json, "representation"))};
    });
}

void chk_rep_free(chk_rep* r) { delete r; }

chk_status chk_rep_to_json(const chk_rep* r, char** out_json) {
    return guarded([&] {
        if (!r) throw Error(ErrorCode::BadInput, "representation handle is null");
        set_out(out_json, to_json(r->rep).dump());
    });
}

int chk_rep_dim(const chk_rep* r) { return r ? r->rep.dim : -1; }

chk_status chk_rep_direct_sum(const chk_rep* a, const chk_rep* b, chk_rep** out) {
    return guarded([&] {
        if (!a || !b) throw Error(ErrorCode::BadInput, "representation handle is null");
        if (!out) throw Error(ErrorCode::BadInput, "output pointer is null");
        *out = new chk_rep{direct_sum(a->rep, b->rep)};
    });
}

chk_status chk_rep_verify(const chk_rep* r, char** out_json) {
    return guarded([&] {
        if (!r) throw Error(ErrorCode::BadInput, "representation handle is null");
        json out = json::array();
        for (const CheckReport& c : verify_relations(r->rep)) out.push_back(to_json(c));
        set_out(out_json, out.dump());
    });
}

chk_status chk_rep_central_character(const chk_rep* r, char** out_json) {
    return guarded([&] {
        if (!r) throw Error(ErrorCode::BadInput, "representation handle is null");
        json out = json::array();
        for (const CentralScalar& cs : central_character(r->rep)) {
            json entry{{"element", cs.element.str()}, {"scalar", cs.scalar}};
            if (cs.scalar) entry["value"] = to_json(cs.value);
            out.push_back(std::move(entry));
        }
        set_out(out_json, out.dump());
    });
}

chk_status chk_rep_eigen(const chk_rep* r, char** out_json) {
    return guarded([&] {
        if (!r) throw Error(ErrorCode::BadInput, "representation handle is null");
        set_out(out_json, to_json(eigen_census(r->rep)).dump());
    });
}

chk_status chk_rep_irreducible(const chk_rep* r, uint64_t seed, char** out_json) {
    return guarded([&] {
        if (!r) throw Error(ErrorCode::BadInput, "representation handle is null");
        IrrReport report = is_irreducible(r->rep, seed);
        set_out(out_json, to_json(report, r->rep.spec.params.ctx).dump());
    });
}

chk_status chk_rep_intertwiner_laws(const chk_rep* r, char** out_json) {
    return guarded([&] {
        if (!r) throw Error(ErrorCode::BadInput, "representation handle is null");
        json out = json::array();
        for (const CheckReport& c : check_intertwiner_maps(r->rep))
            out.push_back(to_json(c));
        set_out(out_json, out.dump());
    });
}

chk_status chk_iso(const chk_rep* a, const chk_rep* b, uint64_t seed,
                   char** out_json) {
    return guarded([&] {
        if (!a || !b) throw Error(ErrorCode::BadInput, "representation handle is null");
        set_out(out_json, to_json(find_intertwiner(a->rep, b->rep, seed)).dump());
    });
}

chk_status chk_iso_criterion(const chk_field* f, const char* spec_json_a,
                             const char* spec_json_b, char** out_json) {
    return guarded([&] {
        if (!f) throw Error(ErrorCode::BadInput, "field handle is null");
        RepSpec a = rep_spec_from_json(parse_json(spec_json_a, "spec a"), f->ctx);
        RepSpec b = rep_spec_from_json(parse_json(spec_json_b, "spec b"), f->ctx);
        set_out(out_json, to_json(criterion_iso(a, b)).dump());
    });
}

chk_status chk_classify(const chk_field* f, int t, const char* k_json,
                        uint64_t seed, char** out_json) {
    return guarded([&] {
        AlgebraParams params = params_from(f, t, k_json);
        json out = json::array();
        for (const ClassifyEntry& e : classify(params, seed)) {
            json entry{{"family", family_name(e.family)},
                       {"applicable", e.applicable}};
            if (e.applicable) {
                entry["dim"] = e.dim;
                entry["irreducible"] = e.irr == IrrStatus::Irreducible
                                           ? "irreducible"
                                           : (e.irr == IrrStatus::Reducible
                                                  ? "reducible"
                                                  : "inconclusive");
                entry["sample"] = to_json(e.sample);
            } else {
                entry["note"] = e.note;
            }
            out.push_back(std::move(entry));
        }
        set_out(out_json, out.dump());
    });
}

} // extern "C"
