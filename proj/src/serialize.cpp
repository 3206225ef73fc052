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

#include "cherednik/serialize.hpp"

namespace cherednik {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw Error(ErrorCode::BadInput, msg);
}

const json& field_of(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        bad(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

} // namespace

json to_json(const FieldContext& ctx) {
    return json{{"p", ctx.p}, {"m", ctx.m}, {"modulus", ctx.modulus}};
}

FieldContextPtr field_context_from_json(const json& j) {
    std::int64_t p = field_of(j, "p").get<std::int64_t>();
    int m = field_of(j, "m").get<int>();
    FieldContextPtr ctx = make_field(p, m);
    if (j.contains("modulus")) {
        auto mod = j.at("modulus").get<std::vector<std::int64_t>>();
        if (mod != ctx->modulus) bad("modulus differs from the canonical one");
    }
    return ctx;
}

json to_json(const FieldElement& e) { return json(e.coeffs()); }

FieldElement field_element_from_json(const json& j, const FieldContextPtr& ctx) {
    if (!j.is_array()) bad("field element must be a coefficient array");
    auto coeffs = j.get<std::vector<std::int64_t>>();
    if (static_cast<int>(coeffs.size()) != ctx->m)
        bad("coefficient array length differs from the field degree");
    for (std::int64_t& c : coeffs) c = ((c % ctx->p) + ctx->p) % ctx->p;
    return FieldElement(ctx, std::move(coeffs));
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, const FieldContextPtr& ctx) {
    if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.at(0).size());
    Matrix m(ctx, rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = j.at(static_cast<size_t>(r));
        if (static_cast<int>(row.size()) != cols) bad("ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = field_element_from_json(row.at(static_cast<size_t>(c)), ctx);
    }
    return m;
}

json to_json(const AlgebraElement& e) {
    json terms = json::array();
    for (const auto& [m, c] : e.terms())
        terms.push_back(json{{"i", m.i}, {"j", m.j}, {"l", m.l}, {"coeff", to_json(c)}});
    return terms;
}

AlgebraElement algebra_element_from_json(const json& j, const AlgebraParams& params) {
    if (!j.is_array()) bad("algebra element must be a term list");
    AlgebraElement out = AlgebraElement::zero(params);
    for (const json& term : j) {
        PBWMonomial m;
        m.i = field_of(term, "i").get<int>();
        m.j = field_of(term, "j").get<std::int64_t>();
        m.l = field_of(term, "l").get<std::int64_t>();
        if (m.i < 0 || m.i > 1 || m.l < 0) bad("monomial exponents out of range");
        out.add_term(m, field_element_from_json(field_of(term, "coeff"), params.ctx));
    }
    return out;
}

json to_json(const RepSpec& spec) {
    json params = json::object();
    for (const auto& [name, value] : spec.values) params[name] = to_json(value);
    json out{{"t", spec.params.t},
             {"k", to_json(spec.params.k)},
             {"family", family_name(spec.family)},
             {"parameters", std::move(params)}};
    if (spec.family == Family::Synthetic) {
        json comps = json::array();
        for (const RepSpec& c : spec.components) comps.push_back(to_json(c));
        out["components"] = std::move(comps);
    }
    return out;
}

RepSpec rep_spec_from_json(const json& j, const FieldContextPtr& ctx) {
    RepSpec spec;
    spec.params.ctx = ctx;
    spec.params.t = field_of(j, "t").get<int>();
    if (spec.params.t != 0 && spec.params.t != 1) bad("t must be 0 or 1");
    spec.params.k = field_element_from_json(field_of(j, "k"), ctx);
    spec.family = family_from_name(field_of(j, "family").get<std::string>());
    const json& params = field_of(j, "parameters");
    if (!params.is_object()) bad("parameters must be an object");
    for (auto it = params.begin(); it != params.end(); ++it)
        spec.values.emplace(it.key(), field_element_from_json(it.value(), ctx));
    if (j.contains("components"))
        for (const json& c : j.at("components"))
            spec.components.push_back(rep_spec_from_json(c, ctx));
    return spec;
}

json to_json(const Representation& rep) {
    return json{{"field", to_json(*rep.spec.params.ctx)},
                {"spec", to_json(rep.spec)},
                {"dim", rep.dim},
                {"labels", rep.labels},
                {"mats",
                 json{{"X", to_json(rep.X)},
                      {"Xinv", to_json(rep.Xinv)},
                      {"S", to_json(rep.S)},
                      {"Y", to_json(rep.Y)}}}};
}

Representation representation_from_json(const json& j) {
    FieldContextPtr ctx = field_context_from_json(field_of(j, "field"));
    Representation rep;
    rep.spec = rep_spec_from_json(field_of(j, "spec"), ctx);
    rep.dim = field_of(j, "dim").get<int>();
    rep.labels = field_of(j, "labels").get<std::vector<std::string>>();
    const json& mats = field_of(j, "mats");
    rep.X = matrix_from_json(field_of(mats, "X"), ctx);
    rep.Xinv = matrix_from_json(field_of(mats, "Xinv"), ctx);
    rep.S = matrix_from_json(field_of(mats, "S"), ctx);
    rep.Y = matrix_from_json(field_of(mats, "Y"), ctx);
    if (rep.X.rows() != rep.dim || static_cast<int>(rep.labels.size()) != rep.dim)
        bad("dimension disagrees with the matrix blocks");
    auto residuals = relation_matrices(rep.X, rep.Xinv, rep.S, rep.Y, rep.spec.params);
    for (const Matrix& r : residuals)
        if (!r.is_zero()) bad("stored matrices violate a defining relation");
    if (!(rep.X * rep.Xinv == Matrix::identity(ctx, rep.dim)))
        bad("stored Xinv is not the inverse of X");
    // recover the candidate eigenvalue list from a fresh build when possible
    if (rep.spec.family != Family::Synthetic) {
        rep.y_candidates = build_rep(rep.spec).y_candidates;
    } else {
        for (std::int64_t v = 0; v < ctx->p; ++v)
            rep.y_candidates.push_back(FieldElement::from_int(ctx, v));
    }
    return rep;
}

json to_json(const CheckReport& r) {
    return json{{"name", r.name},
                {"status", r.pass ? "pass" : "fail"},
                {"witness", r.witness}};
}

json to_json(const IsoVerdict& v) {
    json out{{"isomorphic", v.isomorphic}, {"criterion", v.criterion}};
    if (v.intertwiner) out["intertwiner"] = to_json(*v.intertwiner);
    return out;
}

json to_json(const EigenReport& r) {
    json entries = json::array();
    for (const EigenEntry& e : r.entries)
        entries.push_back(json{{"value", to_json(e.value)},
                               {"geometric", e.geometric},
                               {"algebraic", e.algebraic}});
    return json{{"dim", r.dim},
                {"entries", std::move(entries)},
                {"geometric_total", r.geometric_total},
                {"algebraic_total", r.algebraic_total}};
}

json to_json(const IrrReport& r, const FieldContextPtr&) {
    const char* status = r.status == IrrStatus::Irreducible  ? "irreducible"
                         : r.status == IrrStatus::Reducible ? "reducible"
                                                            : "inconclusive";
    json witness = json::array();
    for (const auto& v : r.invariant_basis) {
        json row = json::array();
        for (const FieldElement& e : v) row.push_back(to_json(e));
        witness.push_back(std::move(row));
    }
    return json{{"status", status},
                {"invariant_basis", std::move(witness)},
                {"rounds", r.rounds_used}};
}

} // namespace cherednik
