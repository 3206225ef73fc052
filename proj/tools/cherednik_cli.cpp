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

// Command line front end; talks to the shared library through the C surface
// only. Exit codes: 0 pass, 1 check failed, 2 usage or parameter error,
// 3 inconclusive.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cherednik.h"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
    throw CliError{code, message};
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    chk_string_free(s);
    return out;
}

void check_ok(chk_status st, int fail_code = kExitUsage) {
    if (st != CHK_OK) die(fail_code, chk_last_error());
}

// field literal: a single integer or comma separated coefficients, low
// degree first
json parse_field_literal(const std::string& text) {
    json out = json::array();
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoll(part));
        } catch (const std::exception&) {
            die(kExitUsage, "bad field literal: " + text);
        }
    }
    if (out.empty()) die(kExitUsage, "empty field literal");
    return out;
}

struct FieldHandle {
    chk_field* f = nullptr;
    ~FieldHandle() { chk_field_free(f); }
};

struct RepHandle {
    chk_rep* r = nullptr;
    ~RepHandle() { chk_rep_free(r); }
};

struct CommonOpts {
    std::int64_t p = 0;
    int m = 1;
    int t = 0;
    std::string k = "0";
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_tk = true) {
    cmd->add_option("--p", o.p, "odd prime characteristic")->required();
    cmd->add_option("--m", o.m, "extension degree (default 1)");
    if (need_tk) {
        cmd->add_option("--t", o.t, "t parameter, 0 or 1")->required();
        cmd->add_option("--k", o.k, "k parameter, field literal")->required();
    }
    cmd->add_option("--format", o.format, "output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
}

void make_field_literal_padded(json& k, int m) {
    while (static_cast<int>(k.size()) < m) k.push_back(0);
}

FieldHandle open_field(const CommonOpts& o) {
    FieldHandle f;
    check_ok(chk_field_create(o.p, o.m, &f.f));
    return f;
}

struct RepOpts {
    std::string family;
    std::vector<std::string> params;
    std::string in_file;
};

void add_rep_source(CLI::App* cmd, RepOpts& r) {
    cmd->add_option("--family", r.family, "family name, e.g. V13");
    cmd->add_option("--param", r.params, "family parameter name=value, repeatable");
    cmd->add_option("--in", r.in_file, "read a stored representation instead");
}

json spec_json(const CommonOpts& o, const RepOpts& r, int m) {
    json k = parse_field_literal(o.k);
    make_field_literal_padded(k, m);
    json params = json::object();
    for (const std::string& p : r.params) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            die(kExitUsage, "expected name=value in --param, got: " + p);
        json v = parse_field_literal(p.substr(eq + 1));
        make_field_literal_padded(v, m);
        params[p.substr(0, eq)] = std::move(v);
    }
    return json{
        {"t", o.t}, {"k", std::move(k)}, {"family", r.family}, {"parameters", params}};
}

RepHandle open_rep(const FieldHandle& f, const CommonOpts& o, const RepOpts& r) {
    RepHandle rep;
    if (!r.in_file.empty()) {
        std::ifstream in(r.in_file);
        if (!in) die(kExitUsage, "cannot open " + r.in_file);
        std::stringstream buf;
        buf << in.rdbuf();
        check_ok(chk_rep_from_json(buf.str().c_str(), &rep.r));
        return rep;
    }
    if (r.family.empty()) die(kExitUsage, "either --family or --in is required");
    check_ok(chk_rep_build(f.f, spec_json(o, r, o.m).dump().c_str(), &rep.r));
    return rep;
}

void print_reports(const json& reports, const std::string& format) {
    if (format == "tsv") {
        for (const json& r : reports)
            std::cout << r.at("name").get<std::string>() << '\t'
                      << r.at("status").get<std::string>() << '\t'
                      << r.value("witness", "") << '\n';
    } else {
        std::cout << reports.dump(2) << '\n';
    }
}

int all_pass(const json& reports) {
    for (const json& r : reports)
        if (r.at("status").get<std::string>() != "pass") return kExitFail;
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact representation calculator for the rank-1 trigonometric "
                 "double affine Hecke algebra in odd characteristic"};
    app.require_subcommand(1);

    CommonOpts common;
    RepOpts rep_opts;
    RepOpts rep_opts2;
    std::uint64_t seed = 1;
    std::string expr;
    std::string out_file;

    CLI::App* c_build = app.add_subcommand("build", "construct a family instance");
    add_common(c_build, common);
    add_rep_source(c_build, rep_opts);
    c_build->add_option("--out", out_file, "write the representation JSON here");

    CLI::App* c_verify = app.add_subcommand("verify", "check the defining relations");
    add_common(c_verify, common);
    add_rep_source(c_verify, rep_opts);

    CLI::App* c_central =
        app.add_subcommand("central", "central element action and its scalars");
    add_common(c_central, common);
    add_rep_source(c_central, rep_opts);

    CLI::App* c_eigen = app.add_subcommand("eigen", "eigenvalue census of y");
    add_common(c_eigen, common);
    add_rep_source(c_eigen, rep_opts);

    CLI::App* c_irr =
        app.add_subcommand("irreducible", "randomized irreducibility test");
    add_common(c_irr, common);
    add_rep_source(c_irr, rep_opts);
    c_irr->add_option("--seed", seed, "random seed (default 1)");

    CLI::App* c_iso = app.add_subcommand("iso", "isomorphism test for two instances");
    add_common(c_iso, common);
    add_rep_source(c_iso, rep_opts);
    c_iso->add_option("--family2", rep_opts2.family, "second family name")->required();
    c_iso->add_option("--param2", rep_opts2.params,
                      "second family parameter name=value, repeatable");
    c_iso->add_option("--seed", seed, "random seed (default 1)");

    CLI::App* c_nf = app.add_subcommand("normal-form",
                                        "rewrite an expression to PBW normal form");
    add_common(c_nf, common);
    c_nf->add_option("expr", expr, "expression in X, Xinv, s, y, t, k")->required();

    CLI::App* c_classify =
        app.add_subcommand("classify", "list the families at these parameters");
    add_common(c_classify, common);
    c_classify->add_option("--seed", seed, "random seed (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        FieldHandle field = open_field(common);
        json k = parse_field_literal(common.k);
        make_field_literal_padded(k, common.m);

        if (c_build->parsed()) {
            RepHandle rep = open_rep(field, common, rep_opts);
            char* out = nullptr;
            check_ok(chk_rep_to_json(rep.r, &out));
            std::string text = take_string(out);
            if (!out_file.empty()) {
                std::ofstream of(out_file);
                if (!of) die(kExitUsage, "cannot write " + out_file);
                of << text << '\n';
            } else {
                std::cout << text << '\n';
            }
            return kExitPass;
        }
        if (c_verify->parsed()) {
            RepHandle rep = open_rep(field, common, rep_opts);
            char* out = nullptr;
            check_ok(chk_rep_verify(rep.r, &out));
            json reports = json::parse(take_string(out));
            print_reports(reports, common.format);
            return all_pass(reports);
        }
        if (c_central->parsed()) {
            RepHandle rep = open_rep(field, common, rep_opts);
            char* out = nullptr;
            check_ok(chk_rep_central_character(rep.r, &out));
            json entries = json::parse(take_string(out));
            std::cout << entries.dump(2) << '\n';
            for (const json& e : entries)
                if (!e.at("scalar").get<bool>()) return kExitFail;
            return kExitPass;
        }
        if (c_eigen->parsed()) {
            RepHandle rep = open_rep(field, common, rep_opts);
            char* out = nullptr;
            check_ok(chk_rep_eigen(rep.r, &out));
            std::cout << json::parse(take_string(out)).dump(2) << '\n';
            return kExitPass;
        }
        if (c_irr->parsed()) {
            RepHandle rep = open_rep(field, common, rep_opts);
            char* out = nullptr;
            check_ok(chk_rep_irreducible(rep.r, seed, &out));
            json report = json::parse(take_string(out));
            std::cout << report.dump(2) << '\n';
            std::string status = report.at("status").get<std::string>();
            if (status == "irreducible") return kExitPass;
            if (status == "reducible") return kExitFail;
            return kExitInconclusive;
        }
        if (c_iso->parsed()) {
            RepHandle rep1 = open_rep(field, common, rep_opts);
            RepHandle rep2 = open_rep(field, common, rep_opts2);
            char* out = nullptr;
            check_ok(chk_iso(rep1.r, rep2.r, seed, &out));
            json search = json::parse(take_string(out));
            json spec_a = spec_json(common, rep_opts, common.m);
            json spec_b = spec_json(common, rep_opts2, common.m);
            char* out2 = nullptr;
            check_ok(chk_iso_criterion(field.f, spec_a.dump().c_str(),
                                       spec_b.dump().c_str(), &out2));
            json criterion = json::parse(take_string(out2));
            json both{{"search", search}, {"criterion", criterion}};
            std::cout << both.dump(2) << '\n';
            bool agree = search.at("isomorphic") == criterion.at("isomorphic");
            return agree ? kExitPass : kExitFail;
        }
        if (c_nf->parsed()) {
            char* out_json = nullptr;
            char* out_text = nullptr;
            chk_status st = chk_normal_form(field.f, common.t, k.dump().c_str(),
                                            expr.c_str(), &out_json, &out_text);
            check_ok(st);
            std::string terms = take_string(out_json);
            std::string text = take_string(out_text);
            if (common.format == "tsv")
                std::cout << text << '\n';
            else
                std::cout << json{{"text", text}, {"terms", json::parse(terms)}}.dump(2)
                          << '\n';
            return kExitPass;
        }
        if (c_classify->parsed()) {
            char* out = nullptr;
            check_ok(chk_classify(field.f, common.t, k.dump().c_str(), seed, &out));
            json entries = json::parse(take_string(out));
            std::cout << entries.dump(2) << '\n';
            for (const json& e : entries)
                if (e.at("applicable").get<bool>() &&
                    e.at("irreducible").get<std::string>() == "inconclusive")
                    return kExitInconclusive;
            return kExitPass;
        }
        die(kExitUsage, "no subcommand selected");
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
