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

#include "cherednik/reps.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "cherednik/analysis.hpp"

namespace cherednik {

const char* family_name(Family f) {
    switch (f) {
        case Family::V01: return "V01";
        case Family::V02: return "V02";
        case Family::V03: return "V03";
        case Family::V04: return "V04";
        case Family::V05: return "V05";
        case Family::V11: return "V11";
        case Family::V12: return "V12";
        case Family::V13: return "V13";
        case Family::V14: return "V14";
        case Family::V15: return "V15";
        case Family::V16: return "V16";
        case Family::V17: return "V17";
        case Family::Synthetic: return "Synthetic";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    static const std::map<std::string, Family> table = {
        {"V01", Family::V01}, {"V02", Family::V02}, {"V03", Family::V03},
        {"V04", Family::V04}, {"V05", Family::V05}, {"V11", Family::V11},
        {"V12", Family::V12}, {"V13", Family::V13}, {"V14", Family::V14},
        {"V15", Family::V15}, {"V16", Family::V16}, {"V17", Family::V17},
        {"Synthetic", Family::Synthetic}};
    auto it = table.find(name);
    if (it == table.end())
        throw Error(ErrorCode::BadParameter, "unknown family name: " + name);
    return it->second;
}

const FieldElement& RepSpec::value(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end())
        throw Error(ErrorCode::BadParameter,
                    std::string(family_name(family)) + " is missing parameter " + name);
    return it->second;
}

namespace {

using i64 = std::int64_t;

void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(ErrorCode::BadParameter, msg);
}

bool is_pm_one(const FieldElement& v) {
    return v.is_one() || (-v).is_one();
}

struct Builder {
    FieldContextPtr ctx;
    int dim;
    Matrix X, Xinv, S, Y;
    std::vector<std::string> labels;

    Builder(FieldContextPtr c, int n)
        : ctx(c), dim(n), X(c, n, n), Xinv(c, n, n), S(c, n, n), Y(c, n, n),
          labels(static_cast<size_t>(n)) {}

    // X column src gets sign * (s applied to basis vector target)
    void x_from_s(int src, int target, const FieldElement& sign) {
        for (int r = 0; r < dim; ++r) X.at(r, src) = sign * S.at(r, target);
    }
};

std::string idx_label(const char* letter, i64 j) {
    std::ostringstream os;
    os << letter << '[' << j << ']';
    return os.str();
}

FieldElement fe(const FieldContextPtr& ctx, i64 v) {
    return FieldElement::from_int(ctx, v);
}

// ---- t = 0 families -------------------------------------------------------

Builder build_v01(const RepSpec& spec) {
    const auto& params = spec.params;
    const FieldContextPtr& ctx = params.ctx;
    const FieldElement& k = params.k;
    const FieldElement beta = spec.value("beta");
    const FieldElement a = spec.value("a");
    require(params.t == 0, "V01 requires t=0");
    require(!k.is_zero(), "V01 requires k != 0");
    require(!beta.is_zero() && !a.is_zero(), "V01 requires a, beta != 0");

    Builder b(ctx, 2);
    b.labels = {"v0", "v1"};
    FieldElement two = fe(ctx, 2), four = fe(ctx, 4), eight = fe(ctx, 8);
    FieldElement beta2 = beta * beta;
    b.Y.at(0, 0) = beta;
    b.Y.at(1, 1) = -beta;
    b.X.at(0, 0) = a;
    b.X.at(1, 0) = -(k * k) / (four * beta2);
    b.X.at(0, 1) = FieldElement::one(ctx);
    b.X.at(1, 1) = a.inv() - (k * k) / (four * a * beta2);
    b.S.at(0, 0) = -k / (two * beta);
    b.S.at(1, 0) = (k * k * k - four * k * beta2) / (eight * a * beta2 * beta);
    b.S.at(0, 1) = -(two * a * beta) / k;
    b.S.at(1, 1) = k / (two * beta);
    return b;
}

Builder build_v02(const RepSpec& spec) {
    const auto& params = spec.params;
    const FieldContextPtr& ctx = params.ctx;
    const FieldElement& k = params.k;
    const FieldElement a = spec.value("a");
    const FieldElement bb = spec.value("b");
    require(params.t == 0, "V02 requires t=0");
    require(!k.is_zero(), "V02 requires k != 0");
    require(is_pm_one(a), "V02 requires a = +-1");

    Builder b(ctx, 2);
    b.labels = {"v0", "v1"};
    b.Y.at(0, 1) = FieldElement::one(ctx); // y v1 = v0
    b.S.at(0, 0) = FieldElement::one(ctx);
    b.S.at(1, 0) = -k;
    b.S.at(1, 1) = -FieldElement::one(ctx);
    b.X.at(0, 0) = a;
    b.X.at(1, 0) = -a * k;
    b.X.at(0, 1) = bb;
    b.X.at(1, 1) = a - k * bb;
    return b;
}

Builder build_v03(const RepSpec& spec) {
    const auto& params = spec.params;
    const FieldContextPtr& ctx = params.ctx;
    const FieldElement beta = spec.value("beta");
    const FieldElement a = spec.value("a");
    require(params.t == 0, "V03 requires t=0");
    require(params.k.is_zero(), "V03 requires k = 0");
    require(!beta.is_zero() && !a.is_zero(), "V03 requires a, beta != 0");

    Builder b(ctx, 2);
    b.labels = {"v0", "v1"};
    b.Y.at(0, 0) = beta;
    b.Y.at(1, 1) = -beta;
    b.X.at(0, 0) = a;
    b.X.at(1, 1) = a.inv();
    b.S.at(1, 0) = FieldElement::one(ctx); // s v0 = v1
    b.S.at(0, 1) = FieldElement::one(ctx);
    return b;
}

Builder build_v04(const RepSpec& spec) {
    const auto& params = spec.params;
    const FieldContextPtr& ctx = params.ctx;
    const FieldElement a = spec.value("a");
    require(params.t == 0, "V04 requires t=0");
    require(params.k.is_zero(), "V04 requires k = 0");
    require(!a.is_zero() && !is_pm_one(a), "V04 requires a outside {0, +-1}");

    Builder b(ctx, 2);
    b.labels = {"v0", "v1"};
    b.X.at(0, 0) = a;
    b.X.at(1, 1) = a.inv();
    b.S.at(1, 0) = FieldElement::one(ctx);
    b.S.at(0, 1) = FieldElement::one(ctx);
    return b;
}

Builder build_v05(const RepSpec& spec) {
    const auto& params = spec.params;
    const FieldContextPtr& ctx = params.ctx;
    const FieldElement a = spec.value("a");
    const FieldElement bb = spec.value("b");
    require(params.t == 0, "V05 requires t=0");
    require(params.k.is_zero(), "V05 requires k = 0");
    require(is_pm_one(a) && is_pm_one(bb), "V05 requires a, b = +-1");

    Builder b(ctx, 1);
    b.labels = {"v0"};
    b.X.at(0, 0) = a;
    b.S.at(0, 0) = bb;
    return b;
}

// ---- t = 1 families -------------------------------------------------------

// even canonical lift of k, in [2, p-1]
i64 even_k_lift(const AlgebraParams& params, const char* family) {
    require(params.k.in_prime_subfield(),
            std::string(family) + " requires k in the prime subfield");
    i64 kk = params.k.lift();
    require(kk % 2 == 0 && kk >= 2 && kk <= params.ctx->p - 1,
            std::string(family) + " requires k even with 2 <= k <= p-1");
    return kk;
}

Builder build_v11(const RepSpec& spec) {
    const auto& params = spec.params;
    const FieldContextPtr& ctx = params.ctx;
    const FieldElement& k = params.k;
    const FieldElement mu = spec.value("mu");
    const FieldElement d = spec.value("d");
    const i64 p = ctx->p;
    require(params.t == 1, "V11 requires t=1");
    require(!d.is_zero(), "V11 requires d != 0");
    for (i64 j = 0; j < p; ++j)
        if ((mu + fe(ctx, j)).is_zero())
            throw Error(ErrorCode::BadParameter,
                        "V11 divisor mu+" + std::to_string(j) + " is zero");

    const int n = static_cast<int>(2 * p);
    Builder b(ctx, n);
    // basis order: v[mu+c] for c = 0..p-1, then v[-mu+c] for c = 0..p-1
    auto plus_idx = [&](i64 c) { return static_cast<int>(((c % p) + p) % p); };
    auto minus_idx = [&](i64 c) { return static_cast<int>(p + ((c % p) + p) % p); };
    for (i64 c = 0; c < p; ++c) {
        b.labels[plus_idx(c)] = "v[mu+" + std::to_string(c) + "]";
        b.labels[minus_idx(c)] = "v[-mu+" + std::to_string(c) + "]";
        b.Y.at(plus_idx(c), plus_idx(c)) = mu + fe(ctx, c);
        b.Y.at(minus_idx(c), minus_idx(c)) = -mu + fe(ctx, c);
    }
    FieldElement two = fe(ctx, 2), four = fe(ctx, 4);
    for (i64 j = 1; j < p; ++j) {
        FieldElement muj = mu + fe(ctx, j);
        FieldElement muj_inv = muj.inv();
        int col_minus = minus_idx(-j); // v_{-mu-j}
        int col_plus = plus_idx(j);    // v_{mu+j}
        b.S.at(col_plus, col_minus) = -muj_inv;
        b.S.at(col_minus, col_minus) = k * muj_inv / two;
        b.S.at(col_minus, col_plus) = (k * k) * muj_inv / four - muj;
        b.S.at(col_plus, col_plus) = -k * muj_inv / two;
    }
    FieldElement mu_inv = mu.inv();
    b.S.at(minus_idx(0), minus_idx(0)) = k * mu_inv / two;
    b.S.at(plus_idx(0), minus_idx(0)) = -d * mu_inv;
    b.S.at(minus_idx(0), plus_idx(0)) = (k * k) / (four * d * mu) - mu / d;
    b.S.at(plus_idx(0), plus_idx(0)) = -k * mu_inv / two;
    // X v_beta = s v_{-beta-1}
    FieldElement one = FieldElement::one(ctx);
    for (i64 c = 0; c < p; ++c) {
        b.x_from_s(plus_idx(c), minus_idx(-c - 1), one);
        b.x_from_s(minus_idx(c), plus_idx(-c - 1), one);
    }
    return b;
}

Builder build_v12(const RepSpec& spec) {
    const auto& params = spec.params;
    const FieldContextPtr& ctx = params.ctx;
    const FieldElement& k = params.k;
    const FieldElement theta = spec.value("theta");
    const i64 p = ctx->p;
    require(params.t == 1, "V12 requires t=1");
    require(!k.in_prime_subfield(), "V12 requires k outside F_p");
    require(is_pm_one(theta), "V12 requires theta = +-1");

    const int n = static_cast<int>(2 * p);
    Builder b(ctx, n);
    auto v = [&](i64 j) { return static_cast<int>(((j % p) + p) % p); };
    auto w = [&](i64 j) { return static_cast<int>(p + ((j % p) + p) % p); };
    FieldElement one = FieldElement::one(ctx);
    FieldElement two = fe(ctx, 2), four = fe(ctx, 4);
    for (i64 j = 0; j < p; ++j) {
        b.labels[v(j)] = idx_label("v", j);
        b.labels[w(j)] = idx_label("w", j);
        b.Y.at(v(j), v(j)) = fe(ctx, j);
        b.Y.at(w(j), w(j)) = fe(ctx, j);
        b.Y.at(v(j), w(j)) = one; // y w_j = j w_j + v_j
    }
    b.S.at(w(0), v(0)) = -k;
    b.S.at(v(0), w(0)) = -k.inv();
    for (i64 j = 1; j <= (p - 1) / 2; ++j) {
        FieldElement fj = fe(ctx, j), fj_inv = fe(ctx, j).inv();
        FieldElement fj2_inv = fj_inv * fj_inv;
        b.S.at(v(j), v(-j)) = fj_inv;
        b.S.at(v(-j), v(-j)) = k * fj_inv / two;
        b.S.at(v(-j), v(j)) = fj - (k * k) * fj_inv / four;
        b.S.at(v(j), v(j)) = -k * fj_inv / two;
        b.S.at(v(j), w(-j)) = fj2_inv;
        b.S.at(v(-j), w(-j)) = k * fj2_inv / two;
        b.S.at(w(j), w(-j)) = -fj_inv;
        b.S.at(w(-j), w(-j)) = k * fj_inv / two;
        b.S.at(v(-j), w(j)) = one + (k * k) * fj2_inv / four;
        b.S.at(v(j), w(j)) = k * fj2_inv / two;
        b.S.at(w(j), w(j)) = -k * fj_inv / two;
        b.S.at(w(-j), w(j)) = (k * k) * fj_inv / four - fj;
    }
    i64 half = (p - 1) / 2;
    for (i64 j = 0; j < p; ++j) {
        if (j != half) {
            b.x_from_s(v(j), v(-j - 1), -one);
            b.x_from_s(w(j), w(-j - 1), one);
        }
    }
    b.x_from_s(v(half), v(half), theta);
    b.x_from_s(w(half), w(half), -theta);
    return b;
}

Builder build_v13(const RepSpec& spec) {
    const auto& params = spec.params;
    const FieldContextPtr& ctx = params.ctx;
    const FieldElement& k = params.k;
    const FieldElement theta = spec.value("theta");
    const i64 p = ctx->p;
    require(params.t == 1, "V13 requires t=1");
    require(is_pm_one(theta), "V13 requires theta = +-1");
    const i64 kk = even_k_lift(params, "V13");
    const i64 h = kk / 2;

    const int n = static_cast<int>(p - kk);
    Builder b(ctx, n);
    // labels h, h+1, ..., p-1-h
    auto idx = [&](i64 lab) {
        i64 l = ((lab % p) + p) % p;
        return static_cast<int>(l - h);
    };
    FieldElement one = FieldElement::one(ctx);
    FieldElement two = fe(ctx, 2), four = fe(ctx, 4);
    for (i64 l = h; l <= p - 1 - h; ++l) {
        b.labels[idx(l)] = idx_label("v", l);
        b.Y.at(idx(l), idx(l)) = fe(ctx, l);
    }
    b.S.at(idx(h), idx(h)) = -one;
    for (i64 j = h + 1; j <= (p - 1) / 2; ++j) {
        FieldElement fj = fe(ctx, j), fj_inv = fe(ctx, j).inv();
        b.S.at(idx(-j), idx(-j)) = k * fj_inv / two;
        b.S.at(idx(j), idx(-j)) = -fj_inv;
        b.S.at(idx(-j), idx(j)) = -fj + (k * k) * fj_inv / four;
        b.S.at(idx(j), idx(j)) = -k * fj_inv / two;
    }
    i64 half = (p - 1) / 2;
    for (i64 l = h; l <= p - 1 - h; ++l) {
        if (l != half) b.x_from_s(idx(l), idx(-l - 1), -one);
    }
    b.x_from_s(idx(half), idx(half), theta);
    return b;
}

// shared v/w action of V14 and V15; in both, w_0 = -(1/k) s v_0
void fill_vw_block(Builder& b, const FieldElement& k, i64 kk,
                   const std::function<int(i64)>& v, const std::function<int(i64)>& w) {
    const FieldContextPtr& ctx = b.ctx;
    const i64 p = ctx->p;
    const i64 h = kk / 2;
    FieldElement one = FieldElement::one(ctx);
    FieldElement two = fe(ctx, 2), four = fe(ctx, 4);
    for (i64 j = 0; j < p; ++j) {
        b.Y.at(v(j), v(j)) = fe(ctx, j);
    }
    for (i64 j = -h; j <= h - 1; ++j) {
        b.Y.at(w(j), w(j)) = fe(ctx, j);
        b.Y.at(v(j), w(j)) = one;
    }
    b.S.at(w(0), v(0)) = -k;
    b.S.at(v(0), w(0)) = -k.inv();
    for (i64 j = 1; j <= (p - 1) / 2; ++j) {
        if (j == h) continue;
        FieldElement fj = fe(ctx, j), fj_inv = fe(ctx, j).inv();
        b.S.at(v(j), v(-j)) = fj_inv;
        b.S.at(v(-j), v(-j)) = k * fj_inv / two;
        b.S.at(v(-j), v(j)) = fj - (k * k) * fj_inv / four;
        b.S.at(v(j), v(j)) = -k * fj_inv / two;
    }
    b.S.at(v(-h), v(-h)) = one;
    b.S.at(v(-h), v(h)) = two;
    b.S.at(v(h), v(h)) = -one;
    for (i64 j = 1; j <= h - 1; ++j) {
        FieldElement fj = fe(ctx, j), fj_inv = fe(ctx, j).inv();
        FieldElement fj2_inv = fj_inv * fj_inv;
        b.S.at(v(j), w(-j)) = fj2_inv;
        b.S.at(v(-j), w(-j)) = k * fj2_inv / two;
        b.S.at(w(j), w(-j)) = -fj_inv;
        b.S.at(w(-j), w(-j)) = k * fj_inv / two;
        b.S.at(v(-j), w(j)) = one + (k * k) * fj2_inv / four;
        b.S.at(v(j), w(j)) = k * fj2_inv / two;
        b.S.at(w(j), w(j)) = -k * fj_inv / two;
        b.S.at(w(-j), w(j)) = (k * k) * fj_inv / four - fj;
    }
    b.S.at(v(h), w(-h)) = -two / k;
    b.S.at(v(-h), w(-h)) = two / k;
    b.S.at(w(-h), w(-h)) = one;
}

Builder build_v14(const RepSpec& spec) {
    const auto& params = spec.params;
    const FieldContextPtr& ctx = params.ctx;
    const FieldElement& k = params.k;
    const FieldElement c = spec.value("c");
    const i64 p = ctx->p;
    require(params.t == 1, "V14 requires t=1");
    require(is_pm_one(c), "V14 requires c = +-1");
    const i64 kk = even_k_lift(params, "V14");
    const i64 h = kk / 2;

    const int n = static_cast<int>(p + kk);
    Builder b(ctx, n);
    auto v = [&](i64 j) { return static_cast<int>(((j % p) + p) % p); };
    // w block ordered by ascending canonical lift: 0..h-1, p-h..p-1
    auto w = [&](i64 j) {
        i64 l = ((j % p) + p) % p;
        return static_cast<int>(p + (l < h ? l : l - (p - kk)));
    };
    for (i64 j = 0; j < p; ++j) b.labels[v(j)] = idx_label("v", j);
    for (i64 j = -h; j <= h - 1; ++j) b.labels[w(j)] = idx_label("w", ((j % p) + p) % p);
    fill_vw_block(b, k, kk, v, w);
    FieldElement one = FieldElement::one(ctx);
    i64 half = (p - 1) / 2;
    for (i64 j = 0; j < p; ++j)
        if (j != half) b.x_from_s(v(j), v(-j - 1), -one);
    b.x_from_s(v(half), v(half), c);
    for (i64 j = -h; j <= h - 1; ++j) b.x_from_s(w(j), w(-j - 1), one);
    return b;
}

Builder build_v15(const RepSpec& spec) {
    const auto& params = spec.params;
    const FieldContextPtr& ctx = params.ctx;
    const FieldElement& k = params.k;
    const FieldElement c = spec.value("c");
    const i64 p = ctx->p;
    require(params.t == 1, "V15 requires t=1");
    const i64 kk = even_k_lift(params, "V15");
    const i64 h = kk / 2;

    const int n = static_cast<int>(2 * p);
    Builder b(ctx, n);
    auto v = [&](i64 j) { return static_cast<int>(((j % p) + p) % p); };
    auto w = [&](i64 j) {
        i64 l = ((j % p) + p) % p;
        return static_cast<int>(p + (l < h ? l : l - (p - kk)));
    };
    auto u = [&](i64 j) {
        i64 l = ((j % p) + p) % p;
        return static_cast<int>(p + kk + (l - h));
    };
    for (i64 j = 0; j < p; ++j) b.labels[v(j)] = idx_label("v", j);
    for (i64 j = -h; j <= h - 1; ++j) b.labels[w(j)] = idx_label("w", ((j % p) + p) % p);
    for (i64 l = h; l <= p - 1 - h; ++l) b.labels[u(l)] = idx_label("u", l);
    fill_vw_block(b, k, kk, v, w);
    FieldElement one = FieldElement::one(ctx);
    FieldElement two = fe(ctx, 2), four = fe(ctx, 4);
    // u block eigenvectors of y
    for (i64 l = h; l <= p - 1 - h; ++l) b.Y.at(u(l), u(l)) = fe(ctx, l);
    for (i64 j = h + 1; j <= (p - 1) / 2; ++j) {
        FieldElement fj = fe(ctx, j), fj_inv = fe(ctx, j).inv();
        b.S.at(u(-j), u(j)) = -fj_inv;
        b.S.at(u(j), u(j)) = -k * fj_inv / two;
        b.S.at(u(j), u(-j)) = (k * k) * fj_inv / four - fj;
        b.S.at(u(-j), u(-j)) = k * fj_inv / two;
    }
    b.S.at(v(-h), u(h)) = two * c / k;
    b.S.at(u(h), u(h)) = -one;
    i64 half = (p - 1) / 2;
    for (i64 j = 0; j < p; ++j)
        if (j != half) b.x_from_s(v(j), v(-j - 1), -one);
    b.x_from_s(v(half), u(half), one);
    for (i64 l = h; l <= p - 1 - h; ++l)
        if (l != half) b.x_from_s(u(l), u(-l - 1), -one);
    b.x_from_s(u(half), v(half), one);
    for (i64 j = -h; j <= h - 1; ++j) b.x_from_s(w(j), w(-j - 1), one);
    return b;
}

Builder build_v16(const RepSpec& spec) {
    const auto& params = spec.params;
    const FieldContextPtr& ctx = params.ctx;
    const FieldElement c = spec.value("c");
    const FieldElement theta = spec.value("theta");
    const i64 p = ctx->p;
    require(params.t == 1, "V16 requires t=1");
    require(params.k.is_zero(), "V16 requires k = 0");
    require(is_pm_one(c) && is_pm_one(theta), "V16 requires c, theta = +-1");

    Builder b(ctx, static_cast<int>(p));
    auto v = [&](i64 j) { return static_cast<int>(((j % p) + p) % p); };
    for (i64 j = 0; j < p; ++j) {
        b.labels[v(j)] = idx_label("v", j);
        b.Y.at(v(j), v(j)) = fe(ctx, j);
    }
    b.S.at(v(0), v(0)) = c;
    for (i64 j = 1; j <= (p - 1) / 2; ++j) {
        b.S.at(v(-j), v(j)) = -fe(ctx, j);
        b.S.at(v(j), v(-j)) = -fe(ctx, j).inv();
    }
    FieldElement one = FieldElement::one(ctx);
    i64 half = (p - 1) / 2;
    for (i64 j = 0; j < p; ++j)
        if (j != half) b.x_from_s(v(j), v(-j - 1), one);
    b.x_from_s(v(half), v(half), theta);
    return b;
}

Builder build_v17(const RepSpec& spec) {
    const auto& params = spec.params;
    const FieldContextPtr& ctx = params.ctx;
    const FieldElement a = spec.value("a");
    const i64 p = ctx->p;
    require(params.t == 1, "V17 requires t=1");
    require(params.k.is_zero(), "V17 requires k = 0");

    const int n = static_cast<int>(2 * p);
    Builder b(ctx, n);
    auto v = [&](i64 j) { return static_cast<int>(((j % p) + p) % p); };
    auto u = [&](i64 j) { return static_cast<int>(p + ((j % p) + p) % p); };
    FieldElement one = FieldElement::one(ctx);
    for (i64 j = 0; j < p; ++j) {
        b.labels[v(j)] = idx_label("v", j);
        b.labels[u(j)] = idx_label("u", j);
        b.Y.at(v(j), v(j)) = fe(ctx, j);
        b.Y.at(u(j), u(j)) = fe(ctx, j);
    }
    b.S.at(v(0), v(0)) = one; // c normalized to 1
    b.S.at(v(0), u(0)) = a;
    b.S.at(u(0), u(0)) = -one;
    for (i64 j = 1; j <= (p - 1) / 2; ++j) {
        b.S.at(v(j), v(-j)) = -fe(ctx, j).inv();
        b.S.at(v(-j), v(j)) = -fe(ctx, j);
        b.S.at(u(-j), u(j)) = fe(ctx, j).inv();
        b.S.at(u(j), u(-j)) = fe(ctx, j);
    }
    i64 half = (p - 1) / 2;
    for (i64 j = 0; j < p; ++j) {
        if (j != half) {
            b.x_from_s(v(j), v(-j - 1), one);
            b.x_from_s(u(j), u(-j - 1), one);
        }
    }
    b.x_from_s(v(half), u(half), one);
    b.x_from_s(u(half), v(half), one);
    return b;
}

std::vector<FieldElement> default_candidates(const RepSpec& spec) {
    const FieldContextPtr& ctx = spec.params.ctx;
    const i64 p = ctx->p;
    std::vector<FieldElement> out;
    switch (spec.family) {
        case Family::V01:
        case Family::V03: {
            FieldElement beta = spec.value("beta");
            out = {beta, -beta};
            break;
        }
        case Family::V02:
        case Family::V04:
        case Family::V05:
            out = {FieldElement::zero(ctx)};
            break;
        case Family::V11: {
            FieldElement mu = spec.value("mu");
            for (i64 c = 0; c < p; ++c) out.push_back(mu + fe(ctx, c));
            for (i64 c = 0; c < p; ++c) out.push_back(-mu + fe(ctx, c));
            break;
        }
        case Family::V13: {
            i64 kk = spec.params.k.lift();
            for (i64 l = kk / 2; l <= p - 1 - kk / 2; ++l) out.push_back(fe(ctx, l));
            break;
        }
        default:
            for (i64 j = 0; j < p; ++j) out.push_back(fe(ctx, j));
            break;
    }
    return out;
}

} // namespace

Representation build_rep(const RepSpec& spec) {
    Builder b = [&] {
        switch (spec.family) {
            case Family::V01: return build_v01(spec);
            case Family::V02: return build_v02(spec);
            case Family::V03: return build_v03(spec);
            case Family::V04: return build_v04(spec);
            case Family::V05: return build_v05(spec);
            case Family::V11: return build_v11(spec);
            case Family::V12: return build_v12(spec);
            case Family::V13: return build_v13(spec);
            case Family::V14: return build_v14(spec);
            case Family::V15: return build_v15(spec);
            case Family::V16: return build_v16(spec);
            case Family::V17: return build_v17(spec);
            case Family::Synthetic:
                throw Error(ErrorCode::BadParameter,
                            "Synthetic specs are only produced by direct_sum");
        }
        throw Error(ErrorCode::BadParameter, "unknown family");
    }();

    FieldElement det = b.X.det();
    if (det.is_zero())
        throw Error(ErrorCode::BadParameter, "X matrix is singular");
    b.Xinv = b.X.inverse();

    Representation rep{spec, b.dim, std::move(b.labels),
                       std::move(b.X), std::move(b.Xinv), std::move(b.S), std::move(b.Y),
                       default_candidates(spec)};
    auto residuals = relation_matrices(rep.X, rep.Xinv, rep.S, rep.Y, spec.params);
    for (size_t ri = 0; ri < residuals.size(); ++ri) {
        const Matrix& r = residuals[ri];
        if (r.is_zero()) continue;
        std::ostringstream os;
        os << "constructed " << family_name(spec.family)
           << " violates defining relation " << (ri + 1);
        for (int row = 0; row < r.rows(); ++row)
            for (int col = 0; col < r.cols(); ++col)
                if (!r.at(row, col).is_zero()) {
                    os << " at (" << rep.labels[static_cast<size_t>(row)] << ", "
                       << rep.labels[static_cast<size_t>(col)] << ") = "
                       << r.at(row, col).str();
                    throw Error(ErrorCode::BadInput, os.str());
                }
    }
    return rep;
}

std::vector<FieldElement> act(const Representation& rep, const AlgebraElement& elem,
                              const std::vector<FieldElement>& v) {
    if (static_cast<int>(v.size()) != rep.dim)
        throw Error(ErrorCode::DimensionMismatch, "vector length differs from dim");
    if (!(*elem.params().ctx == *rep.spec.params.ctx))
        throw Error(ErrorCode::ContextMismatch, "field contexts differ");
    std::vector<FieldElement> out(rep.dim, FieldElement::zero(rep.spec.params.ctx));
    for (const auto& [m, c] : elem.terms()) {
        std::vector<FieldElement> x = v;
        for (std::int64_t l = 0; l < m.l; ++l) x = rep.Y.apply(x);
        const Matrix& xm = m.j > 0 ? rep.X : rep.Xinv;
        for (std::int64_t j = 0; j < std::llabs(m.j); ++j) x = xm.apply(x);
        if (m.i) x = rep.S.apply(x);
        for (int r = 0; r < rep.dim; ++r) out[r] += c * x[r];
    }
    return out;
}

Matrix matrix_of(const Representation& rep, const AlgebraElement& elem) {
    if (!(*elem.params().ctx == *rep.spec.params.ctx))
        throw Error(ErrorCode::ContextMismatch, "field contexts differ");
    const FieldContextPtr& ctx = rep.spec.params.ctx;
    Matrix out(ctx, rep.dim, rep.dim);
    for (const auto& [m, c] : elem.terms()) {
        Matrix term = rep.Y.pow(m.l);
        term = (m.j >= 0 ? rep.X.pow(m.j) : rep.Xinv.pow(-m.j)) * term;
        if (m.i) term = rep.S * term;
        out = out + term.scaled(c);
    }
    return out;
}

Representation direct_sum(const Representation& r1, const Representation& r2) {
    if (!(r1.spec.params == r2.spec.params))
        throw Error(ErrorCode::ContextMismatch, "algebra parameters differ");
    const FieldContextPtr& ctx = r1.spec.params.ctx;
    int n = r1.dim + r2.dim;
    Representation out;
    out.spec.params = r1.spec.params;
    out.spec.family = Family::Synthetic;
    out.spec.components = {r1.spec, r2.spec};
    out.dim = n;
    out.X = Matrix(ctx, n, n);
    out.Xinv = Matrix(ctx, n, n);
    out.S = Matrix(ctx, n, n);
    out.Y = Matrix(ctx, n, n);
    auto place = [&](Matrix Representation::*mat) {
        for (int i = 0; i < r1.dim; ++i)
            for (int j = 0; j < r1.dim; ++j)
                (out.*mat).at(i, j) = (r1.*mat).at(i, j);
        for (int i = 0; i < r2.dim; ++i)
            for (int j = 0; j < r2.dim; ++j)
                (out.*mat).at(r1.dim + i, r1.dim + j) = (r2.*mat).at(i, j);
    };
    place(&Representation::X);
    place(&Representation::Xinv);
    place(&Representation::S);
    place(&Representation::Y);
    for (const std::string& l : r1.labels) out.labels.push_back("L." + l);
    for (const std::string& l : r2.labels) out.labels.push_back("R." + l);
    out.y_candidates = r1.y_candidates;
    for (const FieldElement& c : r2.y_candidates) {
        bool seen = false;
        for (const FieldElement& e : out.y_candidates)
            if (e == c) { seen = true; break; }
        if (!seen) out.y_candidates.push_back(c);
    }
    return out;
}

Matrix TwoDimModel::s_matrix() const {
    Matrix m(gamma0.ctx(), 2, 2);
    m.at(0, 0) = gamma0;
    m.at(0, 1) = delta0;
    m.at(1, 0) = gamma1;
    m.at(1, 1) = delta1;
    return m;
}

Matrix TwoDimModel::x_matrix() const {
    Matrix m(theta0.ctx(), 2, 2);
    m.at(0, 0) = theta0;
    m.at(0, 1) = omega0;
    m.at(1, 0) = theta1;
    m.at(1, 1) = omega1;
    return m;
}

TwoDimModel solve_two_dim_model(const FieldElement& beta, const FieldElement& theta0,
                                const AlgebraParams& params) {
    require(params.t == 0, "two-dimensional model requires t=0");
    const FieldElement& k = params.k;
    require(!k.is_zero(), "two-dimensional model requires k != 0");
    require(!beta.is_zero() && !theta0.is_zero(), "beta and theta0 must be nonzero");
    const FieldContextPtr& ctx = params.ctx;
    FieldElement one = FieldElement::one(ctx);
    FieldElement two = fe(ctx, 2), four = fe(ctx, 4);
    TwoDimModel m;
    m.theta0 = theta0;
    m.omega0 = one;
    m.omega1 = theta0.inv() * (one - (k * k) / (four * beta * beta));
    m.theta1 = theta0 * m.omega1 - one;
    FieldElement lead = two * beta / k;
    m.gamma0 = lead * (theta0 * m.omega1 - one);
    m.gamma1 = lead * (theta0 * m.omega1 * m.omega1 - m.omega1);
    m.delta0 = -lead * theta0;
    m.delta1 = lead * (one - theta0 * m.omega1);
    return m;
}

} // namespace cherednik
