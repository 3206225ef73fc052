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

#include "cherednik/analysis.hpp"

#include <random>
#include <sstream>

namespace cherednik {

namespace {

using i64 = std::int64_t;

std::string first_nonzero_witness(const Matrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) {
                std::ostringstream os;
                os << "entry (" << r << "," << c << ") = " << m.at(r, c).str();
                return os.str();
            }
    return "";
}

/// Incremental echelon basis; rows kept pivot-normalized.
class SpinBasis {
public:
    explicit SpinBasis(FieldContextPtr ctx, int n) : ctx_(std::move(ctx)), n_(n) {}

    int size() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<FieldElement>>& rows() const { return rows_; }

    /// Returns true when v was independent of the current span.
    bool insert(std::vector<FieldElement> v) {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const FieldElement c = v[static_cast<size_t>(pivots_[i])];
            if (!c.is_zero())
                for (int j = 0; j < n_; ++j)
                    v[static_cast<size_t>(j)] -= c * rows_[i][static_cast<size_t>(j)];
        }
        int piv = -1;
        for (int j = 0; j < n_; ++j)
            if (!v[static_cast<size_t>(j)].is_zero()) { piv = j; break; }
        if (piv < 0) return false;
        FieldElement inv = v[static_cast<size_t>(piv)].inv();
        for (int j = 0; j < n_; ++j) v[static_cast<size_t>(j)] *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

private:
    FieldContextPtr ctx_;
    int n_;
    std::vector<std::vector<FieldElement>> rows_;
    std::vector<int> pivots_;
};

/// Closure of the span of seeds under the four generator matrices; stops as
/// soon as the span is everything.
SpinBasis spin(const std::vector<const Matrix*>& gens, const FieldContextPtr& ctx,
               int n, const std::vector<std::vector<FieldElement>>& seeds) {
    SpinBasis basis(ctx, n);
    std::vector<std::vector<FieldElement>> frontier;
    for (const auto& v : seeds) {
        std::vector<FieldElement> copy = v;
        if (basis.insert(copy)) frontier.push_back(std::move(copy));
    }
    while (!frontier.empty() && basis.size() < n) {
        std::vector<std::vector<FieldElement>> next;
        for (const auto& v : frontier) {
            for (const Matrix* g : gens) {
                std::vector<FieldElement> w = g->apply(v);
                std::vector<FieldElement> copy = w;
                if (basis.insert(std::move(w))) next.push_back(std::move(copy));
                if (basis.size() == n) return basis;
            }
        }
        frontier = std::move(next);
    }
    return basis;
}

Matrix random_algebra_matrix(const Representation& rep, std::mt19937_64& rng) {
    const FieldContextPtr& ctx = rep.spec.params.ctx;
    Matrix out(ctx, rep.dim, rep.dim);
    std::uniform_int_distribution<int> count_dist(3, 6);
    std::uniform_int_distribution<int> i_dist(0, 1);
    std::uniform_int_distribution<int> j_dist(-2, 2);
    std::uniform_int_distribution<int> l_dist(0, 3);
    int terms = count_dist(rng);
    for (int n = 0; n < terms; ++n) {
        FieldElement c = FieldElement::random(ctx, rng);
        if (c.is_zero()) c = FieldElement::one(ctx);
        int j = j_dist(rng);
        Matrix term = rep.Y.pow(l_dist(rng));
        term = (j >= 0 ? rep.X.pow(j) : rep.Xinv.pow(-j)) * term;
        if (i_dist(rng)) term = rep.S * term;
        out = out + term.scaled(c);
    }
    return out;
}

} // namespace

std::vector<Matrix> relation_matrices(const Matrix& X, const Matrix& Xinv,
                                      const Matrix& S, const Matrix& Y,
                                      const AlgebraParams& params) {
    const FieldContextPtr& ctx = params.ctx;
    int n = X.rows();
    Matrix id = Matrix::identity(ctx, n);
    std::vector<Matrix> out;
    out.push_back(S * X - Xinv * S);
    out.push_back(S * S - id);
    out.push_back(S * Y + Y * S + id.scaled(params.k));
    Matrix r4 = X * Y * Xinv - Y - S.scaled(params.k);
    if (params.t == 1) r4 = r4 + id;
    out.push_back(r4);
    return out;
}

std::vector<CheckReport> verify_relations(const Representation& rep) {
    auto residuals = relation_matrices(rep.X, rep.Xinv, rep.S, rep.Y, rep.spec.params);
    static const char* names[] = {"sX = X^-1 s", "s^2 = 1", "sy + ys = -k",
                                  "XyX^-1 = y - t + ks"};
    std::vector<CheckReport> out;
    for (size_t i = 0; i < residuals.size(); ++i) {
        CheckReport r;
        r.name = names[i];
        r.pass = residuals[i].is_zero();
        if (!r.pass) r.witness = first_nonzero_witness(residuals[i]);
        out.push_back(std::move(r));
    }
    CheckReport inv;
    inv.name = "X X^-1 = 1";
    Matrix res = rep.X * rep.Xinv - Matrix::identity(rep.spec.params.ctx, rep.dim);
    inv.pass = res.is_zero();
    if (!inv.pass) inv.witness = first_nonzero_witness(res);
    out.push_back(std::move(inv));
    return out;
}

std::vector<CentralScalar> central_character(const Representation& rep) {
    std::vector<CentralScalar> out;
    for (const AlgebraElement& z : central_elements(rep.spec.params)) {
        CentralScalar cs{z, false, {}};
        Matrix m = matrix_of(rep, z);
        FieldElement value;
        cs.scalar = m.is_scalar(&value);
        if (cs.scalar) cs.value = value;
        out.push_back(std::move(cs));
    }
    return out;
}

EigenReport eigen_census(const Representation& rep) {
    const FieldContextPtr& ctx = rep.spec.params.ctx;
    EigenReport report;
    report.dim = rep.dim;
    Matrix id = Matrix::identity(ctx, rep.dim);
    for (const FieldElement& b : rep.y_candidates) {
        Matrix shifted = rep.Y - id.scaled(b);
        EigenEntry e;
        e.value = b;
        e.geometric = rep.dim - shifted.rank();
        e.algebraic = rep.dim - shifted.pow(rep.dim).rank();
        if (e.geometric > 0 || e.algebraic > 0) report.entries.push_back(e);
        report.geometric_total += e.geometric;
        report.algebraic_total += e.algebraic;
    }
    return report;
}

IrrReport is_irreducible(const Representation& rep, std::uint64_t seed, int budget) {
    IrrReport report;
    if (rep.dim <= 1) {
        report.status = IrrStatus::Irreducible;
        return report;
    }
    const FieldContextPtr& ctx = rep.spec.params.ctx;
    std::vector<const Matrix*> gens = {&rep.X, &rep.Xinv, &rep.S, &rep.Y};
    Matrix Xt = rep.X.transpose(), Xit = rep.Xinv.transpose(),
           St = rep.S.transpose(), Yt = rep.Y.transpose();
    std::vector<const Matrix*> gens_t = {&Xt, &Xit, &St, &Yt};
    std::mt19937_64 rng(seed);
    for (int round = 0; round < budget; ++round) {
        report.rounds_used = round + 1;
        Matrix m = random_algebra_matrix(rep, rng);
        auto kernel = m.kernel_basis();
        i64 q = 1;
        for (int i = 0; i < ctx->m; ++i) q *= ctx->p;
        if (kernel.empty() && q <= 1024) {
            // nonsingular draw: shift by an eigenvalue to force a kernel;
            // m - lambda stays inside the enveloping algebra
            Matrix id = Matrix::identity(ctx, rep.dim);
            for (const FieldElement& lam : all_field_elements(ctx)) {
                Matrix shifted = m - id.scaled(lam);
                if (shifted.det().is_zero()) {
                    m = shifted;
                    kernel = m.kernel_basis();
                    break;
                }
            }
        }
        if (kernel.empty()) continue;
        // the certificate needs every line of ker(m) to spin to everything,
        // not just the basis vectors; enumerate them, or retry when there
        // are too many
        double lines = 0;
        for (size_t i = 0; i < kernel.size(); ++i) {
            double block = 1;
            for (size_t j = i + 1; j < kernel.size(); ++j)
                block *= static_cast<double>(q);
            lines += block;
        }
        bool all_kernel_lines_full = lines <= 4096;
        std::vector<FieldElement> elems = all_field_elements(ctx);
        const size_t nu = kernel.size();
        for (size_t lead = 0; lead < nu && all_kernel_lines_full; ++lead) {
            std::vector<size_t> digits(nu - lead - 1, 0);
            while (true) {
                std::vector<FieldElement> v = kernel[lead];
                for (size_t i = 0; i < digits.size(); ++i) {
                    const FieldElement& c = elems[digits[i]];
                    const auto& b = kernel[lead + 1 + i];
                    for (size_t j = 0; j < v.size(); ++j) v[j] += c * b[j];
                }
                SpinBasis basis = spin(gens, ctx, rep.dim, {v});
                if (basis.size() < rep.dim) {
                    report.status = IrrStatus::Reducible;
                    report.invariant_basis = basis.rows();
                    return report;
                }
                size_t pos = 0;
                while (pos < digits.size() &&
                       ++digits[pos] == static_cast<size_t>(q)) {
                    digits[pos] = 0;
                    ++pos;
                }
                if (pos == digits.size()) break;
            }
        }
        if (!all_kernel_lines_full) {
            // still sound to look for a witness among the basis vectors
            for (const auto& v : kernel) {
                SpinBasis basis = spin(gens, ctx, rep.dim, {v});
                if (basis.size() < rep.dim) {
                    report.status = IrrStatus::Reducible;
                    report.invariant_basis = basis.rows();
                    return report;
                }
            }
            continue;
        }
        auto dual_kernel = m.transpose().kernel_basis();
        if (dual_kernel.empty()) continue; // unreachable, ranks agree
        SpinBasis dual = spin(gens_t, ctx, rep.dim, {dual_kernel.front()});
        if (dual.size() < rep.dim) {
            // perp of an invariant dual subspace is invariant
            Matrix rows(ctx, dual.size(), rep.dim);
            for (int r = 0; r < dual.size(); ++r)
                for (int c = 0; c < rep.dim; ++c)
                    rows.at(r, c) = dual.rows()[static_cast<size_t>(r)][static_cast<size_t>(c)];
            report.status = IrrStatus::Reducible;
            report.invariant_basis = rows.kernel_basis();
            return report;
        }
        report.status = IrrStatus::Irreducible;
        return report;
    }
    report.status = IrrStatus::Inconclusive;
    return report;
}

std::vector<FieldElement> all_field_elements(const FieldContextPtr& ctx) {
    std::vector<FieldElement> out;
    std::vector<i64> digits(static_cast<size_t>(ctx->m), 0);
    while (true) {
        out.push_back(FieldElement(ctx, digits));
        int pos = 0;
        while (pos < ctx->m && ++digits[static_cast<size_t>(pos)] == ctx->p) {
            digits[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == ctx->m) break;
    }
    return out;
}

std::optional<std::vector<std::vector<FieldElement>>>
exhaustive_invariant_search(const Representation& rep) {
    const FieldContextPtr& ctx = rep.spec.params.ctx;
    i64 q = 1;
    for (int i = 0; i < ctx->m; ++i) q *= ctx->p;
    if (rep.dim > 10 || q > 9)
        throw Error(ErrorCode::BudgetExceeded,
                    "exhaustive search limited to dim <= 10 over at most 9 elements");
    double points = 0;
    for (int lead = 0; lead < rep.dim; ++lead) {
        double block = 1;
        for (int i = lead + 1; i < rep.dim; ++i) block *= static_cast<double>(q);
        points += block;
    }
    if (points > 200000)
        throw Error(ErrorCode::BudgetExceeded, "too many lines to enumerate");

    if (rep.dim <= 1) return std::nullopt;
    std::vector<FieldElement> elems = all_field_elements(ctx);
    std::vector<const Matrix*> gens = {&rep.X, &rep.Xinv, &rep.S, &rep.Y};
    // leading coordinate normalized to 1, remaining coordinates free
    for (int lead = 0; lead < rep.dim; ++lead) {
        int free = rep.dim - lead - 1;
        std::vector<size_t> digits(static_cast<size_t>(free), 0);
        while (true) {
            std::vector<FieldElement> v(static_cast<size_t>(rep.dim),
                                        FieldElement::zero(ctx));
            v[static_cast<size_t>(lead)] = FieldElement::one(ctx);
            for (int i = 0; i < free; ++i)
                v[static_cast<size_t>(lead + 1 + i)] = elems[digits[static_cast<size_t>(i)]];
            SpinBasis basis = spin(gens, ctx, rep.dim, {v});
            if (basis.size() < rep.dim) return basis.rows();
            int pos = 0;
            while (pos < free &&
                   ++digits[static_cast<size_t>(pos)] == static_cast<size_t>(q)) {
                digits[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == free) break;
        }
    }
    return std::nullopt;
}

std::vector<CheckReport> check_intertwiner_maps(const Representation& rep) {
    const FieldContextPtr& ctx = rep.spec.params.ctx;
    const FieldElement& k = rep.spec.params.k;
    FieldElement half_k = k / FieldElement::from_int(ctx, 2);
    Matrix id = Matrix::identity(ctx, rep.dim);
    Matrix A = rep.S * rep.X;
    Matrix B = rep.S * rep.Y + id.scaled(half_k);

    std::vector<CheckReport> out;
    auto add = [&](const std::string& name, const Matrix& residual) {
        CheckReport r;
        r.name = name;
        r.pass = residual.is_zero();
        if (!r.pass) r.witness = first_nonzero_witness(residual);
        out.push_back(std::move(r));
    };
    add("A^2 = 1", A * A - id);
    add("B^2 = -y^2 + k^2/4", B * B + rep.Y * rep.Y - id.scaled(half_k * half_k));
    FieldElement t = FieldElement::from_int(ctx, rep.spec.params.t);
    add("Ay = -(y+t)A", A * rep.Y + (rep.Y + id.scaled(t)) * A);
    add("By = -yB", B * rep.Y + rep.Y * B);

    // eigenspace shift laws, on each populated eigenvalue of y
    bool a_shift = true, b_shift = true, b_iso = true;
    std::string a_wit, b_wit, iso_wit;
    for (const FieldElement& beta : rep.y_candidates) {
        Matrix shifted = rep.Y - id.scaled(beta);
        auto kernel = shifted.kernel_basis();
        if (kernel.empty()) continue;
        Matrix tgt_a = rep.Y + id.scaled(beta + t);
        Matrix tgt_b = rep.Y + id.scaled(beta);
        SpinBasis image_b(ctx, rep.dim);
        for (const auto& v : kernel) {
            auto av = A.apply(v);
            auto bv = B.apply(v);
            bool az = true, bz = true;
            auto rav = tgt_a.apply(av);
            auto rbv = tgt_b.apply(bv);
            for (const auto& e : rav) az = az && e.is_zero();
            for (const auto& e : rbv) bz = bz && e.is_zero();
            if (!az && a_shift) {
                a_shift = false;
                a_wit = "A image leaves the -b-t eigenspace at b = " + beta.str();
            }
            if (!bz && b_shift) {
                b_shift = false;
                b_wit = "B image leaves the -b eigenspace at b = " + beta.str();
            }
            image_b.insert(bv);
        }
        bool beta_special = beta == half_k || beta == -half_k;
        if (!beta_special && image_b.size() != static_cast<int>(kernel.size()) && b_iso) {
            b_iso = false;
            iso_wit = "B drops rank at b = " + beta.str();
        }
    }
    out.push_back({"A maps V[b] to V[-b-t]", a_shift, a_wit});
    out.push_back({"B maps V[b] to V[-b]", b_shift, b_wit});
    out.push_back({"B injective off b = +-k/2", b_iso, iso_wit});
    return out;
}

std::pair<FieldElement, FieldElement> ba_cycle_scalars(const Representation& rep) {
    if (rep.spec.family != Family::V11)
        throw Error(ErrorCode::BadParameter, "cycle scalars are defined for V11 only");
    const FieldContextPtr& ctx = rep.spec.params.ctx;
    const i64 p = ctx->p;
    Matrix id = Matrix::identity(ctx, rep.dim);
    FieldElement half_k = rep.spec.params.k / FieldElement::from_int(ctx, 2);
    Matrix A = rep.S * rep.X;
    Matrix B = rep.S * rep.Y + id.scaled(half_k);
    Matrix M = (B * A).pow(p);
    // basis order is the +mu block then the -mu block, p columns each
    auto block_scalar = [&](int base) {
        FieldElement v = M.at(base, base);
        for (int r = 0; r < rep.dim; ++r)
            for (int c = base; c < base + static_cast<int>(p); ++c) {
                const FieldElement& e = M.at(r, c);
                if (r == c ? e != v : !e.is_zero())
                    throw Error(ErrorCode::NotScalar,
                                "(BA)^p is not scalar on an eigenvalue block");
            }
        return v;
    };
    return {block_scalar(0), block_scalar(static_cast<int>(p))};
}

std::vector<ClassifyEntry> classify(const AlgebraParams& params, std::uint64_t seed) {
    const FieldContextPtr& ctx = params.ctx;
    const i64 p = ctx->p;
    auto f = [&](i64 v) { return FieldElement::from_int(ctx, v); };
    std::vector<ClassifyEntry> out;

    auto add = [&](Family fam, std::map<std::string, FieldElement> values) {
        ClassifyEntry e;
        e.family = fam;
        e.sample = RepSpec{params, fam, std::move(values), {}};
        Representation rep = build_rep(e.sample);
        e.applicable = true;
        e.dim = rep.dim;
        e.irr = is_irreducible(rep, seed).status;
        out.push_back(std::move(e));
    };
    auto skip = [&](Family fam, const std::string& why) {
        ClassifyEntry e;
        e.family = fam;
        e.note = why;
        out.push_back(std::move(e));
    };

    bool k_prime = params.k.in_prime_subfield();
    if (params.t == 0) {
        if (!params.k.is_zero()) {
            add(Family::V01, {{"beta", f(1)}, {"a", f(1)}});
            add(Family::V02, {{"a", f(1)}, {"b", f(0)}});
        } else {
            add(Family::V03, {{"beta", f(1)}, {"a", f(2) == -f(1) ? f(1) : f(2)}});
            // a outside {0, 1, -1} needs more than three field elements
            FieldElement a4 = ctx->m > 1 ? FieldElement::generator(ctx)
                                         : f(2);
            if (a4.is_zero() || a4.is_one() || (-a4).is_one())
                skip(Family::V04, "no field element outside {0, 1, -1}");
            else
                add(Family::V04, {{"a", a4}});
            add(Family::V05, {{"a", f(1)}, {"b", f(1)}});
        }
        return out;
    }

    // t = 1
    if (ctx->m > 1) {
        // mu must avoid F_p; the generator works, and when k itself is not
        // in F_p the choice mu = k/2 keeps the sample irreducible
        FieldElement mu = k_prime ? FieldElement::generator(ctx)
                                  : params.k / f(2);
        add(Family::V11, {{"mu", mu}, {"d", f(1)}});
    } else {
        skip(Family::V11, "mu must lie outside F_p; extend the field");
    }
    if (!k_prime) {
        add(Family::V12, {{"theta", f(1)}});
    } else {
        i64 kk = params.k.lift();
        if (params.k.is_zero()) {
            add(Family::V16, {{"c", f(1)}, {"theta", f(1)}});
            // a = +-2 is the reducible locus of the V17 construction
            add(Family::V17, {{"a", f(0)}});
        } else if (kk % 2 == 0 && kk >= 2 && kk <= p - 1) {
            add(Family::V13, {{"theta", f(1)}});
            add(Family::V14, {{"c", f(1)}});
            // c = +-1 is the reducible locus of the V15 construction
            add(Family::V15, {{"c", f(0)}});
        } else {
            skip(Family::V13, "k must be 0 or have an even lift in [2, p-1]");
        }
    }
    return out;
}

FieldElement product_term(const AlgebraParams& params, const FieldElement& mu) {
    const FieldContextPtr& ctx = params.ctx;
    FieldElement quarter_k2 =
        params.k * params.k / FieldElement::from_int(ctx, 4);
    FieldElement out = FieldElement::one(ctx);
    for (i64 c = 0; c < ctx->p; ++c) {
        FieldElement muc = mu + FieldElement::from_int(ctx, c);
        out *= quarter_k2 - muc * muc;
    }
    return out;
}

} // namespace cherednik
