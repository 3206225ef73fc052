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

#include "cherednik/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cherednik {

namespace {

constexpr std::int64_t kExponentBound = 1 << 15;

} // namespace

std::pair<AlgebraParams, ParamChange> normalize_params(const FieldElement& t,
                                                       const FieldElement& k) {
    const FieldContextPtr& ctx = t.ctx();
    ParamChange change{FieldElement::one(ctx), 1, "identity"};
    if (t.is_zero())
        return {AlgebraParams{ctx, 0, k}, change};

    FieldElement k1 = k / t;
    std::ostringstream note;
    if (!t.is_one()) {
        change.y_scale = t.inv();
        note << "y -> " << change.y_scale.str() << "*y";
    }
    if (k1.in_prime_subfield()) {
        std::int64_t r = k1.lift();
        if (r % 2 != 0) {
            k1 = FieldElement::from_int(ctx, ctx->p - r);
            change.s_sign = -1;
            if (note.tellp() > 0) note << "; ";
            note << "s -> -s";
        }
    }
    if (note.tellp() > 0) change.note = note.str();
    return {AlgebraParams{ctx, 1, k1}, change};
}

AlgebraElement::AlgebraElement(AlgebraParams params) : params_(std::move(params)) {}

AlgebraElement AlgebraElement::zero(const AlgebraParams& params) {
    return AlgebraElement(params);
}

AlgebraElement AlgebraElement::one(const AlgebraParams& params) {
    return monomial(params, PBWMonomial{}, FieldElement::one(params.ctx));
}

AlgebraElement AlgebraElement::monomial(const AlgebraParams& params, PBWMonomial m,
                                        FieldElement coeff) {
    AlgebraElement e(params);
    e.add_term(m, coeff);
    return e;
}

void AlgebraElement::add_term(const PBWMonomial& m, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (!(params_ == o.params_))
        throw Error(ErrorCode::ContextMismatch, "algebra parameters differ");
    AlgebraElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    if (!(params_ == o.params_))
        throw Error(ErrorCode::ContextMismatch, "algebra parameters differ");
    AlgebraElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const FieldElement& s) const {
    AlgebraElement r(params_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return params_ == o.params_ && terms_ == o.terms_;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> parts;
        if (!c.is_one() || (m.i == 0 && m.j == 0 && m.l == 0)) parts.push_back(c.str());
        if (m.i) parts.push_back("s");
        if (m.j == 1) parts.push_back("X");
        else if (m.j != 0) parts.push_back("X^" + std::to_string(m.j));
        if (m.l == 1) parts.push_back("y");
        else if (m.l != 0) parts.push_back("y^" + std::to_string(m.l));
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << '*';
            os << parts[i];
        }
    }
    return os.str();
}

namespace {

using Word = std::vector<Gen>;

// One rewrite rule: the pair (a,b) becomes a combination of words with
// coefficients 1, t, -t, k, -k (encoded as small tags resolved at apply time).
enum class Coef { One, MinusOne, T, MinusT, K, MinusK };

struct Replacement {
    Coef coef;
    Word word;
};

// Returns the replacement combination for the reducible adjacent pair, or
// nullptr if the pair is irreducible.
const std::vector<Replacement>* rule_for(Gen a, Gen b) {
    static const std::vector<Replacement> yx = {
        {Coef::One, {Gen::X, Gen::Y}}, {Coef::T, {Gen::X}}, {Coef::MinusK, {Gen::S, Gen::X}}};
    static const std::vector<Replacement> yxi = {
        {Coef::One, {Gen::Xinv, Gen::Y}},
        {Coef::MinusT, {Gen::Xinv}},
        {Coef::K, {Gen::Xinv, Gen::S}}};
    static const std::vector<Replacement> xs = {{Coef::One, {Gen::S, Gen::Xinv}}};
    static const std::vector<Replacement> xis = {{Coef::One, {Gen::S, Gen::X}}};
    // y s = -k - s y
    static const std::vector<Replacement> ys_rule = {{Coef::MinusK, {}},
                                                     {Coef::MinusOne, {Gen::S, Gen::Y}}};
    static const std::vector<Replacement> cancel = {{Coef::One, {}}};
    switch (a) {
        case Gen::Y:
            if (b == Gen::X) return &yx;
            if (b == Gen::Xinv) return &yxi;
            if (b == Gen::S) return &ys_rule;
            return nullptr;
        case Gen::X:
            if (b == Gen::S) return &xs;
            if (b == Gen::Xinv) return &cancel;
            return nullptr;
        case Gen::Xinv:
            if (b == Gen::S) return &xis;
            if (b == Gen::X) return &cancel;
            return nullptr;
        case Gen::S:
            if (b == Gen::S) return &cancel;
            return nullptr;
    }
    return nullptr;
}

FieldElement resolve_coef(Coef c, const AlgebraParams& params) {
    const FieldContextPtr& ctx = params.ctx;
    switch (c) {
        case Coef::One: return FieldElement::one(ctx);
        case Coef::MinusOne: return -FieldElement::one(ctx);
        case Coef::T: return FieldElement::from_int(ctx, params.t);
        case Coef::MinusT: return -FieldElement::from_int(ctx, params.t);
        case Coef::K: return params.k;
        case Coef::MinusK: return -params.k;
    }
    return FieldElement::zero(ctx);
}

int find_redex(const Word& w, RewriteStrategy strategy) {
    if (strategy == RewriteStrategy::LeftmostInnermost) {
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (rule_for(w[i], w[i + 1])) return static_cast<int>(i);
    } else {
        for (size_t i = w.size(); i >= 2; --i)
            if (rule_for(w[i - 2], w[i - 1])) return static_cast<int>(i - 2);
    }
    return -1;
}

PBWMonomial word_to_monomial(const Word& w) {
    PBWMonomial m;
    size_t pos = 0;
    if (pos < w.size() && w[pos] == Gen::S) {
        m.i = 1;
        ++pos;
    }
    while (pos < w.size() && w[pos] == Gen::X) {
        ++m.j;
        ++pos;
    }
    while (pos < w.size() && w[pos] == Gen::Xinv) {
        --m.j;
        ++pos;
    }
    while (pos < w.size() && w[pos] == Gen::Y) {
        ++m.l;
        ++pos;
    }
    if (pos != w.size())
        throw Error(ErrorCode::BadInput, "word is not in normal form");
    return m;
}

} // namespace

AlgebraElement normalize(const GeneratorWord& word, const AlgebraParams& params,
                         RewriteStrategy strategy) {
    AlgebraElement result(params);
    std::map<Word, FieldElement> active;
    if (!word.scalar.is_zero()) active.emplace(word.tokens, word.scalar);
    while (!active.empty()) {
        auto it = active.begin();
        Word w = it->first;
        FieldElement c = it->second;
        active.erase(it);
        if (c.is_zero()) continue;
        int pos = find_redex(w, strategy);
        if (pos < 0) {
            result.add_term(word_to_monomial(w), c);
            continue;
        }
        const auto* repl = rule_for(w[pos], w[pos + 1]);
        for (const Replacement& r : *repl) {
            FieldElement rc = c * resolve_coef(r.coef, params);
            if (rc.is_zero()) continue;
            Word nw;
            nw.reserve(w.size() + r.word.size());
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), r.word.begin(), r.word.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            auto [wit, inserted] = active.emplace(std::move(nw), rc);
            if (!inserted) {
                wit->second += rc;
                if (wit->second.is_zero()) active.erase(wit);
            }
        }
    }
    return result;
}

namespace {

Word expand_monomial(const PBWMonomial& m) {
    Word w;
    if (m.i) w.push_back(Gen::S);
    for (std::int64_t j = 0; j < std::abs(m.j); ++j)
        w.push_back(m.j > 0 ? Gen::X : Gen::Xinv);
    for (std::int64_t l = 0; l < m.l; ++l) w.push_back(Gen::Y);
    return w;
}

} // namespace

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.params() == b.params()))
        throw Error(ErrorCode::ContextMismatch, "algebra parameters differ");
    AlgebraElement result(a.params());
    for (const auto& [ma, ca] : a.terms()) {
        Word wa = expand_monomial(ma);
        for (const auto& [mb, cb] : b.terms()) {
            Word w = wa;
            Word wb = expand_monomial(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            GeneratorWord gw{ca * cb, std::move(w)};
            result = result + normalize(gw, a.params());
        }
    }
    return result;
}

namespace {

// Recursive-descent parser for the expression grammar.
class Parser {
public:
    Parser(const std::string& text, const AlgebraParams& params)
        : text_(text), params_(params) {}

    AlgebraElement run() {
        AlgebraElement e = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& text_;
    const AlgebraParams& params_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw Error(ErrorCode::SyntaxError,
                    msg + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::int64_t integer() {
        skip_ws();
        size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        std::int64_t v = 0;
        bool any = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > kExponentBound * kExponentBound) fail("integer literal too large");
            ++pos_;
            any = true;
        }
        if (!any) {
            pos_ = start;
            fail("expected integer");
        }
        return neg ? -v : v;
    }

    AlgebraElement expression() {
        AlgebraElement e = eat('-') ? term().scaled(-FieldElement::one(params_.ctx)) : term();
        for (;;) {
            if (eat('+')) e = e + term();
            else if (eat('-')) e = e - term();
            else return e;
        }
    }

    AlgebraElement term() {
        AlgebraElement e = factor();
        while (eat('*')) e = multiply(e, factor());
        return e;
    }

    std::int64_t exponent() {
        std::int64_t e = integer();
        if (e > kExponentBound || e < -kExponentBound) fail("exponent out of range");
        return e;
    }

    AlgebraElement factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        const FieldContextPtr& ctx = params_.ctx;
        if (c == '(') {
            ++pos_;
            AlgebraElement e = expression();
            if (!eat(')')) fail("expected ')'");
            if (eat('^')) {
                std::int64_t p = exponent();
                if (p < 0) fail("negative exponent on a parenthesized expression");
                if (p > 512) fail("exponent on a parenthesized expression too large");
                AlgebraElement out = AlgebraElement::one(params_);
                for (std::int64_t i = 0; i < p; ++i) out = multiply(out, e);
                return out;
            }
            return e;
        }
        if (c == '[') return AlgebraElement::monomial(params_, {}, tuple_literal());
        if (std::isdigit(static_cast<unsigned char>(c)))
            return AlgebraElement::monomial(params_, {},
                                            FieldElement::from_int(ctx, integer()));
        if (c == 't') {
            ++pos_;
            return AlgebraElement::monomial(params_, {},
                                            FieldElement::from_int(ctx, params_.t));
        }
        if (c == 'k') {
            ++pos_;
            return AlgebraElement::monomial(params_, {}, params_.k);
        }
        if (c == 'X') {
            ++pos_;
            bool inv = text_.compare(pos_, 3, "inv") == 0;
            if (inv) pos_ += 3;
            std::int64_t e = eat('^') ? exponent() : 1;
            return AlgebraElement::monomial(params_, PBWMonomial{0, inv ? -e : e, 0},
                                            FieldElement::one(ctx));
        }
        if (c == 's') {
            ++pos_;
            std::int64_t e = eat('^') ? exponent() : 1;
            // s^2 = 1 and s^-1 = s, so only the parity matters
            return AlgebraElement::monomial(
                params_, PBWMonomial{static_cast<int>(std::abs(e) % 2), 0, 0},
                FieldElement::one(ctx));
        }
        if (c == 'y') {
            ++pos_;
            std::int64_t e = eat('^') ? exponent() : 1;
            if (e < 0) fail("negative exponent on y");
            return AlgebraElement::monomial(params_, PBWMonomial{0, 0, e},
                                            FieldElement::one(ctx));
        }
        fail("unexpected character");
    }

    FieldElement tuple_literal() {
        if (!eat('[')) fail("expected '['");
        std::vector<std::int64_t> coeffs;
        if (!eat(']')) {
            do {
                coeffs.push_back(integer());
            } while (eat(','));
            if (!eat(']')) fail("expected ']'");
        }
        if (static_cast<int>(coeffs.size()) > params_.ctx->m)
            fail("tuple longer than extension degree");
        return FieldElement(params_.ctx, std::move(coeffs));
    }
};

} // namespace

AlgebraElement parse(const std::string& text, const AlgebraParams& params) {
    return Parser(text, params).run();
}

std::vector<AlgebraElement> central_elements(const AlgebraParams& params) {
    const FieldContextPtr& ctx = params.ctx;
    FieldElement one = FieldElement::one(ctx);
    std::vector<AlgebraElement> out;
    if (params.t == 0) {
        AlgebraElement xpxi(params);
        xpxi.add_term({0, 1, 0}, one);
        xpxi.add_term({0, -1, 0}, one);
        out.push_back(xpxi);
        out.push_back(AlgebraElement::monomial(params, {0, 0, 2}, one));
        // Xy - yX^-1 in normal form
        AlgebraElement xy = AlgebraElement::monomial(params, {0, 1, 1}, one);
        AlgebraElement yxi = multiply(AlgebraElement::monomial(params, {0, 0, 1}, one),
                                      AlgebraElement::monomial(params, {0, -1, 0}, one));
        out.push_back(xy - yxi);
    } else {
        std::int64_t p = ctx->p;
        AlgebraElement xpxp(params);
        xpxp.add_term({0, p, 0}, one);
        xpxp.add_term({0, -p, 0}, one);
        out.push_back(xpxp);
        AlgebraElement ypy(params);
        ypy.add_term({0, 0, p}, one);
        ypy.add_term({0, 0, 1}, -one);
        out.push_back(multiply(ypy, ypy));
    }
    return out;
}

std::pair<AlgebraElement, AlgebraElement> intertwiners(const AlgebraParams& params) {
    const FieldContextPtr& ctx = params.ctx;
    FieldElement one = FieldElement::one(ctx);
    AlgebraElement a = AlgebraElement::monomial(params, {1, 1, 0}, one);
    AlgebraElement b = AlgebraElement::monomial(params, {1, 0, 1}, one);
    b.add_term({0, 0, 0}, params.k / FieldElement::from_int(ctx, 2));
    return {a, b};
}

AlgebraElement flip_s_sign(const AlgebraElement& e, const AlgebraParams& target) {
    AlgebraElement r(target);
    for (const auto& [m, c] : e.terms()) r.add_term(m, m.i ? -c : c);
    return r;
}

} // namespace cherednik
