#include "gcx/symplectic.hpp"

#include "gcx/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace gcx {

int Monomial::degree() const
{
    int d = 0;
    for (const auto& pw : powers)
        d += pw.second;
    return d;
}

int Monomial::exponent(Generator g) const
{
    for (const auto& [h, e] : powers)
        if (h == g)
            return e;
    return 0;
}

Monomial Monomial::of(std::vector<Generator> gens)
{
    std::map<Generator, int> e;
    for (auto g : gens)
        ++e[g];
    Monomial m;
    m.powers.assign(e.begin(), e.end());
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    std::map<Generator, int> e(a.powers.begin(), a.powers.end());
    for (const auto& [g, k] : b.powers)
        e[g] += k;
    Monomial m;
    m.powers.assign(e.begin(), e.end());
    return m;
}

// d/dg m, as (coefficient, monomial); coefficient 0 if g is absent
static std::pair<int, Monomial> derive(const Monomial& m, Generator g)
{
    Monomial r;
    int c = 0;
    for (const auto& [h, e] : m.powers) {
        if (h == g) {
            c = e;
            if (e > 1)
                r.powers.emplace_back(h, e - 1);
        } else {
            r.powers.emplace_back(h, e);
        }
    }
    return {c, r};
}

PQPolynomial poisson_bracket(const Monomial& f, const Monomial& g)
{
    PQPolynomial out;
    std::vector<int> idx;
    for (const auto& [h, e] : f.powers)
        idx.push_back(h.index);
    for (const auto& [h, e] : g.powers)
        idx.push_back(h.index);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    for (int i : idx) {
        auto [a1, fp] = derive(f, p(i));
        auto [b1, gq] = derive(g, q(i));
        if (a1 && b1)
            out.add(fp * gq, Rational(a1 * b1));
        auto [a2, gp] = derive(g, p(i));
        auto [b2, fq] = derive(f, q(i));
        if (a2 && b2)
            out.add(gp * fq, Rational(-a2 * b2));
    }
    return out;
}

PQPolynomial poisson_bracket(const PQPolynomial& f, const PQPolynomial& g)
{
    PQPolynomial out;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g)
            out.add_scaled(poisson_bracket(a, b), Rational(ca * cb));
    return out;
}

WordComb leibniz_differential(const TensorWord& w)
{
    WordComb out;
    std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // (-1)^j with 1-based j
            Rational sign((j + 1) % 2 ? -1 : 1);
            for (const auto& [m, c] : poisson_bracket(w[i], w[j])) {
                TensorWord v;
                v.reserve(n - 1);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == j)
                        continue;
                    v.push_back(k == i ? m : w[k]);
                }
                out.add(std::move(v), Rational(sign * c));
            }
        }
    return out;
}

WordComb leibniz_differential(const WordComb& x)
{
    return apply_linear(x, [](const TensorWord& w) { return leibniz_differential(w); });
}

Rational symplectic_form(Generator u, Generator v)
{
    if (u.index != v.index || u.kind == v.kind)
        return 0;
    return u.kind == Kind::P ? 1 : -1;
}

GeneratorWord flatten(const TensorWord& w)
{
    GeneratorWord g;
    for (const auto& m : w) {
        for (const auto& [h, e] : m.powers)
            for (int k = 0; k < e; ++k)
                g.letters.push_back(h);
        g.shape.push_back(m.degree());
    }
    return g;
}

TensorWord to_tensor_word(const GeneratorWord& g)
{
    int total = 0;
    for (int k : g.shape) {
        if (k < 0)
            throw Error(ErrorCode::BadShape, "negative factor size");
        total += k;
    }
    if (total != static_cast<int>(g.letters.size()))
        throw Error(ErrorCode::BadShape, "shape does not cover the letters");
    TensorWord w;
    std::size_t pos = 0;
    for (int k : g.shape) {
        std::vector<Generator> part(g.letters.begin() + static_cast<long>(pos),
                                    g.letters.begin() + static_cast<long>(pos + k));
        w.push_back(Monomial::of(std::move(part)));
        pos += static_cast<std::size_t>(k);
    }
    return w;
}

MonomialComb tstar(const GeneratorWord& w)
{
    MonomialComb out;
    std::size_t len = w.letters.size();
    if (len % 2)
        return out;
    std::vector<bool> used(len, false);
    std::vector<Chord> cur;
    std::function<void(Rational)> rec = [&](Rational c) {
        std::size_t a = 0;
        while (a < len && used[a])
            ++a;
        if (a == len) {
            out.add(PairMonomial{cur}, c); // built in standard order
            return;
        }
        used[a] = true;
        for (std::size_t b = a + 1; b < len; ++b) {
            if (used[b])
                continue;
            Rational v = symplectic_form(w.letters[a], w.letters[b]);
            if (v == 0)
                continue;
            used[b] = true;
            cur.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
            rec(Rational(c * v));
            cur.pop_back();
            used[b] = false;
        }
        used[a] = false;
    };
    rec(Rational(1));
    return out;
}

MonomialComb tstar(const TensorWord& w) { return tstar(flatten(w)); }

MonomialComb tstar_bruteforce(const GeneratorWord& w)
{
    MonomialComb out;
    if (w.letters.size() % 2)
        return out;
    for (const auto& d : all_diagrams(static_cast<int>(w.letters.size() / 2))) {
        Rational c(1);
        for (auto [a, b] : d.pairs)
            c *= symplectic_form(w.letters[a - 1], w.letters[b - 1]);
        out.add(phi_inverse(d), c);
    }
    return out;
}

GeneratorWord split_S(const PairMonomial& mono, const Shape& shape)
{
    int slots = 2 * static_cast<int>(mono.factors.size());
    check_shape(shape, slots);
    normalize_chords(mono.factors); // validates the index set
    GeneratorWord g;
    g.letters.resize(static_cast<std::size_t>(slots));
    g.shape = shape;
    int k = 1;
    for (auto [a, b] : mono.factors) {
        g.letters[a - 1] = p(k);
        g.letters[b - 1] = q(k);
        ++k;
    }
    return g;
}

GraphComb word_to_graphs(const TensorWord& w)
{
    GeneratorWord g = flatten(w);
    check_shape(g.shape, static_cast<int>(g.letters.size()));
    GraphComb out;
    for (const auto& [mono, c] : tstar(g))
        out.add_scaled(varphi(package(phi(mono), g.shape)), c);
    return out;
}

GraphComb word_to_graphs(const WordComb& x)
{
    return apply_linear(x, [](const TensorWord& w) { return word_to_graphs(w); });
}

static TensorWord reindex(const TensorWord& w, int mul, int off)
{
    TensorWord r;
    for (const auto& m : w) {
        std::vector<Generator> gens;
        for (const auto& [h, e] : m.powers)
            for (int k = 0; k < e; ++k)
                gens.push_back(Generator{h.kind, mul * h.index + off});
        r.push_back(Monomial::of(std::move(gens)));
    }
    return r;
}

TensorWord matrix_sum_product(const TensorWord& a, const TensorWord& b)
{
    TensorWord r = reindex(a, 2, 0);
    TensorWord o = reindex(b, 2, -1);
    r.insert(r.end(), o.begin(), o.end());
    return r;
}

TensorWord graph_to_word(const Graph& g)
{
    PackagedDiagram pd = varphi_inverse(g);
    return to_tensor_word(split_S(phi_inverse(pd.diagram), pd.shape));
}

std::string to_string(Generator g)
{
    return (g.kind == Kind::P ? "p" : "q") + std::to_string(g.index);
}

std::string to_string(const Monomial& m)
{
    std::string s;
    for (const auto& [h, e] : m.powers)
        for (int k = 0; k < e; ++k) {
            if (!s.empty())
                s += " ";
            s += to_string(h);
        }
    return s.empty() ? "1" : s;
}

std::string to_string(const TensorWord& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? " ⊗ " : "") + to_string(w[i]);
    return s;
}

Generator parse_generator(const std::string& s)
{
    if (s.size() < 2 || (s[0] != 'p' && s[0] != 'q'))
        throw Error(ErrorCode::Parse, "bad generator '" + s + "'");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(ErrorCode::Parse, "bad generator '" + s + "'");
    int idx = std::stoi(s.substr(1));
    if (idx < 1)
        throw Error(ErrorCode::Parse, "generator index must be positive: '" + s + "'");
    return Generator{s[0] == 'p' ? Kind::P : Kind::Q, idx};
}

Monomial parse_monomial(const std::string& text)
{
    std::string t = text;
    std::replace(t.begin(), t.end(), '*', ' ');
    std::istringstream in(t);
    std::string tok;
    std::vector<Generator> gens;
    while (in >> tok) {
        if (tok == "1")
            continue;
        int e = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            try {
                e = std::stoi(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw Error(ErrorCode::Parse, "bad exponent in '" + tok + "'");
            }
            if (e < 1)
                throw Error(ErrorCode::Parse, "bad exponent in '" + tok + "'");
            tok = tok.substr(0, caret);
        }
        Generator g = parse_generator(tok);
        for (int k = 0; k < e; ++k)
            gens.push_back(g);
    }
    return Monomial::of(std::move(gens));
}

} // namespace gcx
