#include "gcx/free_algebra.hpp"

#include "gcx/error.hpp"

#include <functional>

namespace gcx {

FreeComb shuffle(const Word& u, const Word& v)
{
    FreeComb out;
    if (u.empty() || v.empty()) {
        out.add(u + v, Rational(1));
        return out;
    }
    for (const auto& [w, c] : shuffle(u.substr(1), v))
        out.add(u[0] + w, c);
    for (const auto& [w, c] : shuffle(u, v.substr(1)))
        out.add(v[0] + w, c);
    return out;
}

FreeComb halfshuffle(const Word& u, const Word& v)
{
    if (u.empty())
        throw Error(ErrorCode::EmptyLeft, "1 ≺ v is not defined");
    FreeComb out;
    for (const auto& [w, c] : shuffle(u.substr(1), v))
        out.add(u[0] + w, c);
    return out;
}

FreeComb halfshuffle(const FreeComb& x, const FreeComb& y)
{
    FreeComb out;
    for (const auto& [u, a] : x)
        for (const auto& [v, b] : y)
            out.add_scaled(halfshuffle(u, v), Rational(a * b));
    return out;
}

FreeComb star(const FreeComb& x, const FreeComb& y) { return halfshuffle(x, y) + halfshuffle(y, x); }

FreeComb zinbiel_defect(const Word& x, const Word& y, const Word& z)
{
    FreeComb X = FreeComb::single(x), Y = FreeComb::single(y), Z = FreeComb::single(z);
    return halfshuffle(halfshuffle(X, Y), Z) - halfshuffle(X, halfshuffle(Y, Z)) - halfshuffle(X, halfshuffle(Z, Y));
}

int PlanarTree::degree() const
{
    int d = 0;
    for (char ch : code)
        d += ch == 't';
    return d;
}

static std::size_t split_point(const std::string& code)
{
    // code = "(" L R ")"; find where L ends
    int depth = 0;
    for (std::size_t i = 1; i + 1 < code.size(); ++i) {
        if (code[i] == '(')
            ++depth;
        else if (code[i] == ')')
            --depth;
        if (depth == 0)
            return i + 1;
    }
    return code.size() - 1;
}

PlanarTree PlanarTree::left() const
{
    if (is_leaf())
        return *this;
    return {code.substr(1, split_point(code) - 1)};
}

PlanarTree PlanarTree::right() const
{
    if (is_leaf())
        return *this;
    std::size_t k = split_point(code);
    return {code.substr(k, code.size() - 1 - k)};
}

std::string PlanarTree::pretty() const
{
    if (is_leaf())
        return "t";
    return "(" + left().pretty() + "·" + right().pretty() + ")";
}

TreeComb MagSeries::degree_part(int k) const
{
    TreeComb out;
    for (const auto& [t, c] : terms)
        if (t.degree() == k)
            out.add(t, c);
    return out;
}

MagSeries identity_series(int bound)
{
    MagSeries s;
    s.bound = bound;
    if (bound >= 1)
        s.terms.add(PlanarTree::leaf(), Rational(1));
    return s;
}

MagSeries series_f(int bound)
{
    MagSeries s;
    s.bound = bound;
    PlanarTree comb = PlanarTree::leaf();
    for (int n = 1; n <= bound; ++n) {
        s.terms.add(comb, Rational(1));
        comb = PlanarTree::graft(PlanarTree::leaf(), comb);
    }
    return s;
}

MagSeries series_g(int bound)
{
    MagSeries s;
    s.bound = bound;
    PlanarTree comb = PlanarTree::leaf();
    for (int n = 1; n <= bound; ++n) {
        s.terms.add(comb, Rational(n % 2 ? 1 : -1));
        comb = PlanarTree::graft(comb, PlanarTree::leaf());
    }
    return s;
}

static TreeComb truncated_product(const TreeComb& a, const TreeComb& b, int bound)
{
    TreeComb out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            if (x.degree() + y.degree() <= bound)
                out.add(PlanarTree::graft(x, y), Rational(cx * cy));
    return out;
}

MagSeries mag_compose(const MagSeries& phi, const MagSeries& psi, int bound)
{
    if (psi.constant != 0)
        throw Error(ErrorCode::NonzeroConstantTerm, "inner series has constant term " + to_string(psi.constant));
    TreeComb inner;
    for (const auto& [t, c] : psi.terms)
        if (t.degree() <= bound)
            inner.add(t, c);
    std::map<PlanarTree, TreeComb> memo;
    std::function<const TreeComb&(const PlanarTree&)> subst = [&](const PlanarTree& t) -> const TreeComb& {
        auto it = memo.find(t);
        if (it != memo.end())
            return it->second;
        TreeComb v = t.is_leaf() ? inner : truncated_product(subst(t.left()), subst(t.right()), bound);
        return memo.emplace(t, std::move(v)).first->second;
    };
    MagSeries out;
    out.bound = bound;
    out.constant = phi.constant;
    for (const auto& [t, c] : phi.terms)
        if (t.degree() <= bound)
            out.terms.add_scaled(subst(t), c);
    return out;
}

std::vector<PlanarTree> all_trees(int n)
{
    std::vector<PlanarTree> out;
    if (n == 1) {
        out.push_back(PlanarTree::leaf());
        return out;
    }
    for (int k = 1; k < n; ++k)
        for (const auto& l : all_trees(k))
            for (const auto& r : all_trees(n - k))
                out.push_back(PlanarTree::graft(l, r));
    return out;
}

} // namespace gcx
