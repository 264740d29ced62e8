#include "gcx/bialgebra.hpp"

#include "gcx/error.hpp"

#include <map>
#include <memory>

namespace gcx {

int koszul_sign(const std::vector<int>& order, const std::vector<int>& degrees)
{
    int s = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j] && (degrees[order[i]] * degrees[order[j]]) % 2)
                s = -s;
    return s;
}

static GraphTensor cohalf_impl(const Graph& g, bool reduced)
{
    auto comps = connected_components(g);
    if (comps.empty())
        throw Error(ErrorCode::UnitInput, "co-half shuffle of the unit graph");
    std::size_t k = comps.size();
    std::vector<int> deg;
    for (const auto& c : comps)
        deg.push_back(c.n);
    GraphTensor out;
    for (unsigned long mask = 0; mask < (1ul << (k - 1)); ++mask) {
        std::vector<int> left{0}, right;
        for (std::size_t i = 1; i < k; ++i)
            ((mask >> (i - 1)) & 1 ? left : right).push_back(static_cast<int>(i));
        if (reduced && right.empty())
            continue;
        std::vector<int> order = left;
        order.insert(order.end(), right.begin(), right.end());
        Graph l, r;
        for (int i : left)
            l = disjoint_union(l, comps[i]);
        for (int i : right)
            r = disjoint_union(r, comps[i]);
        out.add({std::move(l), std::move(r)}, Rational(koszul_sign(order, deg)));
    }
    return out;
}

GraphTensor cohalf_shuffle(const Graph& g) { return cohalf_impl(g, false); }
GraphTensor reduced_cohalf_shuffle(const Graph& g) { return cohalf_impl(g, true); }

GraphTensor cohalf_shuffle(const GraphComb& x)
{
    return apply_linear(x, [](const Graph& g) { return cohalf_shuffle(g); });
}

static int parity_sign(int a, int b) { return (a * b) % 2 ? -1 : 1; }

GraphTensor tau(const GraphTensor& t)
{
    GraphTensor out;
    for (const auto& [lr, c] : t)
        out.add({lr.second, lr.first}, Rational(c * parity_sign(lr.first.n, lr.second.n)));
    return out;
}

GraphTensor full_coproduct(const Graph& g)
{
    if (g.n == 0)
        return GraphTensor::single({Graph{}, Graph{}});
    GraphTensor d = cohalf_shuffle(g);
    return d + tau(d);
}

LawCheck check_zinbiel_coalgebra(const Graph& g) { return check_zinbiel_coalgebra(g, reduced_cohalf_shuffle); }

LawCheck check_zinbiel_coalgebra(const Graph& g, const Coproduct& dl)
{
    GraphTensor3 acc;
    for (const auto& [lr, c] : dl(g)) {
        const auto& [l, r] = lr;
        for (const auto& [ab, c2] : dl(l))
            acc.add({ab.first, ab.second, r}, Rational(c * c2));
        for (const auto& [ab, c2] : dl(r)) {
            Rational v = c * c2;
            acc.add({l, ab.first, ab.second}, Rational(-v));
            acc.add({l, ab.second, ab.first}, Rational(-v * parity_sign(ab.first.n, ab.second.n)));
        }
    }
    LawCheck res;
    res.ok = acc.empty();
    res.defect = std::move(acc);
    return res;
}

CompatCheck check_compatibility(const Graph& a, const Graph& b)
{
    CompatCheck res;
    // Delta_<(1) is not defined; for a = 1 both sides are Delta_<(b) by unitality of mu.
    if (a.n == 0)
        return res;
    GraphTensor acc = cohalf_shuffle(disjoint_union(a, b));
    GraphTensor db = full_coproduct(b);
    for (const auto& [a12, ca] : cohalf_shuffle(a))
        for (const auto& [b12, cb] : db) {
            Rational v = ca * cb * parity_sign(a12.second.n, b12.first.n);
            acc.add({disjoint_union(a12.first, b12.first), disjoint_union(a12.second, b12.second)}, Rational(-v));
        }
    res.ok = acc.empty();
    res.defect = std::move(acc);
    return res;
}

GraphComb derivation_defect(const Graph& a, const Graph& b)
{
    GraphComb lhs = differential(disjoint_union(a, b));
    lhs -= product(differential(a), GraphComb::single(b));
    lhs.add_scaled(product(GraphComb::single(a), differential(b)), Rational(a.n % 2 ? 1 : -1));
    return lhs;
}

GraphComb convolve(const GraphMap& f, const GraphMap& g, const GraphComb& x)
{
    GraphComb out;
    for (const auto& [h, c] : x) {
        if (h.n == 0)
            continue;
        for (const auto& [lr, s] : cohalf_shuffle(h))
            out.add_scaled(product(f(lr.first), g(lr.second)), Rational(c * s));
    }
    return out;
}

GraphComb primitive_projector(const GraphComb& x, int degree_bound)
{
    std::size_t k = 0;
    for (const auto& [h, c] : x)
        k = std::max(k, connected_components(h).size());
    if (degree_bound > 0 && k > static_cast<std::size_t>(degree_bound))
        throw Error(ErrorCode::DegreeOutOfRange, "input has " + std::to_string(k) + " components");
    GraphMap J = [](const Graph& g) { return g.n == 0 ? GraphComb{} : GraphComb::single(g); };
    GraphComb out;
    GraphMap power = J;
    for (std::size_t i = 1; i <= k; ++i) {
        GraphComb term = apply_linear(x, power);
        out.add_scaled(term, Rational(i % 2 ? 1 : -1));
        auto cache = std::make_shared<std::map<Graph, GraphComb>>();
        GraphMap prev = power;
        power = [prev, J, cache](const Graph& g) {
            auto it = cache->find(g);
            if (it != cache->end())
                return it->second;
            GraphComb v = convolve(prev, J, GraphComb::single(g));
            cache->emplace(g, v);
            return v;
        };
    }
    return out;
}

WordTensor word_cohalf(const TensorWord& w, int p, int q)
{
    WordTensor out;
    int n = static_cast<int>(w.size());
    if (p < 1 || q < 0 || p + q != n)
        return out;
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
        if (__builtin_popcountl(mask) != p - 1)
            continue;
        std::vector<int> order{0};
        TensorWord l{w[0]}, r;
        for (int i = 1; i < n; ++i)
            if ((mask >> (i - 1)) & 1) {
                order.push_back(i);
                l.push_back(w[i]);
            }
        for (int i = 1; i < n; ++i)
            if (!((mask >> (i - 1)) & 1)) {
                order.push_back(i);
                r.push_back(w[i]);
            }
        out.add({std::move(l), std::move(r)}, Rational(perm_sign(Perm(order.begin(), order.end()))));
    }
    return out;
}

static WordTensor word_cohalf(const WordComb& x, int p, int q)
{
    WordTensor out;
    for (const auto& [w, c] : x)
        out.add_scaled(word_cohalf(w, p, q), c);
    return out;
}

InterchangeCheck check_interchange(const TensorWord& w, int p, int q)
{
    if (p < 0 || q < 0 || static_cast<int>(w.size()) != p + q + 1)
        throw Error(ErrorCode::LengthMismatch,
                    "word of length " + std::to_string(w.size()) + " for p+q+1 = " + std::to_string(p + q + 1));
    WordTensor acc = word_cohalf(leibniz_differential(w), p, q);
    for (const auto& [lr, c] : word_cohalf(w, p + 1, q))
        for (const auto& [dl, c2] : leibniz_differential(lr.first))
            acc.add({dl, lr.second}, Rational(-c * c2));
    Rational s(p % 2 ? 1 : -1); // -(-1)^p
    for (const auto& [lr, c] : word_cohalf(w, p, q + 1))
        for (const auto& [dr, c2] : leibniz_differential(lr.second))
            acc.add({lr.first, dr}, Rational(s * c * c2));
    InterchangeCheck res;
    res.ok = acc.empty();
    res.defect = std::move(acc);
    return res;
}

} // namespace gcx
