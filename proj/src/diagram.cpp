#include "gcx/diagram.hpp"

#include "gcx/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gcx {

std::pair<ChordDiagram, int> normalize_chords(std::vector<Chord> chords)
{
    int sign = 1;
    std::vector<bool> seen(2 * chords.size() + 1, false);
    for (auto& [a, b] : chords) {
        for (int x : {a, b}) {
            if (x < 1 || x > static_cast<int>(2 * chords.size()) || seen[x])
                throw Error(ErrorCode::BadShape, "chords do not partition the slots");
            seen[x] = true;
        }
        if (a > b) {
            std::swap(a, b);
            sign = -sign;
        }
    }
    std::sort(chords.begin(), chords.end());
    return {ChordDiagram{std::move(chords)}, sign};
}

std::pair<PairMonomial, int> standardize(const PairMonomial& m)
{
    // the y's commute, so standard form is oriented factors sorted by first index
    auto [d, s] = normalize_chords(m.factors);
    return {PairMonomial{std::move(d.pairs)}, s};
}

MonomialComb standard_monomial(const PairMonomial& m)
{
    auto [sm, s] = standardize(m);
    return MonomialComb::single(sm, Rational(s));
}

ChordDiagram phi(const PairMonomial& standard) { return ChordDiagram{standard.factors}; }

PairMonomial phi_inverse(const ChordDiagram& d) { return PairMonomial{d.pairs}; }

static Perm checked_inverse(const Perm& perm, std::size_t slots)
{
    if (perm.size() != slots)
        throw Error(ErrorCode::SizeMismatch, "permutation size " + std::to_string(perm.size()));
    std::vector<bool> seen(slots + 1, false);
    for (int x : perm) {
        if (x < 1 || x > static_cast<int>(slots) || seen[x])
            throw Error(ErrorCode::SizeMismatch, "not a permutation");
        seen[x] = true;
    }
    return perm_inverse(perm);
}

DiagramComb sigma_act_diagram(const Perm& perm, const ChordDiagram& d)
{
    Perm inv = checked_inverse(perm, 2 * d.pairs.size());
    std::vector<Chord> c;
    for (auto [a, b] : d.pairs)
        c.emplace_back(inv[a - 1], inv[b - 1]);
    auto [nd, s] = normalize_chords(std::move(c));
    return DiagramComb::single(nd, Rational(s));
}

MonomialComb sigma_act_monomial(const Perm& perm, const PairMonomial& m)
{
    Perm inv = checked_inverse(perm, 2 * m.factors.size());
    PairMonomial r;
    for (auto [a, b] : m.factors)
        r.factors.emplace_back(inv[a - 1], inv[b - 1]);
    return standard_monomial(r);
}

void check_shape(const Shape& shape, int slots)
{
    int sum = 0;
    for (int k : shape) {
        if (k < 2)
            throw Error(ErrorCode::BadShape, "package of size " + std::to_string(k));
        sum += k;
    }
    if (sum != slots)
        throw Error(ErrorCode::BadShape, "shape sums to " + std::to_string(sum) + ", expected " + std::to_string(slots));
}

std::vector<int> package_of(const Shape& shape)
{
    std::vector<int> pkg{0};
    for (std::size_t p = 0; p < shape.size(); ++p)
        for (int k = 0; k < shape[p]; ++k)
            pkg.push_back(static_cast<int>(p) + 1);
    return pkg;
}

// Greedy lexicographically minimal diagram realizing the package multigraph.
static ChordDiagram realize(const Shape& shape, std::vector<std::vector<int>> count)
{
    std::size_t n = shape.size();
    std::vector<int> next(n + 1), stop(n + 1);
    int off = 0;
    for (std::size_t p = 1; p <= n; ++p) {
        next[p] = off + 1;
        off += shape[p - 1];
        stop[p] = off + 1;
    }
    int slots = off;
    std::vector<int> pkg = package_of(shape);
    std::vector<bool> used(static_cast<std::size_t>(slots) + 1, false);
    ChordDiagram d;
    for (int s = 1; s <= slots; ++s) {
        if (used[s])
            continue;
        int p = pkg[s];
        used[s] = true;
        if (next[p] == s)
            ++next[p];
        int best = 0;
        for (std::size_t q = 1; q <= n; ++q)
            if (static_cast<int>(q) != p && count[p][q] > 0 && next[q] < stop[q] && (!best || next[q] < best))
                best = next[q];
        if (!best)
            throw Error(ErrorCode::LowValence, "valences do not match the edge multiset");
        int q = pkg[best];
        --count[p][q];
        --count[q][p];
        used[best] = true;
        ++next[q];
        while (next[p] < stop[p] && used[next[p]])
            ++next[p];
        d.pairs.emplace_back(s, best);
    }
    return d;
}

PackagedComb package(const ChordDiagram& d, const Shape& shape)
{
    check_shape(shape, 2 * d.chords());
    std::vector<int> pkg = package_of(shape);
    std::size_t n = shape.size();
    std::vector<std::vector<int>> count(n + 1, std::vector<int>(n + 1, 0));
    for (auto [a, b] : d.pairs) {
        if (pkg[a] == pkg[b])
            return {}; // chord inside a package
        ++count[pkg[a]][pkg[b]];
        ++count[pkg[b]][pkg[a]];
    }
    // within-package permutations keep every inter-package chord's orientation
    return PackagedComb::single(PackagedDiagram{shape, realize(shape, std::move(count))}, Rational(1));
}

PackagedComb diagram_differential(const PackagedDiagram& pd)
{
    const Shape& shape = pd.shape;
    std::vector<int> pkg = package_of(shape);
    int slots = static_cast<int>(pkg.size()) - 1;
    PackagedComb out;
    for (std::size_t c = 0; c < pd.diagram.pairs.size(); ++c) {
        auto [s, t] = pd.diagram.pairs[c];
        int a = pkg[s], b = pkg[t]; // a < b
        // new slot order: package a's survivors, then package b's, in place of a
        std::vector<int> order;
        for (int p = 1; p <= static_cast<int>(shape.size()); ++p) {
            if (p == b)
                continue;
            for (int x = 1; x <= slots; ++x)
                if (pkg[x] == p && x != s)
                    order.push_back(x);
            if (p == a)
                for (int x = 1; x <= slots; ++x)
                    if (pkg[x] == b && x != t)
                        order.push_back(x);
        }
        std::vector<int> pos(static_cast<std::size_t>(slots) + 1, 0);
        for (std::size_t i = 0; i < order.size(); ++i)
            pos[order[i]] = static_cast<int>(i) + 1;
        std::vector<Chord> rest;
        for (std::size_t k = 0; k < pd.diagram.pairs.size(); ++k)
            if (k != c)
                rest.emplace_back(pos[pd.diagram.pairs[k].first], pos[pd.diagram.pairs[k].second]);
        Shape ns;
        for (int p = 1; p <= static_cast<int>(shape.size()); ++p) {
            if (p == b)
                continue;
            ns.push_back(p == a ? shape[a - 1] + shape[b - 1] - 2 : shape[p - 1]);
        }
        auto [nd, flip] = normalize_chords(std::move(rest));
        int sign = flip * (b % 2 ? -1 : 1);
        out.add_scaled(package(nd, ns), Rational(sign));
    }
    return out;
}

PackagedComb diagram_differential(const PackagedComb& x)
{
    return apply_linear(x, [](const PackagedDiagram& p) { return diagram_differential(p); });
}

Graph varphi(const PackagedDiagram& pd)
{
    std::vector<int> pkg = package_of(pd.shape);
    Graph g{static_cast<int>(pd.shape.size()), {}};
    for (auto [a, b] : pd.diagram.pairs)
        g.edges.emplace_back(pkg[a], pkg[b]);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

GraphComb varphi(const PackagedComb& x)
{
    GraphComb out;
    for (const auto& [pd, c] : x)
        out.add(varphi(pd), c);
    return out;
}

PackagedDiagram varphi_inverse(const Graph& g)
{
    Shape shape = g.valences();
    for (int k : shape)
        if (k < 2)
            throw Error(ErrorCode::LowValence, to_string(g));
    std::size_t n = shape.size();
    std::vector<std::vector<int>> count(n + 1, std::vector<int>(n + 1, 0));
    for (auto [a, b] : g.edges) {
        ++count[a][b];
        ++count[b][a];
    }
    return PackagedDiagram{shape, realize(shape, std::move(count))};
}

std::vector<ChordDiagram> all_diagrams(int m)
{
    std::vector<ChordDiagram> out;
    std::vector<bool> used(2 * static_cast<std::size_t>(m) + 1, false);
    std::vector<Chord> cur;
    std::function<void()> rec = [&]() {
        int s = 1;
        while (s <= 2 * m && used[s])
            ++s;
        if (s > 2 * m) {
            out.push_back(ChordDiagram{cur});
            return;
        }
        used[s] = true;
        for (int t = s + 1; t <= 2 * m; ++t) {
            if (used[t])
                continue;
            used[t] = true;
            cur.emplace_back(s, t);
            rec();
            cur.pop_back();
            used[t] = false;
        }
        used[s] = false;
    };
    rec();
    return out;
}

std::vector<Shape> all_shapes(int slots)
{
    std::vector<Shape> out;
    Shape cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            if (!cur.empty())
                out.push_back(cur);
            return;
        }
        for (int k = 2; k <= left; ++k) {
            cur.push_back(k);
            rec(left - k);
            cur.pop_back();
        }
    };
    rec(slots);
    return out;
}

} // namespace gcx
