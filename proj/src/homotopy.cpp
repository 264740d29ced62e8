#include "gcx/homotopy.hpp"

#include "gcx/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gcx {

const char* kind_name(GraphKind k)
{
    switch (k) {
    case GraphKind::Polygon: return "Polygon";
    case GraphKind::Core: return "Core";
    case GraphKind::Mixed: return "Mixed";
    case GraphKind::LowValence: return "LowValence";
    case GraphKind::Disconnected: return "Disconnected";
    }
    return "?";
}

GraphKind classify(const Graph& g)
{
    if (g.n == 0 || !is_topologically_connected(g))
        return GraphKind::Disconnected;
    auto v = g.valences();
    int lo = *std::min_element(v.begin(), v.end());
    int hi = *std::max_element(v.begin(), v.end());
    if (lo < 2)
        return GraphKind::LowValence;
    if (hi == 2)
        return GraphKind::Polygon;
    if (lo >= 3)
        return GraphKind::Core;
    return GraphKind::Mixed;
}

LadderDecomposition ladders(const Graph& g)
{
    if (classify(g) != GraphKind::Mixed)
        throw Error(ErrorCode::NotMixed, to_string(g) + " is " + kind_name(classify(g)));
    auto val = g.valences();
    std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(g.n) + 1);
    for (std::size_t t = 0; t < g.edges.size(); ++t) {
        auto [a, b] = g.edges[t];
        adj[a].emplace_back(b, t);
        adj[b].emplace_back(a, t);
    }
    std::vector<bool> used(g.edges.size(), false);
    LadderDecomposition out{g, {}};
    for (int a = 1; a <= g.n; ++a) {
        if (val[a - 1] < 3)
            continue;
        for (auto [x, t] : adj[a]) {
            if (used[t] || val[x - 1] != 2)
                continue;
            Ladder l;
            l.edge_slots.push_back(t);
            used[t] = true;
            std::size_t prev = t;
            int cur = x;
            while (val[cur - 1] == 2) {
                l.interior.push_back(cur);
                for (auto [y, t2] : adj[cur])
                    if (t2 != prev) {
                        used[t2] = true;
                        l.edge_slots.push_back(t2);
                        prev = t2;
                        cur = y;
                        break;
                    }
            }
            int start = a, end = cur;
            bool flip = start == end ? l.interior.front() > l.interior.back() : start > end;
            if (flip) {
                std::reverse(l.interior.begin(), l.interior.end());
                std::reverse(l.edge_slots.begin(), l.edge_slots.end());
                std::swap(start, end);
            }
            l.low_anchor = start;
            l.high_anchor = end;
            out.ladders.push_back(std::move(l));
        }
    }
    std::sort(out.ladders.begin(), out.ladders.end(), [](const Ladder& x, const Ladder& y) {
        auto kx = std::make_pair(std::min(x.low_anchor, x.high_anchor), *std::min_element(x.interior.begin(), x.interior.end()));
        auto ky = std::make_pair(std::min(y.low_anchor, y.high_anchor), *std::min_element(y.interior.begin(), y.interior.end()));
        return kx < ky;
    });
    return out;
}

GraphComb ladder_extension(const Graph& g, std::size_t i)
{
    auto dec = ladders(g);
    if (i >= dec.ladders.size())
        throw Error(ErrorCode::DegreeOutOfRange, "no ladder " + std::to_string(i));
    const Ladder& l = dec.ladders[i];
    std::size_t last = l.edge_slots.back();
    int x = l.interior.back(), b = l.high_anchor, v = g.n + 1;
    std::vector<Edge> e;
    for (std::size_t t = 0; t < g.edges.size(); ++t)
        if (t != last)
            e.push_back(g.edges[t]);
    e.emplace_back(x, v);
    e.emplace_back(b, v);
    return canonicalize(OrientedEdgeList{v, std::move(e)});
}

GraphComb ladder_homotopy(const GraphComb& x)
{
    GraphComb out;
    for (const auto& [g, c] : x) {
        auto dec = ladders(g);
        long m = static_cast<long>(dec.ladders.size());
        Rational w = make_rational(g.n % 2 ? 1 : -1, m) * c;
        for (std::size_t i = 0; i < dec.ladders.size(); ++i)
            out.add_scaled(mixed_part(ladder_extension(g, i)), w);
    }
    return out;
}

GraphComb mixed_part(const GraphComb& x)
{
    GraphComb out;
    for (const auto& [g, c] : x)
        if (classify(g) == GraphKind::Mixed)
            out.add(g, c);
    return out;
}

GraphComb mixed_differential(const GraphComb& x) { return mixed_part(differential(x)); }

static int excess(const Graph& g) { return static_cast<int>(g.edges.size()) - g.n; }

MixedHomotopy::Level& MixedHomotopy::level(int c, int n)
{
    auto key = std::make_pair(c, n);
    auto it = levels_.find(key);
    if (it != levels_.end())
        return it->second;
    Level lv;
    if (n >= 1 && n + c >= 0)
        for (auto& g : enumerate_exact(n, n + c, 2, true))
            if (classify(g) == GraphKind::Mixed)
                lv.basis.push_back(std::move(g));
    for (std::size_t i = 0; i < lv.basis.size(); ++i)
        lv.index.emplace(lv.basis[i], i);
    return levels_.emplace(key, std::move(lv)).first->second;
}

const std::vector<Graph>& MixedHomotopy::basis(int c, int n)
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return level(c, n).basis;
}

SparseVec MixedHomotopy::coords(const GraphComb& x, int c, int n)
{
    Level& lv = level(c, n);
    SparseVec v;
    for (const auto& [g, k] : x)
        v.emplace_back(lv.index.at(g), k);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

SparseVec MixedHomotopy::preimage(int c, int n, SparseVec target)
{
    Level& up = level(c, n + 1);
    Solver& s = solvers_[{c, n}];
    SparseVec combo;
    for (;;) {
        auto r = s.ech.reduce(std::move(target));
        combo = axpy(combo, Rational(1), r.combo);
        target = std::move(r.residual);
        if (target.empty())
            break;
        if (s.next >= up.basis.size()) {
            // target has a component outside the image: the quotient has homology here
            if (strict_)
                throw Error(ErrorCode::NotABoundary, "mixed quotient is not acyclic in excess " +
                                                         std::to_string(c) + ", degree " + std::to_string(n));
            ++unsolved_;
            break;
        }
        // grow the image basis until something new can be cleared
        std::size_t before = s.ech.rank();
        while (s.ech.rank() == before && s.next < up.basis.size()) {
            std::size_t j = s.next++;
            s.ech.insert(coords(mixed_differential(GraphComb::single(up.basis[j])), c, n), j);
        }
    }
    return combo;
}

GraphComb MixedHomotopy::apply(const Graph& g)
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = memo_.find(g);
    if (it != memo_.end())
        return it->second;
    if (classify(g) != GraphKind::Mixed)
        throw Error(ErrorCode::NotMixed, to_string(g) + " is " + kind_name(classify(g)));
    int c = excess(g), n = g.n;
    GraphComb t = GraphComb::single(g);
    t -= (*this)(mixed_differential(t));
    SparseVec y = preimage(c, n, coords(t, c, n));
    const Level& up = level(c, n + 1);
    GraphComb out;
    for (const auto& [j, v] : y)
        out.add(up.basis[j], v);
    memo_.emplace(g, out);
    return out;
}

GraphComb MixedHomotopy::operator()(const GraphComb& x)
{
    GraphComb out;
    for (const auto& [g, c] : x)
        out.add_scaled(apply(g), c);
    return out;
}

static MixedHomotopy& shared_homotopy()
{
    static MixedHomotopy inst;
    return inst;
}

GraphComb h(const GraphComb& x) { return shared_homotopy()(x); }
GraphComb h(const Graph& g) { return shared_homotopy().apply(g); }

std::vector<HomotopyLine> verify_homotopy(const std::vector<Graph>& mixed,
                                          const std::function<GraphComb(const GraphComb&)>& hom)
{
    std::vector<HomotopyLine> out;
    for (const auto& g : mixed) {
        GraphComb x = GraphComb::single(g);
        GraphComb r = mixed_differential(hom(x)) + hom(mixed_differential(x)) - x;
        out.push_back({g, r.empty(), r});
    }
    return out;
}

std::vector<Graph> mixed_graphs(int max_n, int max_e)
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : enumerate(n, max_e, 2, true))
            if (classify(g) == GraphKind::Mixed)
                out.push_back(std::move(g));
    return out;
}

static std::vector<Graph> polygons(int n)
{
    std::vector<Graph> out;
    if (n == 2) {
        out.push_back(Graph{2, {{1, 2}, {1, 2}}});
        return out;
    }
    if (n < 3)
        return out;
    std::set<Graph> seen;
    std::vector<int> rest(static_cast<std::size_t>(n) - 1);
    std::iota(rest.begin(), rest.end(), 2);
    do {
        if (rest.front() > rest.back())
            continue; // each cycle once per direction
        std::vector<Edge> e;
        int prev = 1;
        for (int v : rest) {
            e.emplace_back(std::min(prev, v), std::max(prev, v));
            prev = v;
        }
        e.emplace_back(1, prev);
        std::sort(e.begin(), e.end());
        seen.insert(Graph{n, std::move(e)});
    } while (std::next_permutation(rest.begin(), rest.end()));
    out.assign(seen.begin(), seen.end());
    return out;
}

static GraphComb diff_fn(const Graph& g) { return differential(g); }

ChainComplexSlice<Graph> polygon_complex(int max_n)
{
    std::vector<std::vector<Graph>> basis;
    for (int n = 1; n <= max_n; ++n)
        basis.push_back(polygons(n));
    return build_slice<Graph>(1, std::move(basis), diff_fn, {});
}

ChainComplexSlice<Graph> reduced_core_complex(int max_n, int max_e)
{
    int cmax = max_e - max_n;
    std::vector<std::vector<Graph>> basis;
    for (int n = 1; n <= max_n + 1; ++n) {
        std::vector<Graph> b;
        for (auto& g : enumerate(n, n + cmax, 3, true))
            b.push_back(std::move(g));
        basis.push_back(std::move(b));
    }
    return build_slice<Graph>(1, std::move(basis), diff_fn, {});
}

ChainComplexSlice<Graph> mixed_quotient_complex(int c, int max_n)
{
    std::vector<std::vector<Graph>> basis;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Graph> b;
        if (n + c >= 0)
            for (auto& g : enumerate_exact(n, n + c, 2, true))
                if (classify(g) == GraphKind::Mixed)
                    b.push_back(std::move(g));
        basis.push_back(std::move(b));
    }
    return build_slice<Graph>(1, std::move(basis), [](const Graph& g) { return mixed_differential(GraphComb::single(g)); }, {});
}

} // namespace gcx
