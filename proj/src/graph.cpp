#include "gcx/graph.hpp"

#include "gcx/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gcx {

std::vector<int> Graph::valences() const
{
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : edges) {
        ++v[a - 1];
        ++v[b - 1];
    }
    return v;
}

std::optional<std::pair<Graph, int>> orient(int n, std::vector<Edge> edges)
{
    int sign = 1;
    for (auto& [a, b] : edges) {
        if (a == b)
            return std::nullopt;
        if (a > b) {
            std::swap(a, b);
            sign = -sign;
        }
    }
    std::sort(edges.begin(), edges.end());
    return std::make_pair(Graph{n, std::move(edges)}, sign);
}

static void check_vertices(int n, const std::vector<Edge>& edges)
{
    if (n < 0)
        throw Error(ErrorCode::BadVertex, "negative vertex count");
    for (auto [a, b] : edges)
        if (a < 1 || b < 1 || a > n || b > n)
            throw Error(ErrorCode::BadVertex,
                        "edge [" + std::to_string(a) + "," + std::to_string(b) + "] with n=" + std::to_string(n));
}

GraphComb canonicalize(const OrientedEdgeList& o)
{
    check_vertices(o.n, o.edges);
    GraphComb out;
    if (auto r = orient(o.n, o.edges))
        out.add(std::move(r->first), Rational(r->second));
    return out;
}

Graph make_graph(int n, std::vector<Edge> edges)
{
    check_vertices(n, edges);
    for (auto& [a, b] : edges) {
        if (a == b)
            throw Error(ErrorCode::BadVertex, "loop at vertex " + std::to_string(a));
        if (a > b)
            std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    return Graph{n, std::move(edges)};
}

GraphComb contract_slot(const Graph& g, std::size_t slot)
{
    if (slot >= g.edges.size())
        throw Error(ErrorCode::NoSuchEdge, "slot " + std::to_string(slot));
    auto [i, j] = g.edges[slot];
    auto stdz = [i = i, j = j](int k) { return k == j ? i : (k > j ? k - 1 : k); };
    std::vector<Edge> rest;
    rest.reserve(g.edges.size() - 1);
    for (std::size_t t = 0; t < g.edges.size(); ++t)
        if (t != slot)
            rest.emplace_back(stdz(g.edges[t].first), stdz(g.edges[t].second));
    GraphComb out;
    if (auto r = orient(g.n - 1, std::move(rest)))
        out.add(std::move(r->first), Rational(r->second));
    return out;
}

GraphComb contract(const Graph& g, Edge e)
{
    if (e.first > e.second)
        std::swap(e.first, e.second);
    auto it = std::find(g.edges.begin(), g.edges.end(), e);
    if (it == g.edges.end())
        throw Error(ErrorCode::NoSuchEdge,
                    "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "} not in " + to_string(g));
    return contract_slot(g, static_cast<std::size_t>(it - g.edges.begin()));
}

GraphComb differential(const Graph& g)
{
    GraphComb out;
    for (std::size_t t = 0; t < g.edges.size(); ++t) {
        int j = g.edges[t].second;
        out.add_scaled(contract_slot(g, t), Rational(j % 2 ? -1 : 1));
    }
    return out;
}

GraphComb differential(const GraphComb& x)
{
    return apply_linear(x, [](const Graph& g) { return differential(g); });
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph r{a.n + b.n, a.edges};
    for (auto [x, y] : b.edges)
        r.edges.emplace_back(x + a.n, y + a.n);
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

Graph disjoint_union(const std::vector<Graph>& parts)
{
    Graph r;
    for (const auto& p : parts)
        r = disjoint_union(r, p);
    return r;
}

GraphComb product(const GraphComb& a, const GraphComb& b)
{
    GraphComb out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            out.add(disjoint_union(x, y), Rational(cx * cy));
    return out;
}

std::vector<Graph> connected_components(const Graph& g)
{
    // reach[k] = furthest vertex tied to the interval containing k
    std::vector<int> reach(static_cast<std::size_t>(g.n) + 1);
    std::iota(reach.begin(), reach.end(), 0);
    for (auto [a, b] : g.edges)
        reach[a] = std::max(reach[a], b);
    std::vector<Graph> out;
    int start = 1;
    int far = 0;
    for (int k = 1; k <= g.n; ++k) {
        far = std::max(far, reach[k]);
        if (far == k) {
            Graph c{k - start + 1, {}};
            for (auto [a, b] : g.edges)
                if (a >= start && b <= k)
                    c.edges.emplace_back(a - start + 1, b - start + 1);
            out.push_back(std::move(c));
            start = k + 1;
        }
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

std::vector<std::vector<int>> topological_components(const Graph& g)
{
    std::vector<int> parent(static_cast<std::size_t>(g.n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : g.edges)
        parent[find(a)] = find(b);
    std::vector<std::vector<int>> comps;
    std::vector<int> slot(static_cast<std::size_t>(g.n) + 1, -1);
    for (int v = 1; v <= g.n; ++v) {
        int r = find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[slot[r]].push_back(v);
    }
    return comps;
}

bool is_topologically_connected(const Graph& g) { return topological_components(g).size() == 1; }

int perm_sign(const Perm& p)
{
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                s = -s;
    return s;
}

Perm perm_compose(const Perm& s, const Perm& t)
{
    Perm r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        r[i] = s[t[i] - 1];
    return r;
}

Perm perm_inverse(const Perm& p)
{
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[p[i] - 1] = static_cast<int>(i) + 1;
    return r;
}

static bool is_perm(const Perm& p)
{
    std::vector<bool> seen(p.size() + 1, false);
    for (int x : p) {
        if (x < 1 || x > static_cast<int>(p.size()) || seen[x])
            return false;
        seen[x] = true;
    }
    return true;
}

static std::pair<Graph, int> relabel(const Perm& perm, const Graph& g)
{
    std::vector<Edge> e;
    e.reserve(g.edges.size());
    for (auto [a, b] : g.edges)
        e.emplace_back(perm[a - 1], perm[b - 1]);
    auto r = orient(g.n, std::move(e)); // a relabelling cannot create loops
    return {std::move(r->first), r->second * perm_sign(perm)};
}

GraphComb sigma_act(const Perm& perm, const Graph& g)
{
    if (static_cast<int>(perm.size()) != g.n || !is_perm(perm))
        throw Error(ErrorCode::SizeMismatch, "permutation does not act on " + std::to_string(g.n) + " vertices");
    auto [h, s] = relabel(perm, g);
    return GraphComb::single(h, Rational(s));
}

ClassComb lie_class(const Graph& g)
{
    Perm p(static_cast<std::size_t>(g.n));
    std::iota(p.begin(), p.end(), 1);
    std::optional<Graph> best;
    int best_sign = 1;
    do {
        auto [h, s] = relabel(p, g);
        if (s == -1 && h == g)
            return {}; // odd automorphism
        if (!best || h < *best) {
            best = std::move(h);
            best_sign = s;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return ClassComb::single(GraphClass{*best}, Rational(best_sign));
}

ClassComb lie_class(const GraphComb& x)
{
    return apply_linear(x, [](const Graph& g) { return lie_class(g); });
}

ClassComb lie_differential(const ClassComb& x)
{
    ClassComb out;
    for (const auto& [cl, c] : x)
        out.add_scaled(lie_class(differential(cl.rep)), c);
    return out;
}

std::vector<Graph> enumerate_exact(int n, int edges, int min_valence, bool connected_only)
{
    std::vector<Graph> out;
    if (n < 0 || edges < 0)
        return out;
    std::vector<Edge> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            pairs.emplace_back(a, b);
    if (edges > 0 && pairs.empty())
        return out;
    std::vector<Edge> cur;
    std::vector<int> val(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        int left = edges - static_cast<int>(cur.size());
        if (left == 0) {
            for (int v = 1; v <= n; ++v)
                if (val[v] < min_valence)
                    return;
            Graph g{n, cur};
            if (connected_only && !is_topologically_connected(g))
                return;
            out.push_back(std::move(g));
            return;
        }
        // each remaining edge raises total valence deficit by at most 2
        int deficit = 0;
        for (int v = 1; v <= n; ++v)
            deficit += std::max(0, min_valence - val[v]);
        if (deficit > 2 * left)
            return;
        for (std::size_t k = from; k < pairs.size(); ++k) {
            cur.push_back(pairs[k]);
            ++val[pairs[k].first];
            ++val[pairs[k].second];
            rec(k);
            --val[pairs[k].first];
            --val[pairs[k].second];
            cur.pop_back();
        }
    };
    rec(0);
    return out; // lexicographic by construction
}

std::vector<Graph> enumerate(int n, int max_edges, int min_valence, bool connected_only)
{
    std::vector<Graph> out;
    for (int e = 0; e <= max_edges; ++e) {
        auto part = enumerate_exact(n, e, min_valence, connected_only);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Graph& g)
{
    std::string s = "Graph(" + std::to_string(g.n) + ",{";
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i)
            s += ",";
        s += "[" + std::to_string(g.edges[i].first) + "," + std::to_string(g.edges[i].second) + "]";
    }
    return s + "})";
}

} // namespace gcx
