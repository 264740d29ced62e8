#ifndef GCX_GRAPH_HPP
#define GCX_GRAPH_HPP

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcx/lincomb.hpp"

namespace gcx {

using Edge = std::pair<int, int>;

// Loopless multigraph on {1..n}; edges stored (min,max), sorted.
// Graph{0,{}} is the unit.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    auto operator<=>(const Graph&) const = default;
    bool operator==(const Graph&) const = default;

    std::size_t edge_count() const { return edges.size(); }
    std::vector<int> valences() const;
};

// Directed edges; orientation only matters through the sign.
struct OrientedEdgeList {
    int n = 0;
    std::vector<Edge> edges;
};

using GraphComb = LinComb<Graph>;

// Flip each reversed edge (sign -1), kill loops. nullopt means zero.
std::optional<std::pair<Graph, int>> orient(int n, std::vector<Edge> edges);

GraphComb canonicalize(const OrientedEdgeList& o);

// Checked construction from any edge list; throws BadVertex.
Graph make_graph(int n, std::vector<Edge> edges);

GraphComb contract(const Graph& g, Edge e);
// Contract the edge stored at position `slot` of g.edges.
GraphComb contract_slot(const Graph& g, std::size_t slot);

GraphComb differential(const Graph& g);
GraphComb differential(const GraphComb& x);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph disjoint_union(const std::vector<Graph>& parts);
GraphComb product(const GraphComb& a, const GraphComb& b);

// Finest factorization g = g1 . g2 ... into ordered disjoint unions:
// the blocks are maximal label intervals not crossed by any edge.
std::vector<Graph> connected_components(const Graph& g);
bool is_connected(const Graph& g); // exactly one factor

// Ordinary (topological) connectivity of the underlying multigraph.
bool is_topologically_connected(const Graph& g);
std::vector<std::vector<int>> topological_components(const Graph& g);

// perm[i-1] = sigma(i), a permutation of {1..n}.
using Perm = std::vector<int>;
int perm_sign(const Perm& p);
Perm perm_compose(const Perm& s, const Perm& t); // (s t)(i) = s(t(i))
Perm perm_inverse(const Perm& p);

// sgn(sigma) times the relabelled graph, including orientation flips.
GraphComb sigma_act(const Perm& perm, const Graph& g);

struct GraphClass {
    Graph rep;
    auto operator<=>(const GraphClass&) const = default;
    bool operator==(const GraphClass&) const = default;
};
using ClassComb = LinComb<GraphClass>;

ClassComb lie_class(const Graph& g);
ClassComb lie_class(const GraphComb& x);
ClassComb lie_differential(const ClassComb& x);

// All canonical graphs on n vertices with at most max_edges edges, every
// valence >= min_valence, optionally topologically connected. Sorted.
std::vector<Graph> enumerate(int n, int max_edges, int min_valence, bool connected_only);
// Same, with exactly `edges` edges.
std::vector<Graph> enumerate_exact(int n, int edges, int min_valence, bool connected_only);

std::string to_string(const Graph& g);

} // namespace gcx

#endif
