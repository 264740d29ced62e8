#ifndef GCX_HOMOTOPY_HPP
#define GCX_HOMOTOPY_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gcx/chain.hpp"
#include "gcx/graph.hpp"
#include "gcx/sparse.hpp"

namespace gcx {

// LowValence: connected with some vertex of valence < 2. Such graphs never
// come from words and sit outside the three-way split.
enum class GraphKind { Polygon, Core, Mixed, LowValence, Disconnected };

const char* kind_name(GraphKind k);
GraphKind classify(const Graph& g);

struct Ladder {
    int low_anchor = 0;  // anchor at the start of the chain
    int high_anchor = 0; // anchor at the end
    std::vector<int> interior;
    std::vector<std::size_t> edge_slots; // positions in graph.edges, in chain order
};

struct LadderDecomposition {
    Graph graph;
    std::vector<Ladder> ladders;
};

// Maximal chains of bivalent vertices between anchors of valence >= 3,
// each read from the lower anchor to the higher one (for a chain returning
// to its anchor: from the smaller end vertex), sorted by (lower anchor,
// smallest interior label). Throws NotMixed.
LadderDecomposition ladders(const Graph& g);

// G_{+i}: vertex n+1 subdivides the last edge of ladder i.
GraphComb ladder_extension(const Graph& g, std::size_t i);

// Sum_i (-1)^{n+1}/m G_{+i}, kept only on Mixed terms.
GraphComb ladder_homotopy(const GraphComb& x);

GraphComb mixed_part(const GraphComb& x);
GraphComb mixed_differential(const GraphComb& x); // delta followed by the quotient map

// Chain contraction of the mixed quotient complex. The quotient splits by
// excess e - n; in each excess h is built degree by degree from the bottom:
//   h(G) = a preimage under delta_Q of G - h(delta_Q G),
// solved exactly on a lazily grown echelon basis of the image. Where the
// quotient has homology no such preimage exists; strict mode then throws
// NotABoundary, otherwise the part of the target inside the image is
// lifted and the rest is left as a defect of the homotopy identity.
class MixedHomotopy {
public:
    explicit MixedHomotopy(bool strict = false) : strict_(strict) {}

    GraphComb operator()(const GraphComb& x);
    GraphComb apply(const Graph& g);

    // Basis of the quotient in a given excess and vertex count.
    const std::vector<Graph>& basis(int excess, int n);

    // Number of targets that were not boundaries so far.
    std::size_t unsolved() const { return unsolved_; }

private:
    struct Level {
        std::vector<Graph> basis;
        std::map<Graph, std::size_t> index;
    };
    struct Solver {
        Echelon ech{true};
        std::size_t next = 0;
    };
    Level& level(int excess, int n);
    SparseVec coords(const GraphComb& x, int excess, int n);
    SparseVec preimage(int excess, int n, SparseVec target);

    std::map<std::pair<int, int>, Level> levels_;
    std::map<std::pair<int, int>, Solver> solvers_;
    std::map<Graph, GraphComb> memo_;
    std::recursive_mutex mu_;
    bool strict_ = false;
    std::size_t unsolved_ = 0;
};

GraphComb h(const GraphComb& x); // shared MixedHomotopy
GraphComb h(const Graph& g);

struct HomotopyLine {
    Graph graph;
    bool ok = true;
    GraphComb defect; // (delta h + h delta)(G) - G
};
std::vector<HomotopyLine> verify_homotopy(const std::vector<Graph>& mixed, const std::function<GraphComb(const GraphComb&)>& hom);
std::vector<Graph> mixed_graphs(int max_n, int max_e);

// Degrees 1..max_n; degree 1 is empty.
ChainComplexSlice<Graph> polygon_complex(int max_n);
// Connected, valence >= 3, excess e - n <= max_e - max_n, degrees 1..max_n+1.
ChainComplexSlice<Graph> reduced_core_complex(int max_n, int max_e);
// Mixed quotient in one excess, degrees 1..max_n.
ChainComplexSlice<Graph> mixed_quotient_complex(int excess, int max_n);

} // namespace gcx

#endif
