#ifndef GCX_DIAGRAM_HPP
#define GCX_DIAGRAM_HPP

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/lincomb.hpp"

namespace gcx {

using Chord = std::pair<int, int>;

// Perfect pairing of {1..2m}; chords stored (min,max), sorted by first slot.
struct ChordDiagram {
    std::vector<Chord> pairs;

    int chords() const { return static_cast<int>(pairs.size()); }
    auto operator<=>(const ChordDiagram&) const = default;
    bool operator==(const ChordDiagram&) const = default;
};

// y_{i1 i2} y_{i3 i4} ... as written, not necessarily standard.
struct PairMonomial {
    std::vector<Chord> factors;

    auto operator<=>(const PairMonomial&) const = default;
    bool operator==(const PairMonomial&) const = default;
};

using Shape = std::vector<int>;

// Diagram modulo permutations inside each package; always the
// lexicographically smallest representative of its orbit.
struct PackagedDiagram {
    Shape shape;
    ChordDiagram diagram;

    auto operator<=>(const PackagedDiagram&) const = default;
    bool operator==(const PackagedDiagram&) const = default;
};

using DiagramComb = LinComb<ChordDiagram>;
using PackagedComb = LinComb<PackagedDiagram>;
using MonomialComb = LinComb<PairMonomial>;

// Orient every chord (i<j), one sign per flip, sort. Throws BadShape if
// the chords do not partition {1..2m}.
std::pair<ChordDiagram, int> normalize_chords(std::vector<Chord> chords);

// Standard form y_{i1 i2}... with i1 = 1, i_{2k-1} < i_{2k}, i_{2k-1} < i_{2k+1}.
std::pair<PairMonomial, int> standardize(const PairMonomial& m);
MonomialComb standard_monomial(const PairMonomial& m);

ChordDiagram phi(const PairMonomial& standard);
PairMonomial phi_inverse(const ChordDiagram& d);

// perm[i-1] = sigma(i) on {1..2m}; chord [i,j] goes to [sigma^-1(i), sigma^-1(j)].
DiagramComb sigma_act_diagram(const Perm& perm, const ChordDiagram& d);
MonomialComb sigma_act_monomial(const Perm& perm, const PairMonomial& m);

// 1-based package index of every slot.
std::vector<int> package_of(const Shape& shape);
void check_shape(const Shape& shape, int slots);

PackagedComb package(const ChordDiagram& d, const Shape& shape);

PackagedComb diagram_differential(const PackagedDiagram& pd);
PackagedComb diagram_differential(const PackagedComb& x);

Graph varphi(const PackagedDiagram& pd);
GraphComb varphi(const PackagedComb& x);
PackagedDiagram varphi_inverse(const Graph& g);

// Every diagram on 2m slots, and every shape with parts >= 2 summing to 2m.
std::vector<ChordDiagram> all_diagrams(int m);
std::vector<Shape> all_shapes(int slots);

} // namespace gcx

#endif
