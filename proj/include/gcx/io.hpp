#ifndef GCX_IO_HPP
#define GCX_IO_HPP

#include <json.hpp>

#include "gcx/bialgebra.hpp"
#include "gcx/diagram.hpp"
#include "gcx/graph.hpp"
#include "gcx/symplectic.hpp"

namespace gcx {

using Json = nlohmann::ordered_json;

// {"n": 3, "edges": [[1,2],...]}
Json to_json(const Graph& g);
// Accepts a graph record (edges in any orientation; flips give signs, loops
// give zero) or an array of {"coeff": "p/q", "graph": ...}.
GraphComb graph_comb_from_json(const Json& j);
Graph graph_from_json(const Json& j); // single record, must be canonical up to sign +1
Json to_json(const GraphComb& x);
Json to_json(const ClassComb& x);

// {"shape": [...], "pairs": [[a,b],...]}
Json to_json(const PackagedDiagram& d);
Json to_json(const PackagedComb& x);
Json to_json(const MonomialComb& x, const Shape& shape);
PackagedDiagram packaged_from_json(const Json& j); // canonicalizes; throws if zero
std::pair<PairMonomial, Shape> monomial_from_json(const Json& j);

// ["p1 p2 p3", "q1 q2 p4", "q3 q4"]
Json to_json(const TensorWord& w);
Json to_json(const WordComb& x);
TensorWord word_from_json(const Json& j);
WordComb word_comb_from_json(const Json& j);

Json to_json(const GraphTensor& t);

} // namespace gcx

#endif
