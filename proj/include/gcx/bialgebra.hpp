#ifndef GCX_BIALGEBRA_HPP
#define GCX_BIALGEBRA_HPP

#include <functional>
#include <tuple>
#include <utility>

#include "gcx/graph.hpp"
#include "gcx/lincomb.hpp"
#include "gcx/symplectic.hpp"

namespace gcx {

using GraphTensor = LinComb<std::pair<Graph, Graph>>;
using GraphTensor3 = LinComb<std::tuple<Graph, Graph, Graph>>;
using Coproduct = std::function<GraphTensor(const Graph&)>;

// Sign of moving graded items into the order `order`, degrees by vertex count.
int koszul_sign(const std::vector<int>& order, const std::vector<int>& degrees);

// Sum over subsets S of the later factors of (G1 G_S) ⊗ (G_rest), with the
// Koszul sign of the reordering. Throws UnitInput on the unit graph.
GraphTensor cohalf_shuffle(const Graph& g);
GraphTensor cohalf_shuffle(const GraphComb& x);
// Same without the g ⊗ 1 term.
GraphTensor reduced_cohalf_shuffle(const Graph& g);

// Delta = Delta_< + tau Delta_<, with Delta(1) = 1 ⊗ 1.
GraphTensor full_coproduct(const Graph& g);

GraphTensor tau(const GraphTensor& t);

struct LawCheck {
    bool ok = true;
    GraphTensor3 defect;
};

// (D⊗Id)D - (Id⊗D)D - (Id⊗τD)D on g, D the reduced co-half shuffle
// unless another coproduct is supplied.
LawCheck check_zinbiel_coalgebra(const Graph& g);
LawCheck check_zinbiel_coalgebra(const Graph& g, const Coproduct& reduced);

struct CompatCheck {
    bool ok = true;
    GraphTensor defect; // lhs - rhs
};

// Delta_<(ab) against (mu⊗mu)(Id⊗τ⊗Id)(Delta_<(a) ⊗ Delta(b)).
CompatCheck check_compatibility(const Graph& a, const Graph& b);

// delta(ab) - delta(a) b - (-1)^{n(a)} a delta(b)
GraphComb derivation_defect(const Graph& a, const Graph& b);

// (F ⋆ G)(x) = mu (F ⊗ G) Delta_<(x)
using GraphMap = std::function<GraphComb(const Graph&)>;
GraphComb convolve(const GraphMap& f, const GraphMap& g, const GraphComb& x);

// e = J - J⋆J + (J⋆J)⋆J - ..., stopped at the component count of x.
// degree_bound > 0 caps the admissible component count (DegreeOutOfRange).
GraphComb primitive_projector(const GraphComb& x, int degree_bound = 0);

// Word-level co-half shuffle into p left and q right factors, first
// factor on the left, signed by the shuffle permutation.
using WordTensor = LinComb<std::pair<TensorWord, TensorWord>>;
WordTensor word_cohalf(const TensorWord& w, int p, int q);

struct InterchangeCheck {
    bool ok = true;
    WordTensor defect;
};
// Delta^{p,q} d = (d⊗Id) Delta^{p+1,q} + (-1)^p (Id⊗d) Delta^{p,q+1}
InterchangeCheck check_interchange(const TensorWord& w, int p, int q);

} // namespace gcx

#endif
