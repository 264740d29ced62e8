#ifndef GCX_FREE_ALGEBRA_HPP
#define GCX_FREE_ALGEBRA_HPP

#include <compare>
#include <map>
#include <string>

#include "gcx/lincomb.hpp"

namespace gcx {

// Words over an abstract alphabet, one char per letter.
using Word = std::string;
using FreeComb = LinComb<Word>;

FreeComb shuffle(const Word& u, const Word& v);
// u1 (u2..up ⧢ v); throws EmptyLeft when u is empty.
FreeComb halfshuffle(const Word& u, const Word& v);
FreeComb halfshuffle(const FreeComb& x, const FreeComb& y);
// x⋆y = x≺y + y≺x
FreeComb star(const FreeComb& x, const FreeComb& y);

// (x≺y)≺z - x≺(y≺z) - x≺(z≺y)
FreeComb zinbiel_defect(const Word& x, const Word& y, const Word& z);

// Planar binary tree. Leaf "t"; a node is "(" left right ")".
struct PlanarTree {
    std::string code = "t";

    static PlanarTree leaf() { return {}; }
    static PlanarTree graft(const PlanarTree& l, const PlanarTree& r) { return {"(" + l.code + r.code + ")"}; }

    bool is_leaf() const { return code == "t"; }
    int degree() const;
    PlanarTree left() const;
    PlanarTree right() const;
    std::string pretty() const; // t, (t·t), ...

    auto operator<=>(const PlanarTree&) const = default;
    bool operator==(const PlanarTree&) const = default;
};

using TreeComb = LinComb<PlanarTree>;

// Truncated series in the completed free magmatic algebra.
struct MagSeries {
    int bound = 0;
    Rational constant = 0;
    TreeComb terms; // every tree of degree <= bound

    TreeComb degree_part(int k) const;
    friend bool operator==(const MagSeries&, const MagSeries&) = default;
};

MagSeries identity_series(int bound);
MagSeries series_f(int bound); // right combs, coefficient +1
MagSeries series_g(int bound); // left combs, coefficient (-1)^{n+1}

// phi(psi(t)); throws NonzeroConstantTerm when psi has a constant term.
MagSeries mag_compose(const MagSeries& phi, const MagSeries& psi, int bound);

// All planar binary trees with n leaves.
std::vector<PlanarTree> all_trees(int n);

} // namespace gcx

#endif
