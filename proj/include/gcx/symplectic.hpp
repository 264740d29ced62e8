#ifndef GCX_SYMPLECTIC_HPP
#define GCX_SYMPLECTIC_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "gcx/diagram.hpp"
#include "gcx/graph.hpp"
#include "gcx/lincomb.hpp"

namespace gcx {

enum class Kind { P = 0, Q = 1 };

struct Generator {
    Kind kind = Kind::P;
    int index = 1;
    auto operator<=>(const Generator&) const = default;
    bool operator==(const Generator&) const = default;
};

inline Generator p(int i) { return {Kind::P, i}; }
inline Generator q(int i) { return {Kind::Q, i}; }

// Commutative monomial: (generator, exponent > 0), sorted with all p's
// before all q's.
struct Monomial {
    std::vector<std::pair<Generator, int>> powers;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

    int degree() const;
    int exponent(Generator g) const;
    static Monomial of(std::vector<Generator> gens);
    friend Monomial operator*(const Monomial& a, const Monomial& b);
};

using PQPolynomial = LinComb<Monomial>;

// Ordered tensor of monomials; the empty word is the unit.
using TensorWord = std::vector<Monomial>;
using WordComb = LinComb<TensorWord>;

// A flat sequence of generators cut into factors by `shape`.
struct GeneratorWord {
    std::vector<Generator> letters;
    Shape shape;
    auto operator<=>(const GeneratorWord&) const = default;
    bool operator==(const GeneratorWord&) const = default;
};

PQPolynomial poisson_bracket(const PQPolynomial& f, const PQPolynomial& g);
PQPolynomial poisson_bracket(const Monomial& f, const Monomial& g);

WordComb leibniz_differential(const TensorWord& w);
WordComb leibniz_differential(const WordComb& x);

Rational symplectic_form(Generator u, Generator v);

// Each factor written as its generators in monomial order.
GeneratorWord flatten(const TensorWord& w);
TensorWord to_tensor_word(const GeneratorWord& g);

// Sum over pairings of the letter positions of the omega-products; only
// pairings in which every pair carries a nonzero value are visited.
MonomialComb tstar(const GeneratorWord& w);
MonomialComb tstar(const TensorWord& w);
// The same sum over all (2r-1)!! pairings; test oracle.
MonomialComb tstar_bruteforce(const GeneratorWord& w);

// p_k at position i_{2k-1}, q_k at i_{2k}, in the order the factors are given.
GeneratorWord split_S(const PairMonomial& mono, const Shape& shape);

GraphComb word_to_graphs(const TensorWord& w);
GraphComb word_to_graphs(const WordComb& x);

// E on a (index 2i), O on b (index 2i-1), factors of a first.
TensorWord matrix_sum_product(const TensorWord& a, const TensorWord& b);

// A word in the preimage of a graph: split_S of its packaged diagram.
TensorWord graph_to_word(const Graph& g);

std::string to_string(Generator g);
std::string to_string(const Monomial& m); // "p1 p2 q1"; exponents spelled out
std::string to_string(const TensorWord& w);
Generator parse_generator(const std::string& s);
Monomial parse_monomial(const std::string& s); // accepts "p1 p1", "p1^2", "p1*q2"

} // namespace gcx

#endif
