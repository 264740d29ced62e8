#ifndef GCX_SUITES_HPP
#define GCX_SUITES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/symplectic.hpp"

namespace gcx {

struct SuiteReport {
    explicit SuiteReport(std::string n, std::uint64_t s = 0) : name(std::move(n)), seed(s) {}

    std::string name;
    std::uint64_t seed = 0;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string unit = "cases";
    std::vector<std::string> lines; // failures, or per-item lines when verbose

    bool ok() const { return failed == 0; }
    std::string header() const;
    std::string summary() const;
};

// Deterministic word generator: factor degrees in [min_deg, max_deg],
// letters drawn from p_1..p_m, q_1..q_m.
class WordSampler {
public:
    explicit WordSampler(std::uint64_t seed) : rng_(seed) {}
    TensorWord word(int factors, int min_deg, int max_deg, int m);
    TensorWord even_word(int factors, int min_deg, int max_deg, int m); // even total degree
    int uniform(int lo, int hi);

private:
    std::mt19937_64 rng_;
};

// Connected factors for the bialgebra suites: at most 3 vertices and at most
// `max_edges` edges.
std::vector<Graph> bialgebra_letters(int max_edges = 2);
// Every ordered union of 1..max_components letters.
std::vector<Graph> bialgebra_graphs(int max_components, int max_edges = 2);

SuiteReport suite_d2(int max_n, int max_e);
SuiteReport suite_diagram_d2(int max_m);
SuiteReport suite_word_d2(int count, std::uint64_t seed);
SuiteReport suite_homotopy(int max_n, int max_e, bool verbose = false);
SuiteReport suite_ladder_formula(int max_n, int max_e);
SuiteReport suite_zinbiel(int max_components);
SuiteReport suite_compatibility(int max_components);
SuiteReport suite_projector(int max_components);
SuiteReport suite_derivation(int max_components);
SuiteReport suite_series(int degree);
SuiteReport suite_free_zinbiel(int max_len);
SuiteReport suite_interchange(int count, std::uint64_t seed);
SuiteReport suite_commute(int max_n, int max_e, int random, std::uint64_t seed);
SuiteReport suite_diagram_square(int max_m);
SuiteReport suite_lie(int max_n, int max_e);

} // namespace gcx

#endif
