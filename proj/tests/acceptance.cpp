// One line per acceptance criterion. Exit status is nonzero if any fails.

#include "gcx/bialgebra.hpp"
#include "gcx/homotopy.hpp"
#include "gcx/io.hpp"
#include "gcx/suites.hpp"
#include "gcx/symplectic.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gcx;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& what, double limit_s, const std::function<Outcome()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("threw: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = s < limit_s;
    bool pass = o.ok && in_time;
    failures += !pass;
    char t[64];
    std::snprintf(t, sizeof t, "%.3fs of %gs", s, limit_s);
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << what << " [" << t
              << (in_time ? "" : ", over time") << "]";
    if (!o.detail.empty())
        std::cout << "  " << o.detail;
    std::cout << std::endl;
}

std::string show(const GraphComb& x) { return x.empty() ? "0" : to_json(x).dump(); }
std::string show(const GraphTensor& x) { return x.empty() ? "0" : to_json(x).dump(); }

Outcome from_reports(const std::vector<SuiteReport>& reps)
{
    Outcome o{true, ""};
    for (const auto& r : reps) {
        o.ok = o.ok && r.ok();
        o.detail += (o.detail.empty() ? "" : "; ") + r.name + ": " + r.summary();
        if (!r.ok() && !r.lines.empty())
            o.detail += " (first: " + r.lines.front() + ")";
    }
    return o;
}

Graph G(int n, std::vector<Edge> e) { return make_graph(n, std::move(e)); }

Monomial M(const char* s) { return parse_monomial(s); }

const Graph doubled_triangle = G(3, {{1, 2}, {1, 2}, {1, 3}, {2, 3}});
const Graph triple = G(2, {{1, 2}, {1, 2}, {1, 2}});

} // namespace

int main()
{
    criterion(1, "differential of the doubled triangle is -2 times the triple edge", 1e-3, [] {
        GraphComb got = differential(doubled_triangle);
        return Outcome{got == GraphComb::single(triple, Rational(-2)), "got " + show(got)};
    });

    criterion(2, "word differential of the lift, and its graph image", 1.0, [] {
        TensorWord P{M("p1 p2 p3"), M("q1 q2 p4"), M("q3 q4")};
        WordComb want;
        want.add({M("p2 p3 q2 p4"), M("q3 q4")}, Rational(1));
        want.add({M("p1 p3 q1 p4"), M("q3 q4")}, Rational(1));
        want.add({M("p1 p2 p3"), M("q1 q2 q3")}, Rational(-1));
        want.add({M("p1 p2 q4"), M("q1 q2 p4")}, Rational(-1));
        WordComb dP = leibniz_differential(P);
        GraphComb img = word_to_graphs(dP);
        bool words = dP == want;
        bool graphs = img == GraphComb::single(triple, Rational(-2));
        return Outcome{words && graphs, std::string("four-term expansion ") + (words ? "matches" : "differs") +
                                            "; graph image " + show(img)};
    });

    criterion(3, "commuting square on lifts of graphs (n<=4, e<=6) and 50 seeded words", 120.0, [] {
        return from_reports({suite_commute(4, 6, 50, 0)});
    });

    criterion(4, "worked co-half shuffles of H1.H1 and G1.G2.G3", 1e-3, [] {
        Graph H1 = G(2, {{1, 2}, {1, 2}});
        Graph H = disjoint_union(H1, H1);
        GraphTensor wantH;
        wantH.add({H, Graph{}}, Rational(1));
        wantH.add({H1, H1}, Rational(2));
        GraphTensor gotH = cohalf_shuffle(H);

        Graph g1 = G(3, {{1, 3}, {1, 3}, {1, 2}, {2, 3}});
        Graph g2 = H1;
        Graph g3 = G(3, {{1, 3}, {1, 3}, {1, 2}, {2, 3}, {1, 3}});
        GraphTensor wantG;
        wantG.add({disjoint_union({g1, g2, g3}), Graph{}}, Rational(1));
        wantG.add({g1, disjoint_union(g2, g3)}, Rational(1));
        wantG.add({disjoint_union(g1, g2), g3}, Rational(1));
        wantG.add({disjoint_union(g1, g3), g2}, Rational(1));
        bool okG = cohalf_shuffle(disjoint_union({g1, g2, g3})) == wantG;
        return Outcome{gotH == wantH && okG, "H1.H1 gives " + show(gotH) + "; G1.G2.G3 " +
                                                 (okG ? "matches" : "differs")};
    });

    criterion(5, "Zinbiel coalgebra law and compatibility, up to 4 components", 60.0, [] {
        return from_reports({suite_zinbiel(4), suite_compatibility(4)});
    });

    criterion(6, "squares of the graph, diagram and word differentials", 300.0, [] {
        return from_reports({suite_d2(5, 7), suite_diagram_d2(4), suite_word_d2(100, 0)});
    });

    criterion(7, "homotopy identity on mixed graphs (n<=5, e<=7)", 120.0, [] {
        return from_reports({suite_homotopy(5, 7)});
    });

    criterion(8, "reliable homology of the polygon complex up to n=7 vanishes", 60.0, [] {
        auto c = polygon_complex(7);
        Outcome o{true, ""};
        for (const auto& [k, h] : homology_dims(c)) {
            if (!h.reliable)
                continue;
            o.ok = o.ok && h.dim == 0;
            o.detail += "H" + std::to_string(k) + "=" + std::to_string(h.dim) + " ";
        }
        return o;
    });

    criterion(9, "f and g are mutually inverse through degree 8", 10.0, [] {
        return from_reports({suite_series(8)});
    });

    criterion(10, "primitive projector on the criterion-5 graphs", 60.0, [] {
        return from_reports({suite_projector(4)});
    });

    criterion(11, "interchange law on 50 seeded words of length 3-5", 120.0, [] {
        return from_reports({suite_interchange(50, 0)});
    });

    criterion(12, "lie_class commutes with the differentials (n<=5, e<=7)", 120.0, [] {
        return from_reports({suite_lie(5, 7)});
    });

    std::cout << (12 - failures) << " of 12 criteria pass" << std::endl;
    return failures ? 1 : 0;
}
