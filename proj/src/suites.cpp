#include "gcx/suites.hpp"

#include "gcx/bialgebra.hpp"
#include "gcx/diagram.hpp"
#include "gcx/free_algebra.hpp"
#include "gcx/homotopy.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace gcx {

std::string SuiteReport::header() const
{
    return "suite " + name + " seed " + std::to_string(seed);
}

std::string SuiteReport::summary() const
{
    if (ok())
        return "all " + std::to_string(checked) + " " + unit + " pass";
    return std::to_string(failed) + " of " + std::to_string(checked) + " " + unit + " FAIL";
}

int WordSampler::uniform(int lo, int hi)
{
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

TensorWord WordSampler::word(int factors, int min_deg, int max_deg, int m)
{
    TensorWord w;
    for (int f = 0; f < factors; ++f) {
        int d = uniform(min_deg, max_deg);
        std::vector<Generator> g;
        for (int k = 0; k < d; ++k)
            g.push_back(Generator{uniform(0, 1) ? Kind::Q : Kind::P, uniform(1, m)});
        w.push_back(Monomial::of(std::move(g)));
    }
    return w;
}

TensorWord WordSampler::even_word(int factors, int min_deg, int max_deg, int m)
{
    for (;;) {
        TensorWord w = word(factors, min_deg, max_deg, m);
        int total = 0;
        for (const auto& f : w)
            total += f.degree();
        if (total % 2 == 0)
            return w;
    }
}

template <class T>
static std::string show_comb(const LinComb<T>& x, const std::function<std::string(const T&)>& f)
{
    if (x.empty())
        return "0";
    std::string s;
    for (const auto& [b, c] : x)
        s += (s.empty() ? "" : " + ") + to_string(c) + "*" + f(b);
    return s;
}

static std::string show(const GraphComb& x)
{
    return show_comb<Graph>(x, [](const Graph& g) { return to_string(g); });
}

static std::set<PackagedDiagram> packaged_basis(int m)
{
    std::set<PackagedDiagram> out;
    for (const auto& shape : all_shapes(2 * m))
        for (const auto& d : all_diagrams(m))
            for (const auto& [pd, c] : package(d, shape))
                out.insert(pd);
    return out;
}

static void record(SuiteReport& r, bool ok, const std::string& what)
{
    ++r.checked;
    if (!ok) {
        ++r.failed;
        r.lines.push_back("FAIL " + what);
    }
}

SuiteReport suite_d2(int max_n, int max_e)
{
    SuiteReport r("d2");
    r.unit = "graphs";
    for (int n = 1; n <= max_n; ++n)
        for (const auto& g : enumerate(n, max_e, 0, false)) {
            GraphComb dd = differential(differential(GraphComb::single(g)));
            record(r, dd.empty(), to_string(g) + " -> " + show(dd));
        }
    return r;
}

SuiteReport suite_diagram_d2(int max_m)
{
    SuiteReport r("diagram-d2");
    for (int m = 1; m <= max_m; ++m)
        for (const auto& pd : packaged_basis(m)) {
            auto dd = diagram_differential(diagram_differential(PackagedComb::single(pd)));
            record(r, dd.empty(), to_string(varphi(pd)));
        }
    return r;
}

SuiteReport suite_word_d2(int count, std::uint64_t seed)
{
    SuiteReport r("word-d2", seed);
    WordSampler s(seed);
    for (int i = 0; i < count; ++i) {
        TensorWord w = s.word(s.uniform(3, 4), 2, 3, 3);
        WordComb dd = leibniz_differential(leibniz_differential(w));
        record(r, dd.empty(), to_string(w));
    }
    return r;
}

SuiteReport suite_homotopy(int max_n, int max_e, bool verbose)
{
    SuiteReport r("homotopy");
    MixedHomotopy hom;
    for (const auto& line : verify_homotopy(mixed_graphs(max_n, max_e), [&](const GraphComb& x) { return hom(x); })) {
        record(r, line.ok, to_string(line.graph) + " defect " + show(line.defect));
        if (verbose && line.ok)
            r.lines.push_back("OK " + to_string(line.graph));
    }
    return r;
}

SuiteReport suite_ladder_formula(int max_n, int max_e)
{
    SuiteReport r("ladder-formula");
    for (const auto& line : verify_homotopy(mixed_graphs(max_n, max_e), ladder_homotopy))
        record(r, line.ok, to_string(line.graph) + " defect " + show(line.defect));
    return r;
}

std::vector<Graph> bialgebra_letters(int max_edges)
{
    std::vector<Graph> out;
    for (int n = 1; n <= 3; ++n)
        for (auto& g : enumerate(n, max_edges, 0, false))
            if (is_connected(g))
                out.push_back(std::move(g));
    return out;
}

std::vector<Graph> bialgebra_graphs(int max_components, int max_edges)
{
    auto letters = bialgebra_letters(max_edges);
    std::vector<Graph> out, layer{Graph{}};
    for (int k = 1; k <= max_components; ++k) {
        std::vector<Graph> next;
        for (const auto& g : layer)
            for (const auto& l : letters)
                next.push_back(disjoint_union(g, l));
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

SuiteReport suite_zinbiel(int max_components)
{
    SuiteReport r("zinbiel-coalgebra");
    for (const auto& g : bialgebra_graphs(max_components))
        record(r, check_zinbiel_coalgebra(g).ok, to_string(g));
    return r;
}

SuiteReport suite_compatibility(int max_components)
{
    SuiteReport r("compatibility");
    std::vector<Graph> gs{Graph{}};
    for (auto& g : bialgebra_graphs(max_components))
        gs.push_back(std::move(g));
    for (const auto& a : gs)
        for (const auto& b : gs)
            if (connected_components(a).size() + connected_components(b).size() <= 4)
                record(r, check_compatibility(a, b).ok, to_string(a) + " , " + to_string(b));
    return r;
}

SuiteReport suite_projector(int max_components)
{
    SuiteReport r("projector");
    for (const auto& g : bialgebra_graphs(max_components)) {
        GraphComb x = GraphComb::single(g);
        GraphComb e = primitive_projector(x);
        bool expect = is_connected(g) ? e == x : e.empty();
        record(r, expect && primitive_projector(e) == e, to_string(g) + " -> " + show(e));
    }
    return r;
}

SuiteReport suite_derivation(int max_components)
{
    SuiteReport r("derivation");
    auto gs = bialgebra_graphs(max_components);
    for (const auto& a : gs)
        for (const auto& b : gs)
            if (connected_components(a).size() + connected_components(b).size() <= static_cast<std::size_t>(max_components))
                record(r, derivation_defect(a, b).empty(), to_string(a) + " , " + to_string(b));
    return r;
}

SuiteReport suite_series(int degree)
{
    SuiteReport r("series");
    MagSeries f = series_f(degree), g = series_g(degree), t = identity_series(degree);
    record(r, mag_compose(f, g, degree) == t, "f∘g = t");
    record(r, mag_compose(g, f, degree) == t, "g∘f = t");
    return r;
}

SuiteReport suite_free_zinbiel(int max_len)
{
    SuiteReport r("free-zinbiel");
    std::vector<Word> words;
    std::function<void(Word)> gen = [&](Word w) {
        if (!w.empty())
            words.push_back(w);
        if (static_cast<int>(w.size()) == max_len - 2)
            return;
        for (char c : std::string("abc"))
            gen(w + c);
    };
    gen("");
    for (const auto& x : words)
        for (const auto& y : words)
            for (const auto& z : words)
                if (static_cast<int>(x.size() + y.size() + z.size()) <= max_len)
                    record(r, zinbiel_defect(x, y, z).empty(), x + "," + y + "," + z);
    return r;
}

SuiteReport suite_interchange(int count, std::uint64_t seed)
{
    SuiteReport r("interchange", seed);
    WordSampler s(seed);
    for (int i = 0; i < count; ++i) {
        int len = s.uniform(3, 5);
        TensorWord w = s.word(len, 2, 3, 3);
        for (int p = 0; p < len; ++p) {
            int q = len - 1 - p;
            record(r, check_interchange(w, p, q).ok,
                   to_string(w) + " p=" + std::to_string(p) + " q=" + std::to_string(q));
        }
    }
    return r;
}

SuiteReport suite_commute(int max_n, int max_e, int random, std::uint64_t seed)
{
    SuiteReport r("commute", seed);
    auto check = [&](const TensorWord& w) {
        GraphComb lhs = word_to_graphs(leibniz_differential(w));
        GraphComb rhs = differential(word_to_graphs(w));
        record(r, lhs == rhs, to_string(w) + ": " + show(lhs) + " vs " + show(rhs));
    };
    for (int n = 1; n <= max_n; ++n)
        for (const auto& g : enumerate(n, max_e, 2, false))
            check(graph_to_word(g));
    WordSampler s(seed);
    for (int i = 0; i < random; ++i)
        check(s.even_word(s.uniform(2, 4), 2, 3, 3));
    return r;
}

SuiteReport suite_diagram_square(int max_m)
{
    SuiteReport r("diagram-square");
    for (int m = 1; m <= max_m; ++m)
        for (const auto& pd : packaged_basis(m)) {
            GraphComb lhs = varphi(diagram_differential(pd));
            GraphComb rhs = differential(GraphComb::single(varphi(pd)));
            record(r, lhs == rhs, to_string(varphi(pd)));
        }
    return r;
}

SuiteReport suite_lie(int max_n, int max_e)
{
    SuiteReport r("lie-diagram");
    for (int n = 1; n <= max_n; ++n)
        for (const auto& g : enumerate(n, max_e, 0, false)) {
            ClassComb lhs = lie_class(differential(g));
            ClassComb rhs = lie_differential(lie_class(g));
            record(r, lhs == rhs, to_string(g));
            record(r, lie_differential(rhs).empty(), to_string(g) + " (square)");
        }
    return r;
}

} // namespace gcx
