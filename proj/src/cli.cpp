#include "gcx/cli.hpp"

#include "gcx/bialgebra.hpp"
#include "gcx/error.hpp"
#include "gcx/homotopy.hpp"
#include "gcx/io.hpp"
#include "gcx/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace gcx {

namespace {

struct RunConfig {
    int vertices = 0;
    int edges = 0;
    int min_valence = 0;
    bool connected = false;
    bool lie = false;
    bool polygons = false;
    std::string suite;
    std::uint64_t seed = 0;
    std::string input;
    std::string output;
    int max_n = 0;
    int degree = 0;
    std::string from, to;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_input(const RunConfig& c)
{
    if (c.input.empty())
        throw UsageError("--input is required");
    std::stringstream buf;
    if (c.input == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(c.input);
        if (!f)
            throw UsageError("--input: cannot open '" + c.input + "'");
        buf << f.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("--input: ") + e.what());
    }
}

bool is_word_json(const Json& j) { return j.is_array() && (j.empty() || j[0].is_string()); }
bool is_word_comb_json(const Json& j) { return j.is_array() && !j.empty() && j[0].is_object() && j[0].contains("word"); }
bool is_diagram_json(const Json& j) { return j.is_object() && j.contains("pairs"); }

// ---- conversion chain: word <-> monomial <-> diagram <-> graph

using MonoKey = std::pair<Shape, PairMonomial>;
using MonoComb = LinComb<MonoKey>;

enum class Stage { Word, Monomial, Diagram, Graph };

Stage stage_of(const std::string& s)
{
    if (s == "word") return Stage::Word;
    if (s == "monomial") return Stage::Monomial;
    if (s == "diagram") return Stage::Diagram;
    if (s == "graph") return Stage::Graph;
    throw Error(ErrorCode::NoSuchRoute, "unknown stage '" + s + "'");
}

struct Payload {
    Stage stage;
    WordComb word;
    MonoComb mono;
    PackagedComb diagram;
    GraphComb graph;
};

Payload load(Stage s, const Json& j)
{
    Payload p{s, {}, {}, {}, {}};
    switch (s) {
    case Stage::Word:
        p.word = word_comb_from_json(j);
        break;
    case Stage::Monomial: {
        auto [m, shape] = monomial_from_json(j);
        check_shape(shape, 2 * static_cast<int>(m.factors.size()));
        p.mono.add({shape, m}, Rational(1)); // kept as written: split_S reads it literally
        break;
    }
    case Stage::Diagram: {
        auto [m, shape] = monomial_from_json(j);
        auto [d, sign] = normalize_chords(m.factors);
        p.diagram.add_scaled(package(d, shape), Rational(sign));
        break;
    }
    case Stage::Graph:
        p.graph = graph_comb_from_json(j);
        break;
    }
    return p;
}

Json dump(const Payload& p)
{
    switch (p.stage) {
    case Stage::Word: return to_json(p.word);
    case Stage::Monomial: {
        Json a = Json::array();
        for (const auto& [k, c] : p.mono) {
            Json pairs = Json::array();
            for (auto [x, y] : k.second.factors)
                pairs.push_back({x, y});
            a.push_back(Json{{"coeff", to_string(c)}, {"monomial", Json{{"shape", k.first}, {"pairs", pairs}}}});
        }
        return a;
    }
    case Stage::Diagram: return to_json(p.diagram);
    case Stage::Graph: return to_json(p.graph);
    }
    return {};
}

void step(Payload& p, Stage target)
{
    int from = static_cast<int>(p.stage), to = static_cast<int>(target);
    Stage next = static_cast<Stage>(from + (to > from ? 1 : -1));
    switch (p.stage) {
    case Stage::Word:
        for (const auto& [w, c] : p.word) {
            GeneratorWord g = flatten(w);
            for (const auto& [m, k] : tstar(g))
                p.mono.add({g.shape, m}, Rational(c * k));
        }
        break;
    case Stage::Monomial:
        if (next == Stage::Diagram) {
            for (const auto& [key, c] : p.mono) {
                auto [sm, sign] = standardize(key.second);
                p.diagram.add_scaled(package(phi(sm), key.first), Rational(c * sign));
            }
        } else {
            for (const auto& [key, c] : p.mono)
                p.word.add(to_tensor_word(split_S(key.second, key.first)), c);
        }
        break;
    case Stage::Diagram:
        if (next == Stage::Graph) {
            p.graph = varphi(p.diagram);
        } else {
            for (const auto& [pd, c] : p.diagram)
                p.mono.add({pd.shape, phi_inverse(pd.diagram)}, c);
        }
        break;
    case Stage::Graph:
        for (const auto& [g, c] : p.graph)
            p.diagram.add(varphi_inverse(g), c);
        break;
    }
    p.stage = next;
}

Json convert(const std::string& from, const std::string& to, const Json& in)
{
    Stage a = stage_of(from), b = stage_of(to);
    if (a == b)
        throw Error(ErrorCode::NoSuchRoute, from + " -> " + to);
    Payload p = load(a, in);
    while (p.stage != b)
        step(p, b);
    return dump(p);
}

// ---- commands

Json cmd_enumerate(const RunConfig& c)
{
    if (c.vertices < 0 || c.edges < 0)
        throw UsageError("--vertices/--edges must be nonnegative");
    auto gs = enumerate(c.vertices, c.edges, c.min_valence, c.connected);
    Json a = Json::array();
    if (c.lie) {
        std::set<Graph> reps;
        for (const auto& g : gs)
            for (const auto& [cl, k] : lie_class(g))
                reps.insert(cl.rep);
        for (const auto& g : reps)
            a.push_back(to_json(g));
    } else {
        for (const auto& g : gs)
            a.push_back(to_json(g));
    }
    return a;
}

Json cmd_diff(const RunConfig& c)
{
    Json in = read_input(c);
    if (is_word_json(in) || is_word_comb_json(in))
        return to_json(leibniz_differential(word_comb_from_json(in)));
    if (is_diagram_json(in))
        return to_json(diagram_differential(PackagedComb::single(packaged_from_json(in))));
    GraphComb x = graph_comb_from_json(in);
    if (c.lie)
        return to_json(lie_differential(lie_class(x)));
    return to_json(differential(x));
}

Json cmd_coproduct(const RunConfig& c)
{
    return to_json(cohalf_shuffle(graph_comb_from_json(read_input(c))));
}

Json cmd_product(const RunConfig& c)
{
    Json in = read_input(c);
    if (!in.is_array() || in.empty())
        throw Error(ErrorCode::Parse, "product expects a nonempty array of graphs or of words");
    if (is_word_json(in[0])) {
        TensorWord w;
        for (const auto& j : in)
            w = matrix_sum_product(w, word_from_json(j));
        return to_json(w);
    }
    GraphComb x = GraphComb::single(Graph{});
    for (const auto& j : in)
        x = product(x, graph_comb_from_json(j));
    return to_json(x);
}

template <class B>
void print_homology(std::ostream& out, const ChainComplexSlice<B>& s)
{
    auto dims = homology_dims(s);
    for (const auto& [k, h] : dims)
        out << "degree " << k << ": basis " << s.basis[s.index(k)].size() << ", homology " << h.dim
            << (h.reliable ? " (reliable)" : " (unreliable)") << "\n";
}

int cmd_homology(const RunConfig& c, std::ostream& out)
{
    if (c.polygons) {
        int n = c.max_n ? c.max_n : 7;
        if (n < 3)
            throw UsageError("--max-n must be at least 3");
        out << "polygon complex, degrees 1.." << n << "\n";
        print_homology(out, polygon_complex(n));
        return 0;
    }
    if (c.vertices < 1 || c.edges < 1)
        throw UsageError("--vertices and --edges are required without --polygons");
    out << "core complex (connected, valence >= 3), degrees 1.." << c.vertices + 1 << ", excess <= "
        << c.edges - c.vertices << "\n";
    print_homology(out, reduced_core_complex(c.vertices, c.edges));
    return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out)
{
    int nv = c.vertices ? c.vertices : 5;
    int ne = c.edges ? c.edges : 7;
    std::vector<SuiteReport> reps;
    if (c.suite == "d2") {
        reps.push_back(suite_d2(nv, ne));
        reps.push_back(suite_diagram_d2(c.max_n ? c.max_n : 4));
        reps.push_back(suite_word_d2(c.degree ? c.degree : 100, c.seed));
    } else if (c.suite == "homotopy") {
        reps.push_back(suite_homotopy(nv, ne, true));
    } else if (c.suite == "bialgebra") {
        int k = c.max_n ? c.max_n : 4;
        reps.push_back(suite_zinbiel(k));
        reps.push_back(suite_compatibility(k));
        reps.push_back(suite_projector(k));
        reps.push_back(suite_derivation(k));
        reps.push_back(suite_free_zinbiel(6));
    } else if (c.suite == "series") {
        reps.push_back(suite_series(c.degree ? c.degree : 8));
    } else if (c.suite == "interchange") {
        reps.push_back(suite_interchange(c.degree ? c.degree : 50, c.seed));
    } else if (c.suite == "commute") {
        reps.push_back(suite_commute(c.vertices ? c.vertices : 4, c.edges ? c.edges : 6, 50, c.seed));
        reps.push_back(suite_diagram_square(c.max_n ? c.max_n : 4));
    } else if (c.suite == "lie-diagram") {
        reps.push_back(suite_lie(nv, ne));
    } else {
        throw UsageError("--suite: unknown suite '" + c.suite + "'");
    }
    bool ok = true;
    for (const auto& r : reps) {
        out << r.header() << "\n";
        for (const auto& l : r.lines)
            out << l << "\n";
        out << r.name << ": " << r.summary() << "\n";
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"graph complex engine"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* s) {
        s->add_option("--input", c.input, "input JSON file, - for stdin");
        s->add_option("--output", c.output, "write the result here instead of stdout");
    };
    auto* en = app.add_subcommand("enumerate", "list canonical graphs");
    en->add_option("--vertices", c.vertices)->required()->check(CLI::NonNegativeNumber);
    en->add_option("--edges", c.edges, "maximal edge count")->required()->check(CLI::NonNegativeNumber);
    en->add_option("--min-valence", c.min_valence)->check(CLI::NonNegativeNumber);
    en->add_flag("--connected", c.connected);
    en->add_flag("--lie", c.lie, "one representative per nonzero class");
    en->add_option("--output", c.output);

    auto* df = app.add_subcommand("diff", "differential of a graph, diagram or word combination");
    add_common(df);
    df->add_flag("--lie", c.lie);

    auto* cp = app.add_subcommand("coproduct", "co-half shuffle of a graph combination");
    add_common(cp);

    auto* pr = app.add_subcommand("product", "ordered union of graphs, or matrix-sum product of words");
    add_common(pr);

    auto* cv = app.add_subcommand("convert", "move along word / monomial / diagram / graph");
    add_common(cv);
    cv->add_option("--from", c.from)->required();
    cv->add_option("--to", c.to)->required();

    auto* ho = app.add_subcommand("homology", "homology dimensions of a truncated complex");
    ho->add_flag("--polygons", c.polygons);
    ho->add_option("--max-n", c.max_n)->check(CLI::NonNegativeNumber);
    ho->add_option("--vertices", c.vertices)->check(CLI::NonNegativeNumber);
    ho->add_option("--edges", c.edges)->check(CLI::NonNegativeNumber);
    ho->add_option("--min-valence", c.min_valence)->check(CLI::NonNegativeNumber);
    ho->add_flag("--connected", c.connected);
    ho->add_option("--output", c.output);

    auto* ve = app.add_subcommand("verify", "run a verification suite");
    ve->add_option("--suite", c.suite)
        ->required()
        ->check(CLI::IsMember({"d2", "homotopy", "bialgebra", "series", "interchange", "commute", "lie-diagram"}));
    ve->add_option("--vertices", c.vertices)->check(CLI::NonNegativeNumber);
    ve->add_option("--edges", c.edges)->check(CLI::NonNegativeNumber);
    ve->add_option("--seed", c.seed);
    ve->add_option("--max-n", c.max_n)->check(CLI::NonNegativeNumber);
    ve->add_option("--degree", c.degree)->check(CLI::NonNegativeNumber);
    ve->add_option("--output", c.output);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    std::ostringstream buf;
    int status = 0;
    try {
        if (*en)
            buf << cmd_enumerate(c).dump() << "\n";
        else if (*df)
            buf << cmd_diff(c).dump() << "\n";
        else if (*cp)
            buf << cmd_coproduct(c).dump() << "\n";
        else if (*pr)
            buf << cmd_product(c).dump() << "\n";
        else if (*cv)
            buf << convert(c.from, c.to, read_input(c)).dump() << "\n";
        else if (*ho)
            status = cmd_homology(c, buf);
        else if (*ve)
            status = cmd_verify(c, buf);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        bool usage = e.code() == ErrorCode::Parse || e.code() == ErrorCode::NoSuchRoute;
        return usage ? 2 : 1;
    }
    if (c.output.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(c.output);
        if (!f) {
            err << "usage error: --output: cannot write '" << c.output << "'\n";
            return 2;
        }
        f << buf.str();
    }
    return status;
}

} // namespace gcx
