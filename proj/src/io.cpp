#include "gcx/io.hpp"

#include "gcx/error.hpp"

namespace gcx {

static void require(bool cond, const std::string& what)
{
    if (!cond)
        throw Error(ErrorCode::Parse, what);
}

static std::vector<std::pair<int, int>> int_pairs(const Json& j, const std::string& field)
{
    require(j.is_array(), field + " must be an array");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        require(e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer(),
                field + " entries must be [a,b] integer pairs");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

static Rational coeff_of(const Json& j)
{
    if (!j.contains("coeff"))
        return Rational(1);
    const Json& c = j["coeff"];
    if (c.is_number_integer())
        return Rational(c.get<long>());
    require(c.is_string(), "coeff must be a \"p/q\" string");
    return parse_rational(c.get<std::string>());
}

Json to_json(const Graph& g)
{
    Json e = Json::array();
    for (auto [a, b] : g.edges)
        e.push_back({a, b});
    return Json{{"n", g.n}, {"edges", e}};
}

static GraphComb record_to_comb(const Json& j)
{
    require(j.is_object() && j.contains("n") && j["n"].is_number_integer() && j.contains("edges"),
            "graph record needs \"n\" and \"edges\"");
    return canonicalize(OrientedEdgeList{j["n"].get<int>(), int_pairs(j["edges"], "edges")});
}

GraphComb graph_comb_from_json(const Json& j)
{
    if (j.is_object())
        return record_to_comb(j);
    require(j.is_array(), "expected a graph record or an array of terms");
    GraphComb out;
    for (const auto& t : j) {
        require(t.is_object() && t.contains("graph"), "term needs \"graph\"");
        out.add_scaled(record_to_comb(t["graph"]), coeff_of(t));
    }
    return out;
}

Graph graph_from_json(const Json& j)
{
    GraphComb x = record_to_comb(j);
    require(x.size() == 1, "graph record is zero (it has a loop)");
    return x.begin()->first;
}

Json to_json(const GraphComb& x)
{
    Json a = Json::array();
    for (const auto& [g, c] : x)
        a.push_back(Json{{"coeff", to_string(c)}, {"graph", to_json(g)}});
    return a;
}

Json to_json(const ClassComb& x)
{
    Json a = Json::array();
    for (const auto& [g, c] : x)
        a.push_back(Json{{"coeff", to_string(c)}, {"graph", to_json(g.rep)}});
    return a;
}

static Json pairs_json(const std::vector<Chord>& pairs)
{
    Json p = Json::array();
    for (auto [a, b] : pairs)
        p.push_back({a, b});
    return p;
}

Json to_json(const PackagedDiagram& d)
{
    return Json{{"shape", d.shape}, {"pairs", pairs_json(d.diagram.pairs)}};
}

Json to_json(const PackagedComb& x)
{
    Json a = Json::array();
    for (const auto& [d, c] : x)
        a.push_back(Json{{"coeff", to_string(c)}, {"diagram", to_json(d)}});
    return a;
}

Json to_json(const MonomialComb& x, const Shape& shape)
{
    Json a = Json::array();
    for (const auto& [m, c] : x)
        a.push_back(Json{{"coeff", to_string(c)}, {"monomial", Json{{"shape", shape}, {"pairs", pairs_json(m.factors)}}}});
    return a;
}

std::pair<PairMonomial, Shape> monomial_from_json(const Json& j)
{
    require(j.is_object() && j.contains("pairs"), "diagram record needs \"pairs\"");
    PairMonomial m{int_pairs(j["pairs"], "pairs")};
    Shape shape;
    if (j.contains("shape")) {
        require(j["shape"].is_array(), "shape must be an array");
        for (const auto& k : j["shape"]) {
            require(k.is_number_integer(), "shape entries must be integers");
            shape.push_back(k.get<int>());
        }
    } else {
        shape.push_back(2 * static_cast<int>(m.factors.size()));
    }
    return {m, shape};
}

PackagedDiagram packaged_from_json(const Json& j)
{
    auto [m, shape] = monomial_from_json(j);
    auto [d, s] = normalize_chords(m.factors);
    PackagedComb pc = package(d, shape);
    require(pc.size() == 1, "diagram has a chord inside a package");
    (void)s;
    return pc.begin()->first;
}

Json to_json(const TensorWord& w)
{
    Json a = Json::array();
    for (const auto& m : w)
        a.push_back(to_string(m));
    return a;
}

Json to_json(const WordComb& x)
{
    Json a = Json::array();
    for (const auto& [w, c] : x)
        a.push_back(Json{{"coeff", to_string(c)}, {"word", to_json(w)}});
    return a;
}

TensorWord word_from_json(const Json& j)
{
    require(j.is_array(), "word must be an array of monomial strings");
    TensorWord w;
    for (const auto& f : j) {
        require(f.is_string(), "word factors must be strings");
        w.push_back(parse_monomial(f.get<std::string>()));
    }
    return w;
}

WordComb word_comb_from_json(const Json& j)
{
    if (j.is_array() && (j.empty() || j[0].is_string()))
        return WordComb::single(word_from_json(j));
    require(j.is_array(), "expected a word or an array of terms");
    WordComb out;
    for (const auto& t : j) {
        require(t.is_object() && t.contains("word"), "term needs \"word\"");
        out.add(word_from_json(t["word"]), coeff_of(t));
    }
    return out;
}

Json to_json(const GraphTensor& t)
{
    Json a = Json::array();
    for (const auto& [lr, c] : t)
        a.push_back(Json{{"coeff", to_string(c)}, {"left", to_json(lr.first)}, {"right", to_json(lr.second)}});
    return a;
}

} // namespace gcx
