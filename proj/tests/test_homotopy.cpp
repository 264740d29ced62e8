#include <doctest.h>

#include "gcx/error.hpp"
#include "gcx/homotopy.hpp"

using namespace gcx;

namespace {

Graph G(int n, std::vector<Edge> e) { return make_graph(n, std::move(e)); }

const Graph doubled_triangle = G(3, {{1, 2}, {1, 2}, {1, 3}, {2, 3}});

} // namespace

TEST_CASE("classification")
{
    CHECK(classify(G(3, {{1, 2}, {1, 3}, {2, 3}})) == GraphKind::Polygon);
    CHECK(classify(G(2, {{1, 2}, {1, 2}})) == GraphKind::Polygon);
    CHECK(classify(G(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})) == GraphKind::Core);
    CHECK(classify(G(2, {{1, 2}, {1, 2}, {1, 2}})) == GraphKind::Core);
    CHECK(classify(doubled_triangle) == GraphKind::Mixed);
    CHECK(classify(G(3, {{1, 2}, {2, 3}})) == GraphKind::LowValence);
    CHECK(classify(G(4, {{1, 2}, {1, 2}, {3, 4}, {3, 4}})) == GraphKind::Disconnected);
    // block-connected but two topological pieces
    CHECK(classify(G(4, {{1, 3}, {1, 3}, {2, 4}, {2, 4}})) == GraphKind::Disconnected);
    CHECK(std::string(kind_name(GraphKind::Mixed)) == "Mixed");
}

TEST_CASE("ladders of the doubled triangle")
{
    auto d = ladders(doubled_triangle);
    REQUIRE(d.ladders.size() == 1);
    CHECK(d.ladders[0].low_anchor == 1);
    CHECK(d.ladders[0].high_anchor == 2);
    CHECK(d.ladders[0].interior == std::vector<int>{3});
    CHECK(d.ladders[0].edge_slots.size() == 2);
    try {
        ladders(G(3, {{1, 2}, {1, 3}, {2, 3}}));
        FAIL("polygon accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMixed);
    }
}

TEST_CASE("ladders: every bivalent vertex lies on exactly one ladder")
{
    for (const Graph& g : mixed_graphs(5, 7)) {
        auto d = ladders(g);
        auto val = g.valences();
        std::vector<int> seen(static_cast<std::size_t>(g.n) + 1, 0);
        std::size_t slots = 0;
        for (const auto& l : d.ladders) {
            CHECK(val[l.low_anchor - 1] >= 3);
            CHECK(val[l.high_anchor - 1] >= 3);
            CHECK(l.edge_slots.size() == l.interior.size() + 1);
            slots += l.edge_slots.size();
            for (int v : l.interior)
                ++seen[v];
        }
        CHECK(slots <= g.edge_count());
        for (int v = 1; v <= g.n; ++v)
            CHECK(seen[v] == (val[v - 1] == 2 ? 1 : 0));
    }
}

TEST_CASE("ladder extension subdivides the last edge")
{
    // ladder 1 - 3 - 2: the last edge {3,2} becomes {3,4},{2,4}
    CHECK(ladder_extension(doubled_triangle, 0) ==
          GraphComb::single(G(4, {{1, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}})));
    CHECK_THROWS(ladder_extension(doubled_triangle, 1));
}

TEST_CASE("mixed quotient differential squares to zero")
{
    for (const Graph& g : mixed_graphs(5, 7))
        CHECK(mixed_differential(mixed_differential(GraphComb::single(g))).empty());
}

TEST_CASE("the homotopy identity holds below excess 2 and for up to 4 vertices")
{
    MixedHomotopy hom(true);
    std::vector<Graph> gs;
    for (const Graph& g : mixed_graphs(5, 7))
        if (g.n <= 4 || static_cast<int>(g.edge_count()) - g.n <= 1)
            gs.push_back(g);
    REQUIRE(gs.size() > 100);
    for (const auto& line : verify_homotopy(gs, [&](const GraphComb& x) { return hom(x); }))
        CHECK_MESSAGE(line.ok, to_string(line.graph));
    CHECK(hom.unsolved() == 0);
}

TEST_CASE("h lands in one vertex more and respects excess")
{
    MixedHomotopy hom;
    for (const Graph& g : mixed_graphs(4, 6))
        for (const auto& [x, c] : hom.apply(g)) {
            CHECK(x.n == g.n + 1);
            CHECK(x.edge_count() == g.edge_count() + 1);
            CHECK(classify(x) == GraphKind::Mixed);
        }
    CHECK(h(doubled_triangle) == GraphComb::single(G(4, {{1, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}), Rational(-1)));
}

TEST_CASE("the excess-2 mixed quotient has homology in degree 5")
{
    auto c = mixed_quotient_complex(2, 6);
    CHECK(c.basis[2].size() == 9);
    CHECK(c.basis[3].size() == 142);
    CHECK(c.basis[4].size() == 1900);
    auto hd = homology_dims(c);
    CHECK(hd.at(3).dim == 0);
    CHECK(hd.at(4).dim == 0);
    CHECK(hd.at(5).dim == 4);
    CHECK(hd.at(5).reliable);

    // so no contraction can exist there
    MixedHomotopy strict(true);
    bool threw = false;
    try {
        for (const Graph& g : mixed_graphs(5, 7))
            strict.apply(g);
    } catch (const Error& e) {
        threw = e.code() == ErrorCode::NotABoundary;
    }
    CHECK(threw);
}

TEST_CASE("the excess-1 mixed quotient is acyclic through degree 5")
{
    auto hd = homology_dims(mixed_quotient_complex(1, 6));
    for (int k = 2; k <= 5; ++k) {
        CHECK(hd.at(k).dim == 0);
        CHECK(hd.at(k).reliable);
    }
}

TEST_CASE("the explicit ladder formula is not a contraction")
{
    bool any_bad = false;
    for (const auto& line : verify_homotopy(mixed_graphs(4, 5), ladder_homotopy))
        any_bad |= !line.ok;
    CHECK(any_bad);
}

TEST_CASE("polygon complex")
{
    auto p = polygon_complex(6);
    CHECK(p.basis[0].empty());
    CHECK(p.basis[1] == std::vector<Graph>{G(2, {{1, 2}, {1, 2}})});
    CHECK(p.basis[2].size() == 1);  // one labelled triangle
    CHECK(p.basis[3].size() == 3);  // 4!/8
    CHECK(p.basis[4].size() == 12); // 5!/10
    for (const auto& [k, h] : homology_dims(p))
        if (h.reliable)
            CHECK(h.dim == 0);
}

TEST_CASE("reduced core complex")
{
    auto c = reduced_core_complex(4, 6);
    for (const auto& row : c.basis)
        for (const Graph& g : row)
            CHECK(classify(g) == GraphKind::Core);
    auto hd = homology_dims(c);
    CHECK(hd.at(2).dim == 1);
    CHECK(hd.at(3).dim == 0);
    CHECK(hd.at(4).dim == 5);
    CHECK_THROWS_AS(homology_dim(c, 9), Error);
}
