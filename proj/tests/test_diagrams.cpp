#include <doctest.h>

#include "gcx/diagram.hpp"
#include "gcx/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

using namespace gcx;

namespace {

ChordDiagram D(std::vector<Chord> c) { return normalize_chords(std::move(c)).first; }

// Every permutation of the slots that only moves slots inside their package.
std::vector<Perm> package_perms(const Shape& shape)
{
    std::vector<Perm> out{Perm{}};
    int off = 0;
    for (int k : shape) {
        Perm block(static_cast<std::size_t>(k));
        std::iota(block.begin(), block.end(), off + 1);
        std::vector<Perm> next;
        do
            for (const Perm& p : out) {
                Perm q = p;
                q.insert(q.end(), block.begin(), block.end());
                next.push_back(q);
            }
        while (std::next_permutation(block.begin(), block.end()));
        out = std::move(next);
        off += k;
    }
    return out;
}

// Smallest orbit element with its sign, or nothing if the orbit meets its
// own negative or a chord sits in one package.
std::optional<std::pair<ChordDiagram, int>> brute_package(const ChordDiagram& d, const Shape& shape)
{
    auto pkg = package_of(shape);
    for (auto [a, b] : d.pairs)
        if (pkg[a] == pkg[b])
            return std::nullopt;
    std::map<ChordDiagram, int> orbit;
    for (const Perm& p : package_perms(shape)) {
        auto r = sigma_act_diagram(p, d);
        auto [nd, c] = *r.begin();
        int s = c > 0 ? 1 : -1;
        auto [it, fresh] = orbit.emplace(nd, s);
        if (!fresh && it->second != s)
            return std::nullopt;
    }
    return *orbit.begin();
}

std::vector<PackagedDiagram> packaged(int m)
{
    std::set<PackagedDiagram> out;
    for (const auto& d : all_diagrams(m))
        for (const auto& s : all_shapes(2 * m))
            for (const auto& [pd, c] : package(d, s))
                out.insert(pd);
    return {out.begin(), out.end()};
}

} // namespace

TEST_CASE("standardizing monomials")
{
    // y_{86} = -y_{68}
    auto [m, s] = standardize(PairMonomial{{{1, 4}, {2, 7}, {3, 5}, {8, 6}}});
    CHECK(s == -1);
    CHECK(m == PairMonomial{{{1, 4}, {2, 7}, {3, 5}, {6, 8}}});
    auto [m2, s2] = standardize(PairMonomial{{{3, 5}, {2, 1}, {4, 6}}});
    CHECK(s2 == -1);
    CHECK(m2 == PairMonomial{{{1, 2}, {3, 5}, {4, 6}}});
    CHECK_THROWS_AS(standardize(PairMonomial{{{1, 2}, {2, 3}}}), Error);
    CHECK_THROWS_AS(standardize(PairMonomial{{{1, 5}, {2, 3}}}), Error);
}

TEST_CASE("phi is a bijection between standard monomials and diagrams")
{
    for (int m = 1; m <= 4; ++m) {
        std::set<ChordDiagram> seen;
        for (const auto& d : all_diagrams(m)) {
            auto mono = phi_inverse(d);
            CHECK(standardize(mono).second == 1);
            CHECK(phi(mono) == d);
            seen.insert(d);
        }
        // (2m-1)!!
        std::size_t dfact = 1;
        for (int k = 2 * m - 1; k > 1; k -= 2)
            dfact *= static_cast<std::size_t>(k);
        CHECK(seen.size() == dfact);
    }
}

TEST_CASE("phi intertwines the symmetric group actions")
{
    std::vector<Perm> perms;
    Perm p{1, 2, 3, 4, 5, 6};
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (const auto& d : all_diagrams(3))
        for (const Perm& s : perms) {
            auto lhs = sigma_act_diagram(s, d);
            auto rhs = sigma_act_monomial(s, phi_inverse(d));
            REQUIRE(lhs.size() == 1);
            REQUIRE(rhs.size() == 1);
            CHECK(phi(rhs.begin()->first) == lhs.begin()->first);
            CHECK(rhs.begin()->second == lhs.begin()->second);
        }
}

TEST_CASE("sigma acts through the inverse")
{
    // sigma = (1 2 3) as 1->2->3->1, so sigma^-1 sends 2 to 1
    Perm s{2, 3, 1, 4};
    auto r = sigma_act_diagram(s, D({{2, 4}, {1, 3}}));
    CHECK(r == DiagramComb::single(D({{1, 4}, {2, 3}}), Rational(-1)));
    CHECK_THROWS_AS(sigma_act_diagram(Perm{1, 2}, D({{1, 3}, {2, 4}})), Error);
}

TEST_CASE("shapes")
{
    CHECK_THROWS_AS(check_shape({2, 1, 3}, 6), Error);
    CHECK_THROWS_AS(check_shape({2, 2}, 6), Error);
    CHECK_NOTHROW(check_shape({3, 3, 2}, 8));
    CHECK(package_of({2, 3}) == std::vector<int>{0, 1, 1, 2, 2, 2});
    CHECK(all_shapes(6) == std::vector<Shape>{{2, 2, 2}, {2, 4}, {3, 3}, {4, 2}, {6}});
}

TEST_CASE("package agrees with brute-force orbit minimum")
{
    std::size_t checked = 0;
    for (int m = 1; m <= 4; ++m)
        for (const auto& d : all_diagrams(m))
            for (const auto& shape : all_shapes(2 * m)) {
                if (shape.size() > 4)
                    continue;
                auto got = package(d, shape);
                auto want = brute_package(d, shape);
                if (!want) {
                    CHECK(got.empty());
                    continue;
                }
                REQUIRE(got.size() == 1);
                CHECK(got.begin()->first.diagram == want->first);
                CHECK(got.begin()->first.shape == shape);
                CHECK(got.begin()->second == want->second);
                ++checked;
            }
    CHECK(checked > 100);
}

TEST_CASE("varphi and its inverse")
{
    for (int m = 1; m <= 4; ++m)
        for (const auto& pd : packaged(m)) {
            Graph g = varphi(pd);
            CHECK(g.edge_count() == static_cast<std::size_t>(m));
            CHECK(varphi_inverse(g) == pd);
        }
    CHECK_THROWS_AS(varphi_inverse(make_graph(3, {{1, 2}, {2, 3}})), Error);
    try {
        varphi_inverse(make_graph(2, {{1, 2}}));
        FAIL("valence 1 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LowValence);
    }
}

TEST_CASE("the monomial y14 y27 y35 y68 packaged as 3+3+2")
{
    auto p = package(D({{1, 4}, {2, 7}, {3, 5}, {6, 8}}), {3, 3, 2});
    REQUIRE(p.size() == 1);
    CHECK(varphi(p.begin()->first) == make_graph(3, {{1, 2}, {1, 2}, {1, 3}, {2, 3}}));
    // the differential of the corresponding graph is zero, so this is too
    CHECK(diagram_differential(p).empty());
}

TEST_CASE("diagram differential squares to zero and matches the graph one")
{
    for (int m = 1; m <= 5; ++m)
        for (const auto& pd : packaged(m)) {
            auto d1 = diagram_differential(pd);
            CHECK(diagram_differential(d1).empty());
            CHECK(varphi(d1) == differential(varphi(pd)));
        }
}

TEST_CASE("a chord inside one package kills the diagram")
{
    CHECK(package(D({{1, 2}, {3, 4}}), {2, 2}).empty());
    CHECK(package(D({{1, 3}, {2, 4}}), {2, 2}).size() == 1);
}
