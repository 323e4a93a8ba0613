#include "oracle.hpp"

#include <ctc/error.hpp>
#include <ctc/generators.hpp>
#include <ctc/hegraph.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace ctc;

namespace {

std::vector<HalfEdgeGraph> families()
{
    std::vector<HalfEdgeGraph> gs;
    for (int k = 2; k <= 5; ++k) {
        gs.push_back(gen_Hk(k));
        gs.push_back(gen_Hprime(k));
        gs.push_back(gen_Gkn(k, 2));
    }
    gs.push_back(gen_cycle(5));
    gs.push_back(gen_moebius(4));
    gs.push_back(gen_prism(5));
    gs.push_back(gen_complete_bipartite(2, 3));
    return gs;
}

} // namespace

TEST_CASE("H_3 has 14 elements and x1 has 5 neighbours in T(H_3)")
{
    const auto g = gen_Hk(3);
    CHECK(g.vertices().size() == 5);
    CHECK(g.edges().size() == 6);
    CHECK(g.half_edges().size() == 3);
    CHECK(g.element_count() == 14);

    const auto t = total_conflict_graph(g);
    CHECK(t.size() == 14);
    const auto x1 = t.index_of("x1");
    REQUIRE(x1);
    CHECK(t.neighbours(*x1).size() == 5);
    CHECK(degree_report(g).max_degree_with_half_edges == 3);
    CHECK(degree_report(g).max_degree_edges_only == 3);
}

TEST_CASE("total graph agrees with the incidence oracle")
{
    for (const auto & g : families()) {
        const auto t = total_conflict_graph(g);
        const auto o = oracle::total(g);
        REQUIRE(static_cast<int>(t.size()) == o.size());
        for (int a = 0; a < o.size(); ++a)
            for (int b = 0; b < o.size(); ++b) {
                if (a == b)
                    continue;
                const int ia = *t.index_of(o.labels[static_cast<std::size_t>(a)]);
                const int ib = *t.index_of(o.labels[static_cast<std::size_t>(b)]);
                CHECK(t.adjacent(ia, ib) == o.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
            }
    }
}

TEST_CASE("single edge gives a triangle")
{
    HalfEdgeGraph g;
    g.add_vertex("u");
    g.add_vertex("v");
    g.add_edge("uv", "u", "v");
    const auto t = total_conflict_graph(g);
    CHECK(t.size() == 3);
    CHECK(t.edge_count() == 3);
}

TEST_CASE("vertex with d edges and a half-edge spans a clique of size d+2")
{
    for (int d = 1; d <= 5; ++d) {
        HalfEdgeGraph g;
        g.add_vertex("c");
        for (int i = 0; i < d; ++i) {
            g.add_vertex("l" + std::to_string(i));
            g.add_edge("s" + std::to_string(i), "c", "l" + std::to_string(i));
        }
        g.add_half_edge("h", "c");
        const auto t = total_conflict_graph(g);
        std::vector<int> clique{*t.index_of("c"), *t.index_of("h")};
        for (int i = 0; i < d; ++i)
            clique.push_back(*t.index_of("s" + std::to_string(i)));
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                CHECK(t.adjacent(clique[a], clique[b]));
        CHECK(clique.size() == static_cast<std::size_t>(d + 2));
        CHECK(degree_report(g).max_degree_with_half_edges == d + 1);
    }
}

TEST_CASE("half-edges count toward degree")
{
    const auto g = gen_Hprime(4);
    CHECK(g.degree(*g.vertex_index("x1")) == 4);
    CHECK(g.edge_degree(*g.vertex_index("x1")) == 3);
    CHECK(g.degree(*g.vertex_index("x2")) == 3);
}

TEST_CASE("mutators reject malformed input")
{
    HalfEdgeGraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    CHECK_THROWS_AS(g.add_vertex("a"), Error);
    CHECK_THROWS_AS(g.add_vertex(""), Error);
    CHECK_THROWS_AS(g.add_vertex("has space"), Error);
    CHECK_THROWS_AS(g.add_edge("l", "a", "a"), Error);
    CHECK_THROWS_AS(g.add_edge("ab", "a", "zz"), Error);
    CHECK_THROWS_AS(g.add_half_edge("h", "zz"), Error);
    g.add_edge("ab", "a", "b");
    CHECK_THROWS_AS(g.add_edge("ba", "b", "a"), Error);
    CHECK_THROWS_AS(g.add_half_edge("ab", "a"), Error);
}

TEST_CASE("joining half-edges")
{
    HalfEdgeGraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_half_edge("ha", "a");
    g.add_half_edge("ha2", "a");
    g.add_half_edge("hb", "b");
    const auto j = join_half_edges(g, "ha", "hb", "ab");
    CHECK(j.edges().size() == 1);
    CHECK(j.half_edges().size() == 1);
    CHECK(j.has_edge_between(0, 1));
    CHECK_THROWS_AS(join_half_edges(g, "ha", "ha2", "x"), Error);
    CHECK_THROWS_AS(join_half_edges(g, "ha", "ha", "x"), Error);
    CHECK_THROWS_AS(join_half_edges(g, "ha", "nope", "x"), Error);
}

TEST_CASE("joining parallel to an existing edge is rejected")
{
    HalfEdgeGraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_edge("ab", "a", "b");
    g.add_half_edge("ha", "a");
    g.add_half_edge("hb", "b");
    CHECK_THROWS_AS(join_half_edges(g, "ha", "hb", "ab2"), Error);
}

TEST_CASE("n copies of H'_3 plus the hub block")
{
    for (int n = 1; n <= 5; ++n) {
        std::vector<HalfEdgeGraph> parts;
        std::vector<std::string> prefixes;
        HalfEdgeGraph hub;
        hub.add_vertex("u");
        hub.add_half_edge("f0", "u");
        hub.add_half_edge("f'" + std::to_string(n + 1), "u");
        parts.push_back(hub);
        prefixes.push_back("");
        for (int i = 1; i <= n; ++i) {
            parts.push_back(gen_Hprime(3));
            prefixes.push_back("B" + std::to_string(i) + ".");
        }
        const auto u = disjoint_union(parts, prefixes);
        CHECK(u.vertices().size() == static_cast<std::size_t>(5 * n + 1));
        CHECK(u.edges().size() == static_cast<std::size_t>(6 * n));
        CHECK(u.half_edges().size() == static_cast<std::size_t>(2 * n + 2));
    }
    const std::vector<HalfEdgeGraph> two{gen_Hk(2), gen_Hk(2)};
    const std::vector<std::string> same{"A.", "A."};
    CHECK_THROWS_AS(disjoint_union(two, same), Error);
}

TEST_CASE("G_{k,n} shape")
{
    const auto g = gen_Gkn(3, 2);
    CHECK(g.vertices().size() == 11);
    CHECK(g.edges().size() == 15);
    CHECK(g.half_edges().empty());
    CHECK(degree_report(g).max_degree_with_half_edges == 3);
    for (const char * label : {"u", "e0", "e1", "e2", "B1.x1", "B2.y3", "B2.x3y2"})
        CHECK(g.find(label).has_value());
    for (int k = 2; k <= 6; ++k)
        for (int n = 1; n <= 4; ++n) {
            const auto h = gen_Gkn(k, n);
            CHECK(h.vertices().size() == static_cast<std::size_t>(n * (2 * k - 1) + 1));
            CHECK(h.edges().size() == static_cast<std::size_t>(n * k * (k - 1) + n + 1));
            CHECK(degree_report(h).max_degree_with_half_edges == k);
        }
    CHECK_THROWS_AS(gen_Gkn(1, 1), Error);
    CHECK_THROWS_AS(gen_Gkn(3, 0), Error);
    CHECK_THROWS_AS(gen_Hk(1), Error);
    CHECK_THROWS_AS(gen_Hprime(3, {2, 2}), Error);
    CHECK_THROWS_AS(gen_cycle(2), Error);
}

TEST_CASE("G_{2,n} is the cycle C_{3n+1}")
{
    for (int n = 1; n <= 5; ++n) {
        CHECK(isomorphic(gen_Gkn(2, n), gen_cycle(3 * n + 1)));
        CHECK_FALSE(isomorphic(gen_Gkn(2, n), gen_cycle(3 * n + 2)));
    }
}

TEST_CASE("canonical form is label independent")
{
    const auto g = gen_Gkn(3, 1);
    std::map<std::string, std::string> renames;
    std::vector<std::string> labels;
    for (const auto & v : g.vertices())
        labels.push_back(v);
    for (const auto & e : g.edges())
        labels.push_back(e.label);
    std::vector<std::string> shuffled = labels;
    std::mt19937 rng(7);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t i = 0; i < labels.size(); ++i)
        renames[labels[i]] = "z" + std::to_string(i) + shuffled[i];
    const auto r = relabel(g, renames);
    CHECK(canonical_form(r) == canonical_form(g));
    CHECK(isomorphic(r, g));

    // Same degree sequence, different graphs.
    HalfEdgeGraph two_triangles;
    for (int i = 0; i < 6; ++i)
        two_triangles.add_vertex("v" + std::to_string(i));
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i)
            two_triangles.add_edge("t" + std::to_string(base + i), "v" + std::to_string(base + i),
                                   "v" + std::to_string(base + (i + 1) % 3));
    CHECK_FALSE(isomorphic(two_triangles, gen_cycle(6)));

    // Half-edge placement matters.
    CHECK_FALSE(isomorphic(gen_Hprime(3, {1, 2}), gen_Hk(3)));
    CHECK(isomorphic(gen_Hprime(3, {1, 2}), gen_Hprime(3, {2, 3})));
}

TEST_CASE("bipartiteness of G_{k,n}")
{
    for (int k = 2; k <= 6; ++k)
        for (int n = 1; n <= 7; n += 2) {
            const auto b = is_bipartite(gen_Gkn(k, n));
            CHECK(b.bipartite);
            CHECK(b.side_a.size() + b.side_b.size() == gen_Gkn(k, n).vertices().size());
        }
    for (int n = 2; n <= 6; n += 2) {
        const auto g = gen_Gkn(3, n);
        const auto b = is_bipartite(g);
        REQUIRE_FALSE(b.bipartite);
        const auto & w = b.odd_cycle;
        REQUIRE(w.size() >= 4);
        CHECK(w.front() == w.back());
        CHECK((w.size() - 1) % 2 == 1);
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            CHECK(g.has_edge_between(*g.vertex_index(w[i]), *g.vertex_index(w[i + 1])));
    }
    CHECK(is_bipartite(gen_cycle(6)).bipartite);
    CHECK_FALSE(is_bipartite(gen_cycle(7)).bipartite);
}

TEST_CASE("equality ignores element order")
{
    HalfEdgeGraph a, b;
    a.add_vertex("p");
    a.add_vertex("q");
    a.add_edge("pq", "p", "q");
    b.add_vertex("q");
    b.add_vertex("p");
    b.add_edge("pq", "q", "p");
    CHECK(a == b);
    b.add_half_edge("h", "p");
    CHECK_FALSE(a == b);
}

TEST_CASE("removing half-edges and edges")
{
    const auto g = gen_Hk(3);
    const auto h = remove_half_edges(g, {"e2", "e3"});
    CHECK_FALSE(h == gen_Hprime(3, {1, 2}));
    CHECK(remove_half_edges(g, {"e3"}) == gen_Hprime(3, {1, 2}));
    CHECK(h.half_edges().size() == 1);
    CHECK(remove_edges(g, {"x1y2"}).edges().size() == 5);
    CHECK_THROWS_AS(remove_half_edges(g, {"x1"}), Error);
    CHECK_THROWS_AS(remove_edges(g, {"e1"}), Error);
}

TEST_CASE("heg 1 round trip")
{
    for (const auto & g : families())
        CHECK(parse_heg(serialize(g)) == g);
    const auto parsed = parse_heg("heg 1\n# comment\n\nvertex a\nvertex b   # trailing\nedge ab a b\nhalf h a\n");
    CHECK(parsed.vertices().size() == 2);
    CHECK(parsed.half_edges().size() == 1);
}

TEST_CASE("heg 1 parse errors carry line numbers")
{
    auto line_of = [](const std::string & text) {
        try {
            parse_heg(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("vertex a\n") == 1);
    CHECK(line_of("heg 2\n") == 1);
    CHECK(line_of("heg 1\nvertex a\nedge e a b\n") == 3);
    CHECK(line_of("heg 1\nvertex a\nvertex a\n") == 3);
    CHECK(line_of("heg 1\nvertex\n") == 2);
    CHECK(line_of("heg 1\nwidget w\n") == 2);
    CHECK(line_of("heg 1\nvertex a\nhalf h a extra\n") == 3);
    CHECK(line_of("") >= 0);
}

TEST_CASE("heg files report their path")
{
    const auto dir = std::filesystem::temp_directory_path() / "ctc_heg_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "bad.heg").string();
    {
        std::ofstream f(path);
        f << "heg 1\nvertex a\nedge e a b\n";
    }
    try {
        read_heg_file(path);
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(std::string(e.what()) == path + ":3: dangling endpoint: no vertex 'b'");
    }
    CHECK_THROWS_AS(read_heg_file((dir / "missing.heg").string()), Error);

    const auto good = (dir / "good.heg").string();
    write_heg_file(good, gen_Gkn(3, 2));
    CHECK(read_heg_file(good) == gen_Gkn(3, 2));
}
