#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gkit/brute.hpp"
#include "gkit/builtins.hpp"
#include "gkit/canonical.hpp"
#include "gkit/graph.hpp"

using namespace gkit;

namespace {

// Test-only graph6 decoder, structured around an explicit bit array rather
// than the incremental pair walk of the library parser.
Graph oracle_parse_graph6(const std::string& s) {
    REQUIRE(!s.empty());
    std::size_t pos = 0;
    int n;
    if (s[0] == '~') {
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    std::vector<int> bits;
    for (std::size_t i = pos; i < s.size(); ++i)
        for (int j = 5; j >= 0; --j) bits.push_back((s[i] - 63) >> j & 1);
    Graph g(n);
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (bits[static_cast<std::size_t>(k++)]) g.add_edge(u, v);
    return g;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution edge(p);
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace

TEST_CASE("graph6 round-trips and matches the oracle decoder") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng() % 15);
        const Graph g = random_graph(rng, n, 0.4);
        const std::string code = emit_graph6(g);
        CHECK(parse_graph6(code) == g);
        CHECK(oracle_parse_graph6(code) == g);
        CHECK(emit_graph6(parse_graph6(code)) == code);
    }
}

TEST_CASE("graph6 fixed codes") {
    // "E?~o": 6 vertices, vertices 4 and 5 joined to all of 0..3.
    const Graph g = parse_graph6("E?~o");
    CHECK(g.order() == 6);
    CHECK(g == oracle_parse_graph6("E?~o"));
    CHECK(emit_graph6(g) == "E?~o");

    const Graph c5 = parse_graph6(emit_graph6(cycle_graph(5)));
    CHECK(c5.order() == 5);
    CHECK(is_connected(c5));
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    // n=0 header.
    const Graph empty = parse_graph6("?");
    CHECK(empty.order() == 0);
    CHECK(emit_graph6(empty) == "?");

    // Long-form header at and just below the 64-vertex cap.
    const Graph big(63);
    CHECK(parse_graph6(emit_graph6(big)) == big);
    std::mt19937 rng64(12);
    Graph full(64);
    for (int v = 1; v < 64; ++v)
        for (int u = 0; u < v; ++u)
            if (rng64() % 3 == 0) full.add_edge(u, v);
    CHECK(parse_graph6(emit_graph6(full)) == full);
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("D"), MalformedGraph6);        // missing body
    CHECK_THROWS_AS(parse_graph6("Dhc?"), MalformedGraph6);     // trailing bytes
    CHECK_THROWS_AS(parse_graph6("D\x1f"), MalformedGraph6);    // byte below 63
    CHECK_THROWS_AS(parse_graph6("~~????"), MalformedGraph6);   // order > 64
    CHECK_THROWS_AS(parse_graph6("@@"), MalformedGraph6);       // n=1 takes no body
    CHECK_THROWS_AS(parse_graph6("Ao"), MalformedGraph6);       // nonzero padding (n=2, bit 2 set)
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(4)) == empty_graph(4));
    CHECK(brute::isomorphic(complement(cycle_graph(5)), cycle_graph(5)));

    const Graph two_k2 = complement(cycle_graph(4));
    CHECK(two_k2.edge_count() == 2);
    CHECK(two_k2.has_edge(0, 2));
    CHECK(two_k2.has_edge(1, 3));

    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(rng, static_cast<int>(rng() % 12), 0.5);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced subgraphs") {
    const Graph c5 = cycle_graph(5);
    CHECK(induced_subgraph(c5, VertexSet::first_n(5)) == c5);
    CHECK(brute::isomorphic(induced_subgraph(c5, VertexSet::of({0, 1, 2})), path_graph(3)));

    const Graph fig1c = *builtin_graph("fig1c");
    const Graph sub = induced_subgraph(fig1c, VertexSet::of({4, 5, 6, 7}));
    CHECK(sub.edge_count() == 2);
    CHECK(brute::isomorphic(sub, Graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("closed neighborhoods") {
    const Graph k2 = complete_graph(2);
    CHECK(closed_neighborhood(k2, VertexSet{}) == VertexSet{});
    CHECK(closed_neighborhood(k2, VertexSet::of({0})) == VertexSet::of({0, 1}));
    const Graph fig1c = *builtin_graph("fig1c");
    CHECK(closed_neighborhood(fig1c, VertexSet::of({0})) == VertexSet::of({0, 1, 2, 3}));
}

TEST_CASE("G minus closed neighborhoods") {
    const Graph c5 = cycle_graph(5);
    CHECK(g_sub_f(c5, VertexSet{}) == c5);

    // In a 7-cycle, removing N[v] leaves a 4-vertex path (self-complementary).
    const Graph c7 = cycle_graph(7);
    for (int v = 0; v < 7; ++v) {
        const Graph gv = g_sub_f(c7, VertexSet::single(v));
        CHECK(brute::isomorphic(gv, path_graph(4)));
        CHECK(brute::isomorphic(gv, complement(path_graph(4))));
    }
    // In the complement of a 7-cycle, only the two cycle-neighbors survive.
    const Graph cbar7 = cycle_complement(7);
    for (int v = 0; v < 7; ++v) CHECK(g_sub_f(cbar7, VertexSet::single(v)) == complete_graph(2));

    const Graph fig1c = *builtin_graph("fig1c");
    CHECK(brute::isomorphic(g_sub_f(fig1c, VertexSet::single(0)), Graph(4, {{0, 1}, {2, 3}})));

    CHECK_THROWS_AS(g_sub_f(c5, VertexSet::of({0, 1})), NotIndependent);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.4);
        VertexSet f;
        for (int v = 0; v < g.order(); ++v)
            if (!g.neighbors(v).intersects(f) && rng() % 3 == 0) f.add(v);
        CHECK(g_sub_f_support(g, f) == (g.vertices() - closed_neighborhood(g, f)));
    }
}

TEST_CASE("cycle recognition") {
    CHECK(is_cycle_at_least(cycle_graph(4), 4));
    CHECK(!is_cycle_at_least(cycle_graph(3), 4));
    CHECK(is_cycle_at_least(cycle_graph(3), 3));
    CHECK(!is_cycle_at_least(Graph(4, {{0, 1}, {2, 3}}), 4));           // 2K2
    CHECK(!is_cycle_at_least(disjoint_union(cycle_graph(3), cycle_graph(3)), 3));
}

TEST_CASE("triangle-free scan") {
    CHECK(is_triangle_free(cycle_graph(5)));
    CHECK(!is_triangle_free(complete_graph(3)));
    CHECK(is_triangle_free(*builtin_graph("fig1c")));
    CHECK(!is_triangle_free(cycle_complement(6)));
}

TEST_CASE("isolated vertices") {
    CHECK(isolated_vertices(complete_graph(2)) == VertexSet{});
    CHECK(isolated_vertices(Graph(1)) == VertexSet::of({0}));
    CHECK(isolated_vertices(Graph(6, {{0, 1}, {2, 3}, {4, 5}})) == VertexSet{});
    const auto stripped = strip_isolated(Graph(3, {{0, 2}}));
    CHECK(stripped.graph == complete_graph(2));
    CHECK(stripped.to_original == std::vector<int>{0, 2});
}

TEST_CASE("edge list parsing") {
    const Graph g = parse_edge_list("n 4  # comment\n0 1\n2 3 # another\n\n");
    CHECK(g == Graph(4, {{0, 1}, {2, 3}}));
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
    CHECK(parse_edge_list("n 3\n").order() == 3); // isolated vertices allowed

    CHECK_THROWS_AS(parse_edge_list("0 1\n"), MalformedInput);      // missing header
    CHECK_THROWS_AS(parse_edge_list("n 3\n1 1\n"), MalformedInput); // self-loop
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 7\n"), MalformedInput); // out of range
    CHECK_THROWS_AS(parse_edge_list("n 3\n0\n"), MalformedInput);   // lone endpoint
    CHECK_THROWS_AS(parse_edge_list("n 65\n"), MalformedInput);     // too many vertices
}

TEST_CASE("canonical form is a class invariant") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph g = random_graph(rng, n, 0.5);
        const Graph h = relabeled(g, random_permutation(rng, n));
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    CHECK(canonical_form(cycle_graph(6)) != canonical_form(disjoint_union(complete_graph(3), complete_graph(3))));
    CHECK(canonical_form(cycle_graph(6)) !=
          canonical_form(disjoint_union(cycle_graph(5), complete_graph(1))));

    // All 4! labelings of the path on 4 vertices agree.
    std::vector<int> perm{0, 1, 2, 3};
    const CanonicalForm expected = canonical_form(path_graph(4));
    do {
        CHECK(canonical_form(relabeled(path_graph(4), perm)) == expected);
    } while (std::next_permutation(perm.begin(), perm.end()));

    CHECK_THROWS_AS(canonical_form(Graph(17)), TooLarge);
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
    CHECK(are_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
    CHECK(!are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(5), complete_graph(1))));
    CHECK(are_isomorphic(*builtin_graph("fig1c"), *builtin_graph("fig1c")));

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 250; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph a = random_graph(rng, n, 0.5);
        const Graph b = trial % 3 == 0 ? relabeled(a, random_permutation(rng, n)) : random_graph(rng, n, 0.5);
        CHECK(are_isomorphic(a, b) == brute::isomorphic(a, b));
    }
}

TEST_CASE("canonical keys partition all small graphs like the permutation oracle") {
    // Both keys are complete invariants, so matching partitions over every
    // labeled graph with n <= 6 means are_isomorphic and permutation search
    // agree on every pair.
    for (int n = 1; n <= 6; ++n) {
        std::map<std::string, std::string> canonical_to_brute;
        std::map<std::string, std::string> brute_to_canonical;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++bit)
                    if ((mask >> bit) & 1) g.add_edge(u, v);
            const std::string ck = canonical_form(g).bytes;
            const std::string bk = brute::min_adjacency_string(g);
            const auto [it1, fresh1] = canonical_to_brute.emplace(ck, bk);
            CHECK(it1->second == bk);
            const auto [it2, fresh2] = brute_to_canonical.emplace(bk, ck);
            CHECK(it2->second == ck);
        }
        CHECK(canonical_to_brute.size() == brute_to_canonical.size());
    }
}

TEST_CASE("canonical labeling test matches recomputing the form") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = random_graph(rng, n, 0.5);
        CHECK(is_canonical_labeling(g) == (emit_graph6(g) == canonical_form(g).bytes));
    }
}

TEST_CASE("canonical relabeling realizes the minimal adjacency string") {
    std::mt19937 rng(787);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = random_graph(rng, n, 0.5);
        const Graph canon = canonical_relabel(g);
        std::string bits;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) bits.push_back(canon.has_edge(u, v) ? '1' : '0');
        CHECK(bits == brute::min_adjacency_string(g));
    }
}

TEST_CASE("builtin names") {
    CHECK(builtin_graph("cbar6") == complement(cycle_graph(6)));
    CHECK(builtin_graph("k4") == complete_graph(4));
    CHECK(builtin_graph("p3") == path_graph(3));
    CHECK(builtin_graph("c5") == cycle_graph(5));
    CHECK(builtin_graph("fig1b")->order() == 7);
    CHECK(!builtin_graph("nope"));
    CHECK(!builtin_graph("c2"));
}
