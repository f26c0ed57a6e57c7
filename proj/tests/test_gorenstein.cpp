#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkit/builtins.hpp"
#include "gkit/complex.hpp"
#include "gkit/enumerate.hpp"
#include "gkit/gorenstein.hpp"
#include "gkit/graph.hpp"
#include "gkit/independence.hpp"

using namespace gkit;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution edge(p);
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

bool accepted_all(const Graph& g, std::initializer_list<FieldSpec> fields) {
    for (const FieldSpec& k : fields)
        if (!check_gorenstein_theorem(g, k).accepted) return false;
    return true;
}

} // namespace

TEST_CASE("cycle complements are accepted") {
    for (int n = 4; n <= 12; ++n) {
        const Graph g = cycle_complement(n);
        CHECK(accepted_all(g, {kQ, kF2, kF3}));
    }
}

TEST_CASE("base cases") {
    CHECK(check_gorenstein_theorem(Graph(0), kQ).accepted);
    CHECK(check_gorenstein_theorem(Graph(1), kQ).accepted);          // a single vertex
    CHECK(check_gorenstein_theorem(empty_graph(5), kQ).accepted);    // isolated vertices only
    CHECK(check_gorenstein_theorem(complete_graph(2), kQ).accepted);

    const Verdict k3 = check_gorenstein_theorem(complete_graph(3), kQ);
    CHECK(!k3.accepted);
    CHECK(k3.route == Route::BaseCase);
    REQUIRE(k3.witness.has_value());

    // K2 plus isolated vertices is still accepted.
    CHECK(check_gorenstein_theorem(Graph(4, {{1, 3}}), kQ).accepted);
}

TEST_CASE("rejection witnesses name the first failing condition") {
    // Conditions run cheapest first, so C4 falls to the polynomial check:
    // I(C4,-1) = 1-4+2 = -1, not (+1).
    const Verdict c4 = check_gorenstein_theorem(cycle_graph(4), kQ);
    CHECK(!c4.accepted);
    CHECK(c4.route == Route::Theorem);
    REQUIRE(c4.witness.has_value());
    CHECK(c4.witness->condition == "independence-polynomial-at-minus-one");

    // Complement of K_{2,3} plus an isolated vertex: I(-1) = 1-6+6 = 1 holds,
    // but the complement is not a cycle, so the cycle condition trips at F = {}.
    Graph k23_k1(6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    const Graph g = complement(k23_k1);
    REQUIRE(independence_number(g) == 2);
    const Verdict v = check_gorenstein_theorem(g, kQ);
    CHECK(!v.accepted);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->condition == "g-sub-f-complement-not-long-cycle");
    CHECK(v.witness->vertices.empty()); // F is the empty set
}

TEST_CASE("the fig1 builtins are accepted over all tested fields") {
    for (const Graph& g : figure1_graphs()) {
        CHECK(accepted_all(g, {kQ, kF2, kF3}));
        CHECK(is_triangle_free(g));
        CHECK(independence_number(g) == 3);
        CHECK(isolated_vertices(g).empty());
    }
    CHECK(figure1_graphs()[2].order() == 8);
    CHECK(figure1_graphs()[2].edge_count() == 10);
}

TEST_CASE("witness labels survive isolated-vertex stripping") {
    // C4 with an isolated vertex inserted up front: the failing F is still
    // reported in the original labeling.
    const Graph g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    const Verdict v = check_gorenstein_theorem(g, kQ);
    CHECK(!v.accepted);
    REQUIRE(v.witness.has_value());
}

TEST_CASE("alpha=2 fast path") {
    CHECK(check_alpha2(cycle_complement(5)).accepted);
    CHECK(check_alpha2(Graph(4, {{0, 1}, {2, 3}})).accepted); // complement is C4
    CHECK(!check_alpha2(path_graph(4)).accepted);             // complement of P4 is P4

    CHECK_THROWS_AS(check_alpha2(*builtin_graph("fig1a")), WrongAlpha);
    CHECK_THROWS_AS(check_alpha2(Graph(3, {{0, 1}})), InvalidInput);

    std::mt19937 rng(11);
    int done = 0;
    while (done < 200) {
        const Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 5), 0.6);
        if (!isolated_vertices(g).empty() || independence_number(g) != 2) continue;
        ++done;
        CHECK(check_alpha2(g).accepted == accepted_all(g, {kQ, kF2}));
    }
}

TEST_CASE("alpha=3 invariants") {
    const Alpha3Report a = alpha3_invariants(*builtin_graph("fig1a"));
    CHECK(a.n == 6);
    CHECK(a.m == 3);
    CHECK(a.a2 == 12);
    CHECK(a.a3 == 8);
    CHECK(a.all_match);
    REQUIRE(a.h.has_value());
    CHECK(*a.h == std::vector<BigInt>{BigInt(1), BigInt(3), BigInt(3), BigInt(1)});
    CHECK(a.degree_census == std::map<int, int>{{1, 6}});

    const Alpha3Report b = alpha3_invariants(*builtin_graph("fig1b"));
    CHECK(b.m == 6);
    CHECK(b.a2 == 15);
    CHECK(b.a3 == 10);
    CHECK(b.all_match);

    // alpha=3 but not Gorenstein: counts must miss.
    const Alpha3Report c6 = alpha3_invariants(cycle_graph(6));
    CHECK(!c6.all_match);

    // Petersen graph: alpha = 4, so the report refuses it.
    Graph petersen(10);
    const int pair_of[10][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b) {
            const bool disjoint = pair_of[a][0] != pair_of[b][0] && pair_of[a][0] != pair_of[b][1] &&
                                  pair_of[a][1] != pair_of[b][0] && pair_of[a][1] != pair_of[b][1];
            if (disjoint) petersen.add_edge(a, b);
        }
    REQUIRE(independence_number(petersen) == 4);
    CHECK_THROWS_AS(alpha3_invariants(petersen), WrongAlpha);

    CHECK_THROWS_AS(alpha3_invariants(complete_graph(4)), WrongAlpha);
    CHECK_THROWS_AS(alpha3_invariants(Graph(4, {{0, 1}})), InvalidInput);
}

TEST_CASE("cross validation") {
    CHECK(cross_validate(cycle_complement(7), {kQ, kF2, kF3}).all_agree);
    const CrossValidation cv = cross_validate(cycle_graph(4), {kQ, kF2});
    CHECK(cv.all_agree);
    for (const auto& e : cv.entries) {
        CHECK(!e.theorem.accepted);
        CHECK(!e.homological.accepted);
    }

    std::mt19937 rng(13);
    int done = 0;
    while (done < 120) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.5);
        if (!isolated_vertices(g).empty()) continue;
        ++done;
        CHECK(cross_validate(g, {kQ, kF2, kF3}).all_agree);
    }
}

TEST_CASE("acceptance is multiplicative over disjoint unions") {
    std::mt19937 rng(17);
    int done = 0;
    while (done < 200) {
        const Graph a = random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.6);
        const Graph b = random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.6);
        ++done;
        const bool left = check_gorenstein_theorem(a, kF2).accepted;
        const bool right = check_gorenstein_theorem(b, kF2).accepted;
        CHECK(check_gorenstein_theorem(disjoint_union(a, b), kF2).accepted == (left && right));
    }
}

TEST_CASE("necessity spot checks on accepted graphs") {
    std::vector<Graph> accepted = figure1_graphs();
    for (int n = 4; n <= 9; ++n) accepted.push_back(cycle_complement(n));
    accepted.push_back(disjoint_union(cycle_complement(5), complete_graph(2)));
    for (const Graph& g : accepted) {
        REQUIRE(check_gorenstein_theorem(g, kF2).accepted);
        CHECK(is_w2_definition(g));
        const SimplicialComplex delta = independence_complex(g);
        CHECK(is_euler(delta));
        CHECK(core(delta) == delta);
        const auto h = h_vector(delta);
        for (std::size_t i = 0; i < h.size(); ++i) CHECK(h[i] == h[h.size() - 1 - i]);
        const IntPolynomial ip = independence_polynomial(g);
        const int alpha = ip.degree();
        CHECK(ip.evaluate(BigRat(-1)) == (alpha % 2 ? BigRat(-1) : BigRat(1)));
        if (alpha % 2) CHECK(ip.evaluate(BigRat(-1, 2)) == 0);
        if (alpha == 3) CHECK(alpha3_invariants(g).all_match);
    }
}

TEST_CASE("disconnected family member validates") {
    const Graph g = disjoint_union(cycle_complement(5), complete_graph(2));
    CHECK(independence_number(g) == 3);
    CHECK(accepted_all(g, {kQ, kF2, kF3}));
    CHECK(cross_validate(g, {kQ, kF2, kF3}).all_agree);
}
