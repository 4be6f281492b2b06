#include "doctest.h"

#include "minorvol/graph.hpp"

#include <random>

using namespace minorvol;

TEST_CASE("parse and serialize round-trip") {
    Graph k3 = parse_graph("p 3 3\ne 0 1\ne 1 2\ne 0 2\n");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(to_dimacs(k3) == "p 3 3\ne 0 1\ne 0 2\ne 1 2\n");
    CHECK(to_dimacs(parse_graph(to_dimacs(k3))) == to_dimacs(k3));

    Graph iso = parse_graph("p 2 0\n");
    CHECK(iso.order() == 2);
    CHECK(iso.edge_count() == 0);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_graph("p 2 1\ne 0 0\n"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_AS(parse_graph("p 2 2\ne 0 1\ne 1 0\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(parse_graph("p 2 1\ne 0 5\n"), ParseError);         // range
    CHECK_THROWS_AS(parse_graph("e 0 1\n"), ParseError);                // no header
    CHECK_THROWS_AS(parse_graph("p 3 2\ne 0 1\n"), ParseError);         // count mismatch
}

TEST_CASE("density") {
    CHECK(density(complete_graph(5)) == Rational(2));
    CHECK(density(complete_bipartite(9, 9)) == Rational(9, 2));
    CHECK(density(Graph(1)) == Rational(0));
    CHECK_THROWS_AS(density(Graph(0)), PreconditionError);
}

TEST_CASE("constructions") {
    CHECK(is_isomorphic(blowup(complete_graph(2), 3), complete_bipartite(3, 3)));
    Graph t44 = complete_multipartite({2, 2, 2, 2});
    CHECK(t44.order() == 8);
    CHECK(t44.edge_count() == 24);

    Graph h10 = ht_graph(10);
    CHECK(h10.order() == 20);
    CHECK(h10.edge_count() == 145);

    Graph q3 = hypercube(3);
    CHECK(q3.order() == 8);
    CHECK(q3.edge_count() == 12);

    Graph p = petersen_graph();
    CHECK(p.order() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(p.min_degree() == 3);
    CHECK(p.max_degree() == 3);

    // blowup counts: k*v vertices, k^2*e edges
    for (int k = 1; k <= 3; ++k) {
        Graph b = blowup(cycle_graph(5), k);
        CHECK(b.order() == 5 * k);
        CHECK(b.edge_count() == 5L * k * k);
    }
}

TEST_CASE("invariants of C_5 and K_4") {
    GraphInvariants c5 = invariants(cycle_graph(5), 3);
    CHECK(c5.alpha_k[1] == 2);
    CHECK(c5.alpha_k[2] == 4);
    CHECK(c5.alpha_k[3] == 5);
    CHECK(c5.tau == 3);
    CHECK(c5.chi == 3);

    GraphInvariants k4 = invariants(complete_graph(4), 4);
    for (int i = 1; i <= 4; ++i) CHECK(k4.alpha_k[i] == i);
    CHECK(k4.tau == 3);
    CHECK(k4.chi == 4);

    GraphInvariants pet = invariants(petersen_graph(), 3);
    CHECK(pet.alpha_k[1] == 4);
    CHECK(pet.tau == 6);
    CHECK(pet.chi == 3);

    CHECK_THROWS_AS(invariants(ht_graph(10), 2), PreconditionError);  // above default cap
}

TEST_CASE("tau + alpha = v on small graphs") {
    for (const Graph& g : enumerate_graphs(5)) {
        GraphInvariants inv = invariants(g, 1);
        CHECK(inv.tau + inv.alpha_k[1] == g.order());
        for (int k = inv.chi; k <= inv.chi + 1; ++k) CHECK(alpha_k(g, k) == g.order());
    }
}

TEST_CASE("degeneracy") {
    CHECK(degeneracy(complete_graph(4)) == 3);
    CHECK(degeneracy(cycle_graph(7)) == 2);
    CHECK(degeneracy(hypercube(3)) == 3);
    CHECK(degeneracy(path_graph(5)) == 1);
    CHECK(degeneracy(Graph(1)) == 0);
}

TEST_CASE("minor containment") {
    auto m = is_minor(complete_graph(3), cycle_graph(5));
    REQUIRE(m.has_value());
    CHECK(validate_model(complete_graph(3), cycle_graph(5), *m));

    CHECK(!is_minor(complete_graph(4), cycle_graph(5)).has_value());
    CHECK(!is_minor(complete_graph(4), complete_graph(3)).has_value());
    CHECK(is_minor(petersen_graph(), petersen_graph()).has_value());
    CHECK(is_minor(complete_graph(5), petersen_graph()).has_value());
    CHECK(!is_minor(complete_graph(6), petersen_graph()).has_value());

    // K_4 needs three branch sets pairwise adjacent; K_{1,1,8} has tau = 2
    CHECK(!is_minor(complete_graph(4), complete_multipartite({1, 1, 8})).has_value());
    CHECK_THROWS_AS(is_minor(complete_graph(3), complete_graph(15)), PreconditionError);
}

TEST_CASE("minor monotone under supergraphs") {
    // H minor of G and G subgraph of G' implies H minor of G'
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> es, extra;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                (rng() % 2 ? es : extra).emplace_back(u, v);
        Graph g(n, es);
        std::vector<std::pair<int, int>> es2 = es;
        for (auto& e : extra)
            if (rng() % 2) es2.push_back(e);
        Graph g2(n, es2);
        Graph h = cycle_graph(3 + static_cast<int>(rng() % 2));
        if (is_minor(h, g).has_value()) CHECK(is_minor(h, g2).has_value());
    }
}

TEST_CASE("model validator rejects bad models") {
    Graph h = complete_graph(2), g = path_graph(3);
    Model overlap{{{0, 1}, {1, 2}}};
    CHECK(!validate_model(h, g, overlap));
    Model disconnected{{{0, 2}, {1}}};
    CHECK(!validate_model(h, g, disconnected));
    Model good{{{0}, {1, 2}}};
    CHECK(validate_model(h, g, good));
    Model no_edge{{{0}, {2}}};
    CHECK(!validate_model(h, g, no_edge));
}

TEST_CASE("vertex connectivity") {
    CHECK(complete_graph(5).vertex_connectivity() == 4);
    CHECK(cycle_graph(6).vertex_connectivity() == 2);
    CHECK(path_graph(5).vertex_connectivity() == 1);
    CHECK(petersen_graph().vertex_connectivity() == 3);
    CHECK(disjoint_copies(complete_graph(3), 2).vertex_connectivity() == 0);
}

TEST_CASE("graph enumeration counts match the standard sequence") {
    std::vector<long> per_order(8, 0);
    for (const Graph& g : enumerate_graphs(6)) ++per_order[g.order()];
    CHECK(per_order[1] == 1);
    CHECK(per_order[2] == 2);
    CHECK(per_order[3] == 4);
    CHECK(per_order[4] == 11);
    CHECK(per_order[5] == 34);
    CHECK(per_order[6] == 156);

    CHECK(enumerate_graphs(1).size() == 1);

    // chromatic filter
    long bip = 0;
    for (const Graph& g : enumerate_graphs(4, 2)) bip += g.order() == 4;
    for (const Graph& g : enumerate_graphs(4)) {
        if (g.order() == 4 && chromatic_number(g) <= 2) --bip;
    }
    CHECK(bip == 0);
}

TEST_CASE("isomorphism sanity") {
    CHECK(!is_isomorphic(cycle_graph(6), path_graph(6)));
    CHECK(is_isomorphic(complete_bipartite(3, 3), blowup(complete_graph(2), 3)));
    CHECK(!is_isomorphic(complete_bipartite(3, 3), cycle_graph(6)));
    CHECK(is_isomorphic(hypercube(2), cycle_graph(4)));
}
