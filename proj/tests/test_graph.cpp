#include <doctest.h>

#include <sstream>

#include "drgkit/edgelist.hpp"
#include "drgkit/families.hpp"
#include "drgkit/graph.hpp"
#include "fixtures.hpp"

using namespace drgkit;
using namespace drgkit::testfix;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});  // duplicates collapse
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("regular_degree") {
    CHECK(regular_degree(petersen()) == 3);
    CHECK(regular_degree(complete(2)) == 1);
    CHECK_FALSE(regular_degree(path(3)).has_value());
}

TEST_CASE("common_neighbors on Petersen") {
    Graph g = petersen();
    // adjacent pair: lambda = 0
    CHECK(common_neighbors(g, 0, 1).empty());
    // distance-2 pair: mu = 1
    auto dist = g.distances_from(0);
    int v2 = -1;
    for (int v = 0; v < 10; ++v)
        if (dist[v] == 2) v2 = v;
    REQUIRE(v2 >= 0);
    CHECK(common_neighbors(g, 0, v2).size() == 1);
    CHECK(common_neighbors(complete(4), 0, 1).size() == 2);
    CHECK_THROWS_AS(common_neighbors(g, 3, 3), std::invalid_argument);
}

TEST_CASE("ample_parameters") {
    SUBCASE("Petersen") {
        auto r = ample_parameters(petersen());
        REQUIRE(r.ok());
        CHECK(*r == AmpleParams{10, 3, 0, 1, true});
    }
    SUBCASE("three disjoint K_5") {
        auto r = ample_parameters(generate(FamilySpec::disjoint_cliques(3, 5)).graph);
        REQUIRE(r.ok());
        CHECK(*r == AmpleParams{15, 4, 3, 0, true});
    }
    SUBCASE("K_4 minus an edge fails on degree") {
        Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
        auto r = ample_parameters(g);
        CHECK_FALSE(r.ok());
        CHECK(r.error.find("degree not constant") != std::string::npos);
    }
    SUBCASE("tiny graphs are rejected") {
        CHECK_FALSE(ample_parameters(Graph::from_edges(1, {})).ok());
        CHECK_FALSE(ample_parameters(Graph::from_edges(0, {})).ok());
        CHECK_FALSE(ample_parameters(Graph::from_edges(3, {})).ok());  // edgeless
    }
    SUBCASE("non-constant lambda is reported with the offending edge") {
        // Circulant C_7(1,2): 4-regular, adjacent pairs have 1 or 2 common
        // neighbors depending on the step.
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 7; ++i) {
            edges.emplace_back(i, (i + 1) % 7);
            edges.emplace_back(i, (i + 2) % 7);
        }
        auto r = ample_parameters(Graph::from_edges(7, edges));
        CHECK_FALSE(r.ok());
        CHECK(r.error.find("lambda not constant") != std::string::npos);
    }
    SUBCASE("non-constant mu reports max with mu_exact=false") {
        // Hexagonal prism C_6 x K_2: triangle-free and 3-regular, distance-2
        // pairs have 1 or 2 common neighbors.
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 6; ++i) {
            edges.emplace_back(i, (i + 1) % 6);
            edges.emplace_back(6 + i, 6 + (i + 1) % 6);
            edges.emplace_back(i, 6 + i);
        }
        auto r = ample_parameters(Graph::from_edges(12, edges));
        REQUIRE(r.ok());
        CHECK(r->lambda == 0);
        CHECK(r->mu == 2);
        CHECK_FALSE(r->mu_exact);
    }
}

TEST_CASE("intersection_array") {
    SUBCASE("Petersen") {
        auto r = intersection_array(petersen());
        REQUIRE(r.ok());
        CHECK(r->b == std::vector<int>{3, 2});
        CHECK(r->c == std::vector<int>{1, 1});
        CHECK(r->str() == "{3,2; 1,1}");
    }
    SUBCASE("K_5 has diameter 1") {
        auto r = intersection_array(complete(5));
        REQUIRE(r.ok());
        CHECK(r->b == std::vector<int>{4});
        CHECK(r->c == std::vector<int>{1});
    }
    SUBCASE("C_6") {
        auto r = intersection_array(cycle(6));
        REQUIRE(r.ok());
        CHECK(r->b == std::vector<int>{2, 1, 1});
        CHECK(r->c == std::vector<int>{1, 1, 2});
    }
    SUBCASE("non-DRG fails with a named class") {
        // P_4 is not regular; the prism is regular but not distance-regular.
        Graph prism = Graph::from_edges(
            6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
        auto r = intersection_array(prism);
        CHECK_FALSE(r.ok());
        CHECK(r.error.find("not constant") != std::string::npos);
        CHECK_FALSE(intersection_array(path(4)).ok());
        Graph two_k3 = generate(FamilySpec::disjoint_cliques(2, 3)).graph;
        CHECK_FALSE(intersection_array(two_k3).ok());  // disconnected
    }
    SUBCASE("DRG implies sub-amply regular with lambda = b0-b1-1, mu = c2") {
        for (const char* name : {"hamming:2,5", "triangular:7", "johnson:6,3", "hamming:3,3"}) {
            auto lab = generate(FamilySpec::parse(name));
            auto arr = intersection_array(lab.graph);
            REQUIRE(arr.ok());
            auto amp = ample_parameters(lab.graph);
            REQUIRE(amp.ok());
            CHECK(amp->lambda == arr->b[0] - arr->b[1] - 1);
            CHECK(amp->mu == arr->c[1]);
        }
    }
}

TEST_CASE("find_claw") {
    SUBCASE("star") {
        Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        auto claw = find_claw(star, 3);
        REQUIRE(claw.has_value());
        CHECK(claw->center == 0);
        CHECK(claw->leaves == std::vector<int>{1, 2, 3});
    }
    SUBCASE("K_5 has no 2-claws") { CHECK_FALSE(find_claw(complete(5), 2).has_value()); }
    SUBCASE("Petersen has a 3-claw") {
        auto claw = find_claw(petersen(), 3);
        REQUIRE(claw.has_value());
        CHECK(claw->center == 0);
        // N(0) = {1, 4, 5}, pairwise nonadjacent in the Petersen graph.
        CHECK(claw->leaves == std::vector<int>{1, 4, 5});
        CHECK_FALSE(find_claw(petersen(), 4).has_value());
    }
    SUBCASE("absence is monotone in m") {
        for (const auto& g : {petersen(), cycle(7), generate(FamilySpec::lattice(4)).graph}) {
            int first_absent = 1;
            while (find_claw(g, first_absent)) ++first_absent;
            for (int m = first_absent; m < first_absent + 3; ++m)
                CHECK_FALSE(find_claw(g, m).has_value());
        }
    }
}

TEST_CASE("local_graph") {
    SUBCASE("rook 9x9: N(u) splits into two K_8") {
        Graph g = generate(FamilySpec::hamming(2, 9)).graph;
        auto local = local_graph(g, 0, LocalScope::open);
        CHECK(local.graph.vertex_count() == 16);
        auto comp_dist = local.graph.distances_from(0);
        int reach = 0;
        for (int d : comp_dist) reach += d >= 0;
        CHECK(reach == 8);  // one K_8 component
        CHECK(regular_degree(local.graph) == 7);
    }
    SUBCASE("Petersen: N(u) is independent") {
        auto local = local_graph(petersen(), 2, LocalScope::open);
        CHECK(local.graph.vertex_count() == 3);
        CHECK(local.graph.edge_count() == 0);
    }
    SUBCASE("K_5 closed neighborhood is K_5") {
        auto local = local_graph(complete(5), 3, LocalScope::closed);
        CHECK(local.graph.vertex_count() == 5);
        CHECK(local.graph.edge_count() == 10);
        CHECK(local.to_parent == std::vector<int>{0, 1, 2, 3, 4});
    }
    SUBCASE("relabeling maps edges back to the parent") {
        Graph g = petersen();
        auto local = local_graph(g, 0, LocalScope::closed);
        for (const auto& [a, b] : local.graph.edges())
            CHECK(g.has_edge(local.to_parent[a], local.to_parent[b]));
    }
}

TEST_CASE("local graphs of amply regular graphs are lambda-regular") {
    for (const char* name : {"hamming:2,6", "triangular:8", "paley:13", "latin:4", "sts:13"}) {
        auto lab = generate(FamilySpec::parse(name));
        auto amp = ample_parameters(lab.graph);
        REQUIRE(amp.ok());
        REQUIRE(amp->mu_exact);
        auto local = local_graph(lab.graph, 0, LocalScope::open);
        CHECK(regular_degree(local.graph) == amp->lambda);
    }
}

TEST_CASE("edge list round trip") {
    SUBCASE("read with and without header") {
        std::istringstream plain("0 1\n1 2\n");
        Graph g = read_edge_list(plain);
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 2);

        std::istringstream with_header("# comment\nn 5\n0 1\n\n1 2\n");
        Graph h = read_edge_list(with_header);
        CHECK(h.vertex_count() == 5);
        CHECK(h.edge_count() == 2);
    }
    SUBCASE("write then read is the identity") {
        for (const auto& g : {petersen(), cycle(6), generate(FamilySpec::lattice(4)).graph}) {
            std::ostringstream os;
            write_edge_list(os, g);
            std::istringstream is(os.str());
            Graph back = read_edge_list(is);
            CHECK(back.vertex_count() == g.vertex_count());
            CHECK(back.edges() == g.edges());
            // And the canonical text is a fixed point.
            std::ostringstream os2;
            write_edge_list(os2, back);
            CHECK(os2.str() == os.str());
        }
    }
    SUBCASE("malformed input is rejected") {
        std::istringstream bad("0 x\n");
        CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
    }
}
