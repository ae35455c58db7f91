#include "doctest.h"

#include <algorithm>

#include "closedgraphs/error.hpp"
#include "closedgraphs/graph.hpp"
#include "test_support.hpp"

using namespace closedgraphs;

TEST_CASE("load_graph parses edges and collapses duplicates") {
    const Graph g = load_graph("a b\nb c");
    CHECK(g.names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));

    const Graph single = load_graph("a b\nb a");
    CHECK(single.edge_count() == 1);
    CHECK(single.size() == 2);
}

TEST_CASE("load_graph skips comments and blank lines") {
    const Graph g = load_graph("# header\n\n  x   y  \n# y z\ny z\n");
    CHECK(g.names() == std::vector<std::string>{"x", "y", "z"});
    CHECK(g.edge_count() == 2);
}

TEST_CASE("load_graph rejects loops, empty input and malformed lines") {
    try {
        load_graph("a b\na a\n");
        FAIL("loop accepted");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(load_graph(""), InputError);
    CHECK_THROWS_AS(load_graph("# only a comment\n"), InputError);
    CHECK_THROWS_AS(load_graph("a b c\n"), InputError);
    CHECK_THROWS_AS(load_graph("a\n"), InputError);
    CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.el"), InputError);
}

TEST_CASE("split_neighborhood") {
    const Graph path = load_graph("1 2\n2 3");
    const auto lab = Labelling::identity(path);
    auto split = split_neighborhood(path, lab, "2");
    CHECK(path.names_of(split.below) == std::vector<std::string>{"1"});
    CHECK(path.names_of(split.above) == std::vector<std::string>{"3"});

    const Graph k3 = load_graph("1 2\n2 3\n1 3");
    split = split_neighborhood(k3, Labelling::identity(k3), "2");
    CHECK(k3.names_of(split.below) == std::vector<std::string>{"1"});
    CHECK(k3.names_of(split.above) == std::vector<std::string>{"3"});

    const Graph star = load_graph("1 2\n1 3\n1 4");
    split = split_neighborhood(star, Labelling::identity(star), "1");
    CHECK(split.below.empty());
    CHECK(star.names_of(split.above) == std::vector<std::string>{"2", "3", "4"});

    CHECK_THROWS_AS(split_neighborhood(star, Labelling::identity(star), "9"), InputError);
}

TEST_CASE("split_neighborhood sides are disjoint and cover the neighbourhood") {
    for_each_labelled_graph(5, [](const Graph& g) {
        const auto lab = Labelling::identity(g);
        for (Vertex v = 0; v < g.size(); ++v) {
            const auto split = split_neighborhood(g, lab, v);
            VertexSet joined = split.below;
            joined.insert(joined.end(), split.above.begin(), split.above.end());
            std::sort(joined.begin(), joined.end());
            REQUIRE(joined == g.neighbors(v));
            REQUIRE(split.below.size() + split.above.size() == g.neighbors(v).size());
        }
    });
}

TEST_CASE("is_clique") {
    const Graph k3 = load_graph("1 2\n2 3\n1 3");
    CHECK(is_clique(k3, {0, 1, 2}));
    const Graph path = load_graph("1 2\n2 3");
    CHECK_FALSE(is_clique(path, {0, 2}));
    CHECK(is_clique(path, {}));
    CHECK(is_clique(path, {1}));
    CHECK_THROWS_AS(is_clique(path, {0, 7}), InputError);
}

TEST_CASE("is_closed_wrt examples") {
    const Graph claw = load_graph("1 2\n1 3\n1 4");
    const auto check = is_closed_wrt(claw, Labelling::identity(claw));
    REQUIRE_FALSE(check.closed);
    REQUIRE(check.witness);
    CHECK(claw.name(check.witness->center) == "1");
    CHECK(claw.name(check.witness->first) == "2");
    CHECK(claw.name(check.witness->second) == "3");
    CHECK(check.witness->above);

    const Graph path = load_graph("1 2\n2 3");
    CHECK(is_closed_wrt(path, Labelling::identity(path)).closed);

    const Graph k5 = load_graph("a b\na c\na d\na e\nb c\nb d\nb e\nc d\nc e\nd e");
    CHECK(is_closed_wrt(k5, Labelling::from_order({"d", "a", "e", "c", "b"})).closed);
}

TEST_CASE("labelling must match the vertex set") {
    const Graph path = load_graph("1 2\n2 3");
    CHECK_THROWS_AS(is_closed_wrt(path, Labelling::from_order({"1", "2"})), InputError);
    CHECK_THROWS_AS(Labelling::from_order({"a", "a"}), InputError);
}

TEST_CASE("neighbourhood-clique test agrees with the edge-pair condition on all labelled graphs up to 6 vertices") {
    // Identity labellings of every labelled graph cover every (graph, labelling) pair up to renaming.
    std::size_t graphs = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        for_each_labelled_graph(n, [&](const Graph& g) {
            ++graphs;
            const auto lab = Labelling::identity(g);
            REQUIRE(is_closed_wrt(g, lab).closed == is_closed_wrt_edge_pairs(g, lab));
        });
    }
    CHECK(graphs == 1 + 4 + 41 + 768 + 27449);  // labelled graphs without isolated vertices
}

TEST_CASE("a graph closed under some labelling has no induced claw") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for_each_labelled_graph(n, [](const Graph& g) {
            if (is_closed_wrt(g, Labelling::identity(g)).closed) REQUIRE_FALSE(find_induced_claw(g));
        });
    }
}

TEST_CASE("find_induced_claw") {
    const Graph claw = load_graph("c x\nc y\nc z");
    const auto found = find_induced_claw(claw);
    REQUIRE(found);
    CHECK(claw.name(found->center) == "c");

    CHECK_FALSE(find_induced_claw(load_graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4")));

    const Graph counter = load_graph("a b\na c\nb c\nb d\nb e\nc d\nc e\nd e\nb f\ne f\n");
    const auto claw2 = find_induced_claw(counter);
    REQUIRE(claw2);
    CHECK(counter.name(claw2->center) == "b");
    CHECK(counter.names_of({claw2->leaves.begin(), claw2->leaves.end()}) == std::vector<std::string>{"a", "d", "f"});
}

TEST_CASE("connected_components") {
    const auto two = connected_components(load_graph("a b\nc d"));
    REQUIRE(two.size() == 2);
    CHECK(two[0].names() == std::vector<std::string>{"a", "b"});
    CHECK(two[1].names() == std::vector<std::string>{"c", "d"});

    const Graph path = load_graph("a b\nb c\nc d");
    const auto one = connected_components(path);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == path);

    const auto triangles = connected_components(load_graph("1 2\n2 3\n1 3\n4 5\n5 6\n4 6"));
    REQUIRE(triangles.size() == 2);
    CHECK(triangles[0].edge_count() == 3);
    CHECK(triangles[1].edge_count() == 3);
}
