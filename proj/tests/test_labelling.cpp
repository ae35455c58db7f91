#include "doctest.h"

#include "closedgraphs/error.hpp"
#include "closedgraphs/labelling.hpp"
#include "closedgraphs/oracle.hpp"
#include "test_support.hpp"

using namespace closedgraphs;

namespace {

using Names = std::vector<std::string>;

OrderedComplex interval_complex() {
    return OrderedComplex::with_order(
        SimplicialComplex::from_named_facets({{"1", "2", "3"}, {"2", "3", "4", "5"}, {"4", "5", "6"}}), {0, 1, 2});
}

Names block_names(const OrderedComplex& oc, const Block& b) {
    Names out;
    for (Vertex v : b.vertices) out.push_back(oc.complex().vertex_names()[v]);
    return out;
}

void check_certificate(const Graph& g, const LabellingResult& result) {
    REQUIRE(result.closed());
    std::size_t covered = 0;
    for (const auto& cert : result.certificate) {
        const auto t = intersection_table(cert.complex);
        REQUIRE(membership_window_holds(t, cert.blocks));
        REQUIRE(union_claim_holds(t));
        for (const auto& block : cert.blocks.blocks) covered += block.vertices.size();
    }
    REQUIRE(covered == g.size());
    REQUIRE(is_closed_wrt(g, *result.labelling).closed);
}

}  // namespace

TEST_CASE("border chain and blocks of two facets sharing one vertex") {
    const auto oc = OrderedComplex::with_order(SimplicialComplex::from_named_facets({{"a", "b"}, {"b", "c"}}), {0, 1});
    const auto t = intersection_table(oc);
    const auto chain = border_chain(t);
    CHECK(chain.reach == std::vector<std::size_t>{2, 2});
    const auto p = residual_blocks(t, chain);
    REQUIRE(p.blocks.size() == 3);
    CHECK(block_names(oc, p.blocks[0]) == Names{"a"});
    CHECK(block_names(oc, p.blocks[1]) == Names{"b"});
    CHECK(block_names(oc, p.blocks[2]) == Names{"c"});
    CHECK(closed_labelling(oc).order() == Names{"a", "b", "c"});
}

TEST_CASE("single facet is one block") {
    const auto oc = OrderedComplex::with_order(SimplicialComplex::from_named_facets({{"q", "p", "r"}}), {0});
    const auto t = intersection_table(oc);
    const auto chain = border_chain(t);
    CHECK(chain.reach == std::vector<std::size_t>{1});
    const auto p = residual_blocks(t, chain);
    REQUIRE(p.blocks.size() == 1);
    CHECK(block_names(oc, p.blocks[0]) == Names{"p", "q", "r"});
    CHECK(closed_labelling(oc).order() == Names{"p", "q", "r"});
}

TEST_CASE("interval facets [1,3], [2,5], [4,6]") {
    const auto oc = interval_complex();
    const auto t = intersection_table(oc);
    const auto chain = border_chain(t);
    CHECK(chain.reach == std::vector<std::size_t>{2, 3, 3});
    const auto p = residual_blocks(t, chain);
    REQUIRE(p.blocks.size() == 4);
    CHECK(block_names(oc, p.blocks[0]) == Names{"1"});
    CHECK(block_names(oc, p.blocks[1]) == Names{"2", "3"});
    CHECK(block_names(oc, p.blocks[2]) == Names{"4", "5"});
    CHECK(block_names(oc, p.blocks[3]) == Names{"6"});
    CHECK(p.blocks[1].i == 1);
    CHECK(p.blocks[1].j == 2);
    CHECK(p.blocks[2].i == 2);
    CHECK(p.blocks[2].j == 3);
    CHECK(membership_window_holds(t, p));
    CHECK(union_claim_holds(t));
    CHECK(closed_labelling(oc).order() == Names{"1", "2", "3", "4", "5", "6"});
}

TEST_CASE("closed_labelling refuses complexes that are not closed") {
    const auto example = linear_quasi_tree_order(
        SimplicialComplex::from_named_facets({{"a", "b", "f"}, {"a", "e", "f"}, {"b", "c", "f"}, {"d", "e", "f"}}));
    REQUIRE(example);
    CHECK_THROWS_AS(closed_labelling(*example), InputError);

    const auto unordered = OrderedComplex::with_order(
        SimplicialComplex::from_named_facets({{"1", "2"}, {"2", "3"}, {"3", "4"}}), {0, 2, 1});
    CHECK_THROWS_AS(closed_labelling(unordered), InputError);
}

TEST_CASE("find_closed_labelling examples") {
    const auto claw = find_closed_labelling(load_graph("c 1\nc 2\nc 3"));
    CHECK_FALSE(claw.closed());
    REQUIRE(claw.failure);
    CHECK(claw.failure->stage == LabellingFailure::Stage::quasi_tree);
    REQUIRE(claw.failure->claw);
    CHECK(claw.failure->claw->center == "c");

    const auto c4 = find_closed_labelling(load_graph("1 2\n2 3\n3 4\n1 4"));
    CHECK_FALSE(c4.closed());
    CHECK(c4.failure->stage == LabellingFailure::Stage::quasi_tree);
    CHECK_FALSE(c4.failure->claw);

    const Graph path = load_graph("a b\nb c\nc d");
    const auto p = find_closed_labelling(path);
    REQUIRE(p.closed());
    CHECK(p.labelling->order() == Names{"a", "b", "c", "d"});

    const auto counter = find_closed_labelling(load_graph("a b\na c\nb c\nb d\nb e\nc d\nc e\nd e\nb f\ne f\n"));
    CHECK_FALSE(counter.closed());
    CHECK(counter.failure->stage == LabellingFailure::Stage::closed_complex);
    REQUIRE(counter.failure->violation);
    CHECK(counter.failure->violation->describe() == "(C) fails at i=1,d=1");
    CHECK(counter.failure->order == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("components are labelled consecutively") {
    const Graph g = load_graph("x y\ny z\na b");
    const auto r = find_closed_labelling(g);
    REQUIRE(r.closed());
    CHECK(r.labelling->order() == Names{"a", "b", "x", "y", "z"});
    REQUIRE(r.certificate.size() == 2);
    CHECK(r.certificate[1].label_offset == 2);

    const auto mixed = find_closed_labelling(load_graph("a b\nc 1\nc 2\nc 3"));
    CHECK_FALSE(mixed.closed());
    CHECK(mixed.failure->component == 0);  // "1" sorts before "a"
    CHECK(mixed.failure->component_vertices == Names{"1", "2", "3", "c"});
}

TEST_CASE("pipeline and exhaustive search agree on all labelled graphs up to 5 vertices") {
    for (std::size_t n = 2; n <= 5; ++n) {
        for_each_labelled_graph(n, [](const Graph& g) {
            const auto result = find_closed_labelling(g);
            REQUIRE(result.closed() == brute_force_closed(g).has_value());
            if (result.closed()) check_certificate(g, result);
        });
    }
}

TEST_CASE("pipeline and exhaustive search agree on connected 6-vertex graphs") {
    std::size_t closed = 0;
    for_each_labelled_graph(6, [&](const Graph& g) {
        const auto result = find_closed_labelling(g);
        REQUIRE(result.closed() == brute_force_closed(g).has_value());
        closed += result.closed();
    }, true);
    CHECK(closed > 0);
}

TEST_CASE("scrambled closed graphs are recognised with valid certificates") {
    RandomSource rs(5);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = rs.between(2, 16);
        const std::size_t r = rs.between(1, n - 1);
        const Graph g = test::scrambled(rs, random_closed_graph(rs, n, r).graph);
        check_certificate(g, find_closed_labelling(g));
    }
}

TEST_CASE("failures on random graphs carry a certificate of non-closedness") {
    RandomSource rs(9);
    for (int k = 0; k < 200; ++k) {
        const Graph g = test::random_graph(rs, 8, 45);
        const auto result = find_closed_labelling(g);
        REQUIRE(result.closed() == brute_force_closed(g).has_value());
        if (result.closed()) continue;
        const auto& f = *result.failure;
        CHECK_FALSE(f.describe().empty());
        if (f.stage == LabellingFailure::Stage::closed_complex) {
            REQUIRE(f.order);
            REQUIRE(f.violation);
        } else {
            CHECK_FALSE(f.order);
        }
    }
}
