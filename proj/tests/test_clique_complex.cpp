#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "closedgraphs/clique_complex.hpp"
#include "closedgraphs/error.hpp"
#include "closedgraphs/oracle.hpp"
#include "test_support.hpp"

using namespace closedgraphs;

namespace {

using Named = std::vector<std::vector<std::string>>;

Named named_facets(const SimplicialComplex& c) {
    Named out;
    for (std::size_t f = 0; f < c.facet_count(); ++f) out.push_back(c.facet_names(f));
    return out;
}

const Graph& counterexample() {
    static const Graph g = load_graph("a b\na c\nb c\nb d\nb e\nc d\nc e\nd e\nb f\ne f\n");
    return g;
}

SimplicialComplex example_complex() {
    return SimplicialComplex::from_named_facets({{"a", "b", "f"}, {"a", "e", "f"}, {"b", "c", "f"}, {"d", "e", "f"}});
}

// Maximal cliques by subset enumeration.
std::vector<VertexSet> maximal_cliques_by_subsets(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<VertexSet> cliques;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexSet s;
        for (Vertex v = 0; v < n; ++v) {
            if (mask >> v & 1) s.push_back(v);
        }
        if (is_clique(g, s)) cliques.push_back(s);
    }
    std::vector<VertexSet> maximal;
    for (const auto& c : cliques) {
        const bool dominated = std::any_of(cliques.begin(), cliques.end(), [&](const VertexSet& d) {
            return d.size() > c.size() && is_subset(c, d);
        });
        if (!dominated) maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

bool some_order_works(const SimplicialComplex& c) {
    std::vector<std::size_t> order(c.facet_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
        if (is_linear_quasi_tree_order(c, order)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

}  // namespace

TEST_CASE("clique_complex examples") {
    CHECK(named_facets(clique_complex(counterexample())) ==
          Named{{"a", "b", "c"}, {"b", "c", "d", "e"}, {"b", "e", "f"}});
    const auto k4 = clique_complex(load_graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4"));
    REQUIRE(k4.facet_count() == 1);
    CHECK(k4.facet(0).size() == 4);
    CHECK(named_facets(clique_complex(load_graph("1 2\n2 3"))) == Named{{"1", "2"}, {"2", "3"}});
}

TEST_CASE("clique_complex matches subset enumeration and is an antichain") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for_each_labelled_graph(n, [](const Graph& g) {
            const auto complex = clique_complex(g);
            REQUIRE(complex.facets() == maximal_cliques_by_subsets(g));
            for (std::size_t a = 0; a < complex.facet_count(); ++a) {
                for (std::size_t b = 0; b < complex.facet_count(); ++b) {
                    if (a != b) REQUIRE_FALSE(is_subset(complex.facet(a), complex.facet(b)));
                }
            }
        });
    }
}

TEST_CASE("complex construction canonicalises and validates") {
    const auto c = SimplicialComplex::from_named_facets({{"z", "y"}, {"b", "a"}, {"a", "b"}});
    CHECK(named_facets(c) == Named{{"a", "b"}, {"y", "z"}});
    CHECK_THROWS_AS(SimplicialComplex::from_named_facets({{"a", "b"}, {"a"}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_named_facets({{}}), InputError);
}

TEST_CASE("leaf_branches") {
    const auto c = example_complex();
    const auto branches = leaf_branches(c, 2);
    CHECK(std::find(branches.begin(), branches.end(), 0) != branches.end());
    CHECK(branches == std::vector<std::size_t>{0});
    CHECK(leaf_branches(c, 0).empty());
    CHECK_FALSE(is_leaf(c, 0));
    CHECK_FALSE(is_leaf(c, 1));
    CHECK(is_leaf(c, 2));

    const auto single = SimplicialComplex::from_named_facets({{"x", "y", "z"}});
    CHECK(leaf_branches(single, 0).empty());
    CHECK(is_leaf(single, 0));
}

TEST_CASE("linear_quasi_tree_order examples") {
    const auto order = linear_quasi_tree_order(example_complex());
    REQUIRE(order);
    CHECK(order->order() == std::vector<std::size_t>{2, 0, 1, 3});
    CHECK(order->is_linear_quasi_tree());

    const auto counter = linear_quasi_tree_order(clique_complex(counterexample()));
    REQUIRE(counter);
    CHECK(counter->order() == std::vector<std::size_t>{0, 1, 2});

    // Facets {1,2},{3,4},{5,6},{2,3},{4,5} sort to the path {1,2},{2,3},{3,4},{4,5},{5,6}.
    const auto path = SimplicialComplex::from_named_facets({{"1", "2"}, {"3", "4"}, {"5", "6"}, {"2", "3"}, {"4", "5"}});
    const auto path_order = linear_quasi_tree_order(path);
    REQUIRE(path_order);
    CHECK(path_order->order() == std::vector<std::size_t>{0, 1, 2, 3, 4});

    CHECK_FALSE(linear_quasi_tree_order(clique_complex(load_graph("c 1\nc 2\nc 3"))));
    CHECK_FALSE(linear_quasi_tree_order(clique_complex(load_graph("1 2\n2 3\n3 4\n1 4"))));
}

TEST_CASE("peeling finds an order exactly when some permutation is a leaf order") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for_each_labelled_graph(n, [](const Graph& g) {
            const auto complex = clique_complex(g);
            if (complex.facet_count() > 7) return;
            const auto order = linear_quasi_tree_order(complex);
            REQUIRE(order.has_value() == some_order_works(complex));
            if (order) REQUIRE(is_linear_quasi_tree_order(complex, order->order()));
        }, true);
    }
}

TEST_CASE("with_order tags invalid orders as unordered") {
    const auto c = example_complex();
    CHECK(OrderedComplex::with_order(c, {2, 0, 1, 3}).is_linear_quasi_tree());
    const auto bad = OrderedComplex::with_order(c, {0, 1, 2, 3});
    CHECK(bad.kind() == OrderKind::unordered);
    CHECK_THROWS_AS(intersection_table(bad), InputError);
    CHECK_THROWS_AS(OrderedComplex::with_order(c, {0, 1, 2}), InputError);
    CHECK_THROWS_AS(OrderedComplex::with_order(c, {0, 1, 2, 2}), InputError);
}

TEST_CASE("intersection_table examples") {
    const auto two = linear_quasi_tree_order(SimplicialComplex::from_named_facets({{"a", "b"}, {"b", "c"}}));
    REQUIRE(two);
    const auto t2 = intersection_table(*two);
    CHECK(two->complex().vertex_names().at(t2.cell(1, 2).at(0)) == "b");
    CHECK(t2.cell(1, 2).size() == 1);

    const auto counter = linear_quasi_tree_order(clique_complex(counterexample()));
    const auto t = intersection_table(*counter);
    const Graph& g = counterexample();
    CHECK(g.names_of(t.cell(1, 2)) == std::vector<std::string>{"b", "c"});
    CHECK(g.names_of(t.cell(2, 3)) == std::vector<std::string>{"b", "e"});
    CHECK(g.names_of(t.cell(1, 3)) == std::vector<std::string>{"b"});
    CHECK(t.cell(0, 2).empty());
    CHECK(t.cell(1, 4).empty());

    const auto intervals = OrderedComplex::with_order(
        SimplicialComplex::from_named_facets({{"1", "2", "3"}, {"2", "3", "4", "5"}, {"4", "5", "6"}}), {0, 1, 2});
    REQUIRE(intervals.is_linear_quasi_tree());
    const auto ti = intersection_table(intervals);
    const auto& names = intervals.complex().vertex_names();
    auto as_names = [&](const VertexSet& s) {
        std::vector<std::string> out;
        for (Vertex v : s) out.push_back(names[v]);
        return out;
    };
    CHECK(ti.cell(1, 3).empty());
    CHECK(as_names(ti.cell(1, 2)) == std::vector<std::string>{"2", "3"});
    CHECK(as_names(ti.cell(2, 3)) == std::vector<std::string>{"4", "5"});
}

TEST_CASE("pairwise cells equal run intersections on every accepted leaf order") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for_each_labelled_graph(n, [](const Graph& g) {
            const auto order = linear_quasi_tree_order(clique_complex(g));
            if (!order) return;
            const auto t = intersection_table(*order);
            const auto r = static_cast<std::ptrdiff_t>(t.facet_count());
            for (std::ptrdiff_t i = 1; i <= r; ++i) {
                VertexSet run = order->at(static_cast<std::size_t>(i));
                for (std::ptrdiff_t j = i + 1; j <= r; ++j) {
                    run = intersect(run, order->at(static_cast<std::size_t>(j)));
                    REQUIRE(intersect(order->at(static_cast<std::size_t>(i)), order->at(static_cast<std::size_t>(j))) ==
                            run);
                    for (std::ptrdiff_t k = i; k <= j; ++k) {
                        for (std::ptrdiff_t l = k; l <= j; ++l) REQUIRE(is_subset(t.cell(i, j), t.cell(k, l)));
                    }
                }
            }
        }, true);
    }
}

TEST_CASE("is_closed_complex examples") {
    const auto counter = linear_quasi_tree_order(clique_complex(counterexample()));
    const auto check = is_closed_complex(*counter);
    CHECK_FALSE(check.closed);
    REQUIRE(check.violation);
    CHECK(check.violation->condition == ClosedComplexViolation::Condition::covering);
    CHECK(check.violation->i == 1);
    CHECK(check.violation->d() == 1);
    CHECK(check.violation->describe() == "(C) fails at i=1,d=1");

    const auto intervals = OrderedComplex::with_order(
        SimplicialComplex::from_named_facets({{"1", "2", "3"}, {"2", "3", "4", "5"}, {"4", "5", "6"}}), {0, 1, 2});
    CHECK(is_closed_complex(intervals).closed);

    const auto single = linear_quasi_tree_order(SimplicialComplex::from_named_facets({{"x", "y"}}));
    CHECK(is_closed_complex(*single).closed);

    const auto example = linear_quasi_tree_order(example_complex());
    const auto ex = is_closed_complex(*example);
    CHECK_FALSE(ex.closed);
    CHECK(ex.violation->condition == ClosedComplexViolation::Condition::incomparability);
}

TEST_CASE("facets_are_intervals") {
    const auto c = SimplicialComplex::from_named_facets({{"1", "2", "3"}, {"3", "4"}});
    CHECK(facets_are_intervals(c, Labelling::from_order({"1", "2", "3", "4"})));
    CHECK_FALSE(facets_are_intervals(c, Labelling::from_order({"1", "3", "2", "4"})));
    const auto gap = SimplicialComplex::from_named_facets({{"1", "3"}});
    CHECK_FALSE(facets_are_intervals(gap, Labelling::from_order({"1", "2", "3"})));
}

TEST_CASE("interval clique families: exact facets, closed under the identity order") {
    RandomSource rs(11);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = rs.between(2, 14);
        const std::size_t r = rs.between(1, n - 1);
        const ClosedSample s = random_closed_graph(rs, n, r);
        const auto complex = clique_complex(s.graph);
        REQUIRE(complex.facet_count() == r);
        for (std::size_t i = 0; i < r; ++i) {
            const auto [lo, hi] = s.intervals[i];
            VertexSet expected(hi - lo + 1);
            std::iota(expected.begin(), expected.end(), lo - 1);
            REQUIRE(complex.facet(i) == expected);
        }
        CHECK(facets_are_intervals(complex, s.labelling));
        std::vector<std::size_t> identity(r);
        std::iota(identity.begin(), identity.end(), std::size_t{0});
        const auto ordered = OrderedComplex::with_order(complex, identity);
        REQUIRE(ordered.is_linear_quasi_tree());
        REQUIRE(is_closed_complex(ordered).closed);
    }
}

TEST_CASE("graphs closed under the identity labelling have a leaf order") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for_each_labelled_graph(n, [](const Graph& g) {
            if (is_closed_wrt(g, Labelling::identity(g)).closed) REQUIRE(linear_quasi_tree_order(clique_complex(g)));
        }, true);
    }
}
