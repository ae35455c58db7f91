#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "closedgraphs/graph.hpp"

namespace closedgraphs {

/// Simplicial complex given by its facets. Vertices are indices into the
/// sorted name list; facets are kept in canonical order (lexicographic on
/// their sorted member lists), which fixes the meaning of a facet index.
class SimplicialComplex {
public:
    /// Throws InputError on empty or nested facets. Duplicates collapse.
    static SimplicialComplex from_named_facets(const std::vector<std::vector<std::string>>& facets);
    /// Facets over the vertex names of `g`.
    static SimplicialComplex from_facets(const Graph& g, std::vector<VertexSet> facets);

    std::size_t facet_count() const { return facets_.size(); }
    const VertexSet& facet(std::size_t index) const { return facets_.at(index); }
    const std::vector<VertexSet>& facets() const { return facets_; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    std::vector<std::string> facet_names(std::size_t index) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(std::vector<std::string> names, std::vector<VertexSet> facets);

    std::vector<std::string> names_;
    std::vector<VertexSet> facets_;
};

/// Facets are exactly the maximal cliques of `g` (Bron-Kerbosch with pivoting).
SimplicialComplex clique_complex(const Graph& g);

VertexSet intersect(const VertexSet& a, const VertexSet& b);
VertexSet unite(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

/// Branches of facet `f` inside the subcomplex spanned by `members` (facet
/// indices, which must include `f`): the facets B != f with H∩F ⊆ B∩F for
/// every other member H. Empty means `f` is not a leaf there, except that
/// a lone facet is a leaf by convention (see is_leaf).
std::vector<std::size_t> leaf_branches(const SimplicialComplex& c, std::size_t f,
                                       std::span<const std::size_t> members);
std::vector<std::size_t> leaf_branches(const SimplicialComplex& c, std::size_t f);
bool is_leaf(const SimplicialComplex& c, std::size_t f);

enum class OrderKind { linear_quasi_tree, unordered };

/// Complex together with an ordering of its facets. When tagged
/// linear_quasi_tree, every facet is a leaf of the subcomplex formed by it
/// and its successors, with its successor as the only branch.
class OrderedComplex {
public:
    /// Tags `order` as linear_quasi_tree when it satisfies the leaf-order
    /// conditions, unordered otherwise. Throws InputError if `order` is
    /// not a permutation of the facet indices.
    static OrderedComplex with_order(SimplicialComplex complex, std::vector<std::size_t> order);

    const SimplicialComplex& complex() const { return complex_; }
    const std::vector<std::size_t>& order() const { return order_; }
    OrderKind kind() const { return kind_; }
    bool is_linear_quasi_tree() const { return kind_ == OrderKind::linear_quasi_tree; }
    std::size_t size() const { return order_.size(); }
    /// Facet at 1-based position `position` of the order.
    const VertexSet& at(std::size_t position) const { return complex_.facet(order_.at(position - 1)); }

private:
    OrderedComplex(SimplicialComplex complex, std::vector<std::size_t> order, OrderKind kind)
        : complex_(std::move(complex)), order_(std::move(order)), kind_(kind) {}

    SimplicialComplex complex_;
    std::vector<std::size_t> order_;
    OrderKind kind_;
};

/// Checks both leaf-order conditions for a complete facet order.
bool is_linear_quasi_tree_order(const SimplicialComplex& c, std::span<const std::size_t> order);

/// Peels leaves with a unique branch; each starting facet is tried in index
/// order and the chain from it is forced. Returns nullopt when no start works.
std::optional<OrderedComplex> linear_quasi_tree_order(const SimplicialComplex& c);

/// The cells F_{i,j} = F_i ∩ F_j of an ordered complex, 1-based, with
/// F_{i,i} = F_i and every cell outside 1 <= i <= j <= r empty.
class IntersectionTable {
public:
    std::size_t facet_count() const { return r_; }
    const VertexSet& cell(std::ptrdiff_t i, std::ptrdiff_t j) const;
    bool empty_cell(std::ptrdiff_t i, std::ptrdiff_t j) const { return cell(i, j).empty(); }
    const VertexSet& vertices() const { return vertices_; }

private:
    friend IntersectionTable intersection_table(const OrderedComplex&);

    std::size_t r_ = 0;
    std::vector<VertexSet> cells_;
    VertexSet vertices_;
};

/// Requires a linear quasi-tree order (InputError otherwise). Verifies that
/// each pairwise cell equals the intersection of the whole run F_i..F_j and
/// throws InternalError if not.
IntersectionTable intersection_table(const OrderedComplex& oc);

struct ClosedComplexViolation {
    enum class Condition { incomparability, covering };
    Condition condition;
    // incomparability: cells (i,j) and (k,l) are nested.
    // covering: F_{i+1,i+d} != F_{i,i+d} ∪ F_{i+1,i+d+1}, with k = d and l unused.
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    std::size_t l = 0;

    std::size_t d() const { return k; }
    std::string describe() const;
};

struct ClosedComplexCheck {
    bool closed = true;
    std::optional<ClosedComplexViolation> violation;
};

ClosedComplexCheck is_closed_complex(const IntersectionTable& t);
ClosedComplexCheck is_closed_complex(const OrderedComplex& oc);

/// True iff the label set of every facet is a contiguous range.
bool facets_are_intervals(const SimplicialComplex& c, const Labelling& lab);

}  // namespace closedgraphs
