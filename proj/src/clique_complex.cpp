#include "closedgraphs/clique_complex.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "closedgraphs/error.hpp"

namespace closedgraphs {

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> names, std::vector<VertexSet> facets)
    : names_(std::move(names)), facets_(std::move(facets)) {
    for (auto& f : facets_) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) throw InputError("complex has an empty facet");
    }
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    for (std::size_t a = 0; a < facets_.size(); ++a) {
        for (std::size_t b = 0; b < facets_.size(); ++b) {
            if (a != b && is_subset(facets_[a], facets_[b])) {
                throw InputError("facet " + std::to_string(a) + " is contained in facet " + std::to_string(b));
            }
        }
    }
}

SimplicialComplex SimplicialComplex::from_named_facets(const std::vector<std::vector<std::string>>& facets) {
    std::set<std::string> all;
    for (const auto& f : facets) all.insert(f.begin(), f.end());
    std::vector<std::string> names(all.begin(), all.end());
    std::vector<VertexSet> indexed;
    for (const auto& f : facets) {
        VertexSet s;
        for (const auto& name : f) {
            s.push_back(static_cast<Vertex>(std::lower_bound(names.begin(), names.end(), name) - names.begin()));
        }
        indexed.push_back(std::move(s));
    }
    return SimplicialComplex(std::move(names), std::move(indexed));
}

SimplicialComplex SimplicialComplex::from_facets(const Graph& g, std::vector<VertexSet> facets) {
    return SimplicialComplex(g.names(), std::move(facets));
}

std::vector<std::string> SimplicialComplex::facet_names(std::size_t index) const {
    std::vector<std::string> out;
    for (Vertex v : facet(index)) out.push_back(names_.at(v));
    return out;
}

namespace {

// Tomita-style pivoting: the pivot maximises |P ∩ N(u)|.
void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p.empty()) {
        if (x.empty()) out.push_back(r);
        return;
    }
    Vertex pivot = p.front();
    std::size_t best = intersect(p, g.neighbors(pivot)).size();
    for (const VertexSet* side : {&p, &x}) {
        for (Vertex u : *side) {
            const std::size_t hits = intersect(p, g.neighbors(u)).size();
            if (hits > best) {
                best = hits;
                pivot = u;
            }
        }
    }
    VertexSet candidates;
    std::set_difference(p.begin(), p.end(), g.neighbors(pivot).begin(), g.neighbors(pivot).end(),
                        std::back_inserter(candidates));
    for (Vertex v : candidates) {
        r.push_back(v);
        bron_kerbosch(g, r, intersect(p, g.neighbors(v)), intersect(x, g.neighbors(v)), out);
        r.pop_back();
        p.erase(std::lower_bound(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace

SimplicialComplex clique_complex(const Graph& g) {
    VertexSet all(g.size());
    for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
    std::vector<VertexSet> cliques;
    VertexSet r;
    bron_kerbosch(g, r, all, {}, cliques);
    return SimplicialComplex::from_facets(g, std::move(cliques));
}

std::vector<std::size_t> leaf_branches(const SimplicialComplex& c, std::size_t f,
                                       std::span<const std::size_t> members) {
    const VertexSet& facet = c.facet(f);
    std::vector<std::size_t> branches;
    for (std::size_t b : members) {
        if (b == f) continue;
        const VertexSet shared = intersect(c.facet(b), facet);
        const bool dominates = std::all_of(members.begin(), members.end(), [&](std::size_t h) {
            return h == f || h == b || is_subset(intersect(c.facet(h), facet), shared);
        });
        if (dominates) branches.push_back(b);
    }
    return branches;
}

std::vector<std::size_t> leaf_branches(const SimplicialComplex& c, std::size_t f) {
    if (f >= c.facet_count()) throw InputError("facet index out of range");
    std::vector<std::size_t> all(c.facet_count());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    return leaf_branches(c, f, all);
}

bool is_leaf(const SimplicialComplex& c, std::size_t f) {
    return c.facet_count() == 1 || !leaf_branches(c, f).empty();
}

bool is_linear_quasi_tree_order(const SimplicialComplex& c, std::span<const std::size_t> order) {
    if (order.size() != c.facet_count()) return false;
    for (std::size_t pos = 0; pos + 1 < order.size(); ++pos) {
        const auto branches = leaf_branches(c, order[pos], order.subspan(pos));
        if (branches.size() != 1 || branches.front() != order[pos + 1]) return false;
    }
    return true;
}

OrderedComplex OrderedComplex::with_order(SimplicialComplex complex, std::vector<std::size_t> order) {
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != k || sorted.size() != complex.facet_count()) {
            throw InputError("facet order is not a permutation of the facet indices");
        }
    }
    const OrderKind kind =
        is_linear_quasi_tree_order(complex, order) ? OrderKind::linear_quasi_tree : OrderKind::unordered;
    return OrderedComplex(std::move(complex), std::move(order), kind);
}

std::optional<OrderedComplex> linear_quasi_tree_order(const SimplicialComplex& c) {
    const std::size_t q = c.facet_count();
    for (std::size_t start = 0; start < q; ++start) {
        std::vector<std::size_t> residual(q);
        for (std::size_t k = 0; k < q; ++k) residual[k] = k;
        std::vector<std::size_t> order{start};
        std::size_t current = start;
        while (residual.size() > 1) {
            const auto branches = leaf_branches(c, current, residual);
            if (branches.size() != 1) break;
            residual.erase(std::find(residual.begin(), residual.end(), current));
            current = branches.front();
            order.push_back(current);
        }
        if (order.size() == q) {
            return OrderedComplex::with_order(c, std::move(order));
        }
    }
    return std::nullopt;
}

const VertexSet& IntersectionTable::cell(std::ptrdiff_t i, std::ptrdiff_t j) const {
    static const VertexSet empty;
    const auto r = static_cast<std::ptrdiff_t>(r_);
    if (i < 1 || j > r || i > j) return empty;
    return cells_[static_cast<std::size_t>((i - 1) * r + (j - 1))];
}

IntersectionTable intersection_table(const OrderedComplex& oc) {
    if (!oc.is_linear_quasi_tree()) {
        throw InputError("facet order is not a linear quasi-tree order");
    }
    IntersectionTable t;
    const std::size_t r = oc.size();
    t.r_ = r;
    t.cells_.assign(r * r, {});
    for (std::size_t i = 1; i <= r; ++i) {
        t.vertices_ = unite(t.vertices_, oc.at(i));
        VertexSet chain = oc.at(i);
        for (std::size_t j = i; j <= r; ++j) {
            const VertexSet pairwise = intersect(oc.at(i), oc.at(j));
            chain = intersect(chain, oc.at(j));
            if (pairwise != chain) {
                throw InternalError("F_" + std::to_string(i) + " ∩ F_" + std::to_string(j) +
                                    " differs from the intersection of the run between them");
            }
            t.cells_[(i - 1) * r + (j - 1)] = pairwise;
        }
    }
    return t;
}

std::string ClosedComplexViolation::describe() const {
    if (condition == Condition::covering) {
        return "(C) fails at i=" + std::to_string(i) + ",d=" + std::to_string(d());
    }
    return "(I) fails for F_{" + std::to_string(i) + "," + std::to_string(j) + "} and F_{" + std::to_string(k) +
           "," + std::to_string(l) + "}";
}

ClosedComplexCheck is_closed_complex(const IntersectionTable& t) {
    const auto r = static_cast<std::ptrdiff_t>(t.facet_count());
    using Condition = ClosedComplexViolation::Condition;
    auto at = [](std::ptrdiff_t v) { return static_cast<std::size_t>(v); };

    // (I): nonempty cells (i,j), (k,l) with i<k, j<l are never nested.
    for (std::ptrdiff_t i = 1; i <= r; ++i) {
        for (std::ptrdiff_t j = i; j <= r; ++j) {
            const VertexSet& lower = t.cell(i, j);
            if (lower.empty()) continue;
            for (std::ptrdiff_t k = i + 1; k <= r; ++k) {
                for (std::ptrdiff_t l = std::max(j + 1, k); l <= r; ++l) {
                    const VertexSet& upper = t.cell(k, l);
                    if (upper.empty()) continue;
                    if (is_subset(lower, upper) || is_subset(upper, lower)) {
                        return {false, ClosedComplexViolation{Condition::incomparability, at(i), at(j), at(k), at(l)}};
                    }
                }
            }
        }
    }
    // (C): F_{i+1,i+d} = F_{i,i+d} ∪ F_{i+1,i+d+1} whenever F_{i,i+d+1} is nonempty.
    for (std::ptrdiff_t d = 1; d < r; ++d) {
        for (std::ptrdiff_t i = 1; i + d + 1 <= r; ++i) {
            if (t.empty_cell(i, i + d + 1)) continue;
            if (t.cell(i + 1, i + d) != unite(t.cell(i, i + d), t.cell(i + 1, i + d + 1))) {
                return {false, ClosedComplexViolation{Condition::covering, at(i), 0, at(d), 0}};
            }
        }
    }
    return {};
}

ClosedComplexCheck is_closed_complex(const OrderedComplex& oc) { return is_closed_complex(intersection_table(oc)); }

bool facets_are_intervals(const SimplicialComplex& c, const Labelling& lab) {
    for (std::size_t f = 0; f < c.facet_count(); ++f) {
        std::vector<int> labels;
        for (const auto& name : c.facet_names(f)) labels.push_back(lab.label_of(name));
        const auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
        if (static_cast<std::size_t>(*hi - *lo + 1) != labels.size()) return false;
    }
    return true;
}

}  // namespace closedgraphs
