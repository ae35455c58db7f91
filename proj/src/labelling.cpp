#include "closedgraphs/labelling.hpp"

#include <algorithm>

#include "closedgraphs/error.hpp"

namespace closedgraphs {

namespace {

std::ptrdiff_t s(std::size_t v) { return static_cast<std::ptrdiff_t>(v); }

}  // namespace

BorderChain border_chain(const IntersectionTable& t) {
    const std::size_t r = t.facet_count();
    BorderChain chain;
    for (std::size_t i = 1; i <= r; ++i) {
        std::size_t reach = i;
        for (std::size_t j = i; j <= r; ++j) {
            if (!t.empty_cell(s(i), s(j))) reach = j;
        }
        if (!chain.reach.empty() && reach < chain.reach.back()) {
            throw InternalError("n_" + std::to_string(i) + " < n_" + std::to_string(i - 1));
        }
        chain.reach.push_back(reach);
    }
    for (std::size_t i = 1; i <= r; ++i) {
        const std::size_t from = i == 1 ? 1 : std::max(i, chain.reach[i - 2]);
        for (std::size_t j = from; j <= chain.reach[i - 1]; ++j) {
            if (t.empty_cell(s(i), s(j))) {
                throw InternalError("border cell F_{" + std::to_string(i) + "," + std::to_string(j) + "} is empty");
            }
            chain.cells.emplace_back(i, j);
        }
    }
    return chain;
}

BlockPartition residual_blocks(const IntersectionTable& t, const BorderChain& b) {
    BlockPartition partition;
    VertexSet covered;
    for (const auto& [i, j] : b.cells) {
        const VertexSet removed = unite(t.cell(s(i) - 1, s(j)), t.cell(s(i), s(j) + 1));
        VertexSet block;
        std::set_difference(t.cell(s(i), s(j)).begin(), t.cell(s(i), s(j)).end(), removed.begin(), removed.end(),
                            std::back_inserter(block));
        if (block.empty()) continue;
        if (!intersect(covered, block).empty()) {
            throw InputError("residual blocks overlap: the complex is not closed");
        }
        covered = unite(covered, block);
        partition.blocks.push_back(Block{i, j, std::move(block)});
    }
    if (covered != t.vertices()) {
        throw InputError("residual blocks do not cover the vertex set: the complex is not closed");
    }
    return partition;
}

namespace {

// Closedness of the 1-skeleton of `c` under `labels` (indexed by vertex).
bool skeleton_closed(const SimplicialComplex& c, const std::vector<int>& labels) {
    const std::size_t n = c.vertex_names().size();
    std::vector<char> adj(n * n, 0);
    for (const auto& f : c.facets()) {
        for (Vertex u : f) {
            for (Vertex v : f) adj[u * n + v] = u != v;
        }
    }
    for (Vertex j = 0; j < n; ++j) {
        for (Vertex a = 0; a < n; ++a) {
            if (!adj[j * n + a]) continue;
            for (Vertex b = a + 1; b < n; ++b) {
                if (!adj[j * n + b] || adj[a * n + b]) continue;
                const bool a_above = labels[a] > labels[j];
                const bool b_above = labels[b] > labels[j];
                if (a_above == b_above) return false;
            }
        }
    }
    return true;
}

}  // namespace

Labelling closed_labelling(const OrderedComplex& oc) {
    const IntersectionTable t = intersection_table(oc);
    if (const auto check = is_closed_complex(t); !check.closed) {
        throw InputError("complex is not closed: " + check.violation->describe());
    }
    const BlockPartition partition = residual_blocks(t, border_chain(t));
    const auto& names = oc.complex().vertex_names();

    std::vector<std::string> order;
    for (const auto& block : partition.blocks) {
        // Vertex indices follow name order, so blocks are already sorted by name.
        for (Vertex v : block.vertices) order.push_back(names.at(v));
    }
    Labelling lab = Labelling::from_order(order);

    std::vector<int> labels(names.size());
    for (Vertex v = 0; v < names.size(); ++v) labels[v] = lab.label_of(names[v]);
    if (!skeleton_closed(oc.complex(), labels)) {
        throw InternalError("block labelling of a closed complex is not closed");
    }
    return lab;
}

bool membership_window_holds(const IntersectionTable& t, const BlockPartition& p) {
    const std::size_t r = t.facet_count();
    for (const auto& block : p.blocks) {
        for (Vertex v : block.vertices) {
            for (std::size_t k = 1; k <= r; ++k) {
                const auto& facet = t.cell(s(k), s(k));
                const bool member = std::binary_search(facet.begin(), facet.end(), v);
                if (member != (block.i <= k && k <= block.j)) return false;
            }
        }
    }
    return true;
}

bool union_claim_holds(const IntersectionTable& t) {
    const std::size_t r = t.facet_count();
    for (std::size_t i = 1; i <= r; ++i) {
        VertexSet run = t.cell(s(i), s(i));
        for (std::size_t j = i + 1; j <= r; ++j) {
            run = unite(run, t.cell(s(j), s(j)));
            if (t.empty_cell(s(i), s(j))) continue;
            if (unite(t.cell(s(i), s(i)), t.cell(s(j), s(j))) != run) return false;
        }
    }
    return true;
}

std::string LabellingFailure::describe() const {
    std::string out = "component " + std::to_string(component) + ": ";
    if (stage == Stage::quasi_tree) {
        out += "clique complex is not a linear quasi-tree";
    } else {
        out += "clique complex is a linear quasi-tree but not closed";
        if (violation) out += ", " + violation->describe();
    }
    if (claw) {
        out += "; induced claw centred at " + claw->center + " with leaves " + claw->leaves[0] + "," +
               claw->leaves[1] + "," + claw->leaves[2];
    }
    return out;
}

LabellingResult find_closed_labelling(const Graph& g) {
    LabellingResult result;
    Labelling total;
    const auto components = component_vertex_sets(g);
    for (std::size_t index = 0; index < components.size(); ++index) {
        const Graph sub = g.induced(components[index]);
        const SimplicialComplex complex = clique_complex(sub);

        auto fail = [&](LabellingFailure::Stage stage) {
            LabellingFailure failure{stage, index, sub.names(), {}, std::nullopt, std::nullopt, std::nullopt};
            for (std::size_t f = 0; f < complex.facet_count(); ++f) failure.facets.push_back(complex.facet_names(f));
            if (auto claw = find_induced_claw(sub)) {
                failure.claw = NamedClaw{sub.name(claw->center),
                                         {sub.name(claw->leaves[0]), sub.name(claw->leaves[1]),
                                          sub.name(claw->leaves[2])}};
            }
            return failure;
        };

        auto ordered = linear_quasi_tree_order(complex);
        if (!ordered) {
            result.failure = fail(LabellingFailure::Stage::quasi_tree);
            return result;
        }
        const IntersectionTable table = intersection_table(*ordered);
        if (const auto check = is_closed_complex(table); !check.closed) {
            result.failure = fail(LabellingFailure::Stage::closed_complex);
            result.failure->order = ordered->order();
            result.failure->violation = check.violation;
            return result;
        }
        const Labelling local = closed_labelling(*ordered);
        result.certificate.push_back(ComponentCertificate{sub.names(), *ordered,
                                                          residual_blocks(table, border_chain(table)), total.size()});
        total = total.concatenated(local);
    }
    if (!is_closed_wrt(g, total).closed) {
        throw InternalError("labelling assembled from closed components is not closed");
    }
    result.labelling = std::move(total);
    return result;
}

}  // namespace closedgraphs
