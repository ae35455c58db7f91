#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "closedgraphs/clique_complex.hpp"
#include "closedgraphs/graph.hpp"

namespace closedgraphs {

/// n_i = max{j : F_{i,j} nonempty} for every facet position i, and the
/// staircase of cells F_{1,1..n_1}, F_{2,n_1..n_2}, ..., F_{r,r}.
struct BorderChain {
    std::vector<std::size_t> reach;  // reach[i-1] = n_i
    std::vector<std::pair<std::size_t, std::size_t>> cells;
};

/// Throws InternalError if n_i decreases or a staircase cell is empty.
BorderChain border_chain(const IntersectionTable& t);

struct Block {
    std::size_t i;
    std::size_t j;
    VertexSet vertices;  // F'_{i,j} = F_{i,j} \ (F_{i-1,j} ∪ F_{i,j+1})
};

/// Nonempty residual blocks in staircase order.
struct BlockPartition {
    std::vector<Block> blocks;
};

/// Throws InputError when the blocks overlap or miss a vertex, which only
/// happens for complexes that are not closed.
BlockPartition residual_blocks(const IntersectionTable& t, const BorderChain& b);

/// Labels vertices block by block; inside a block by ascending name. The
/// result is checked for closedness against the 1-skeleton of the complex
/// (InternalError on failure). Throws InputError unless the complex is a
/// closed linear quasi-tree.
Labelling closed_labelling(const OrderedComplex& oc);

/// A vertex of F'_{i,j} lies in F_k exactly for i <= k <= j.
bool membership_window_holds(const IntersectionTable& t, const BlockPartition& p);

/// F_i ∪ F_j equals F_i ∪ ... ∪ F_j for every nonempty F_{i,j}.
bool union_claim_holds(const IntersectionTable& t);

struct ComponentCertificate {
    std::vector<std::string> vertices;
    OrderedComplex complex;
    BlockPartition blocks;
    std::size_t label_offset = 0;
};

struct NamedClaw {
    std::string center;
    std::array<std::string, 3> leaves;
};

struct LabellingFailure {
    enum class Stage { quasi_tree, closed_complex };
    Stage stage;
    std::size_t component = 0;
    std::vector<std::string> component_vertices;
    std::vector<std::vector<std::string>> facets;
    std::optional<std::vector<std::size_t>> order;
    std::optional<ClosedComplexViolation> violation;
    std::optional<NamedClaw> claw;

    std::string describe() const;
};

struct LabellingResult {
    std::optional<Labelling> labelling;
    std::vector<ComponentCertificate> certificate;
    std::optional<LabellingFailure> failure;

    bool closed() const { return labelling.has_value(); }
};

/// Decides closedness through the clique complex, one component at a time.
/// Component labellings are concatenated in component order (by smallest
/// vertex name). A returned labelling has passed is_closed_wrt on `g`.
LabellingResult find_closed_labelling(const Graph& g);

}  // namespace closedgraphs
