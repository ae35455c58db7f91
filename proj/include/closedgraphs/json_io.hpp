#pragma once

#include <optional>
#include <utility>

#include "json.hpp"

#include "closedgraphs/clique_complex.hpp"
#include "closedgraphs/groebner.hpp"
#include "closedgraphs/labelling.hpp"
#include "closedgraphs/oracle.hpp"
#include "closedgraphs/orientation.hpp"

namespace closedgraphs {

using Json = nlohmann::json;

/// {"facets": [["a","b"], ...], "order": [2,0,1] | null}, 0-based order.
Json complex_to_json(const SimplicialComplex& c, const std::optional<OrderedComplex>& order);
/// Inverse of complex_to_json; a non-null order is re-validated. Throws InputError.
std::pair<SimplicialComplex, std::optional<OrderedComplex>> complex_from_json(const Json& j);

/// {"labels": {"a":1,...}, "blocks": [{"i":1,"j":1,"vertices":["a"], "component":0}, ...]}
Json labelling_to_json(const Labelling& lab, const std::vector<ComponentCertificate>& certificate = {});
Labelling labelling_from_json(const Json& j);

Json term_order_to_json(const TermOrder& o);
/// {"order": {...}, "elements": ["x1*y2 - x2*y1", ...], "reduced": true, "max_degree": 2}
Json basis_to_json(const GroebnerBasis& gb);

/// {"arcs": [["a","b"], ...], "acyclic": true, "topological_labels": {...} | null}
Json orientation_to_json(const OrientedGraph& og, const TopologicalResult& topo);

Json failure_to_json(const LabellingFailure& failure);
Json report_to_json(const EquivalenceReport& report);

}  // namespace closedgraphs
