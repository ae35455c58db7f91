#include "closedgraphs/json_io.hpp"

#include "closedgraphs/error.hpp"

namespace closedgraphs {

Json complex_to_json(const SimplicialComplex& c, const std::optional<OrderedComplex>& order) {
    Json facets = Json::array();
    for (std::size_t f = 0; f < c.facet_count(); ++f) facets.push_back(c.facet_names(f));
    return Json{{"facets", facets}, {"order", order ? Json(order->order()) : Json(nullptr)}};
}

std::pair<SimplicialComplex, std::optional<OrderedComplex>> complex_from_json(const Json& j) {
    try {
        auto complex = SimplicialComplex::from_named_facets(j.at("facets").get<std::vector<std::vector<std::string>>>());
        std::optional<OrderedComplex> ordered;
        if (j.contains("order") && !j.at("order").is_null()) {
            ordered = OrderedComplex::with_order(complex, j.at("order").get<std::vector<std::size_t>>());
        }
        return {std::move(complex), std::move(ordered)};
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed complex JSON: ") + e.what());
    }
}

Json labelling_to_json(const Labelling& lab, const std::vector<ComponentCertificate>& certificate) {
    Json labels = Json::object();
    for (const auto& name : lab.order()) labels[name] = lab.label_of(name);
    Json blocks = Json::array();
    for (std::size_t c = 0; c < certificate.size(); ++c) {
        const auto& names = certificate[c].complex.complex().vertex_names();
        for (const auto& block : certificate[c].blocks.blocks) {
            Json vertices = Json::array();
            for (Vertex v : block.vertices) vertices.push_back(names.at(v));
            blocks.push_back({{"component", c}, {"i", block.i}, {"j", block.j}, {"vertices", vertices}});
        }
    }
    return Json{{"labels", labels}, {"blocks", blocks}};
}

Labelling labelling_from_json(const Json& j) {
    try {
        const auto labels = j.at("labels").get<std::map<std::string, int>>();
        std::vector<std::string> order(labels.size());
        for (const auto& [name, label] : labels) {
            if (label < 1 || static_cast<std::size_t>(label) > labels.size() || !order[label - 1].empty()) {
                throw InputError("labels are not a bijection onto 1..n");
            }
            order[static_cast<std::size_t>(label - 1)] = name;
        }
        return Labelling::from_order(std::move(order));
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed labelling JSON: ") + e.what());
    }
}

Json term_order_to_json(const TermOrder& o) {
    const std::size_t n = o.variables() / 2;
    Json ranking = Json::array();
    for (std::size_t slot : o.ranking()) ranking.push_back(variable_name(slot, n));
    return Json{{"base", std::string(to_string(o.base()))},
                {"ranking", ranking},
                {"weights", o.weights().empty() ? Json(nullptr) : Json(o.weights())},
                {"spec", o.to_spec()}};
}

Json basis_to_json(const GroebnerBasis& gb) {
    Json elements = Json::array();
    for (const auto& b : gb.elements) elements.push_back(to_string(b));
    return Json{{"order", term_order_to_json(gb.order)},
                {"elements", elements},
                {"reduced", gb.reduced},
                {"max_degree", gb.max_degree()}};
}

Json orientation_to_json(const OrientedGraph& og, const TopologicalResult& topo) {
    Json arcs = Json::array();
    for (const auto& [u, v] : og.arcs) arcs.push_back({og.names.at(u), og.names.at(v)});
    Json out{{"arcs", arcs}, {"acyclic", topo.labelling.has_value()}};
    if (topo.labelling) {
        out["topological_labels"] = labelling_to_json(*topo.labelling)["labels"];
    } else {
        out["topological_labels"] = nullptr;
        Json cycle = Json::array();
        for (Vertex v : topo.cycle) cycle.push_back(og.names.at(v));
        out["cycle"] = cycle;
    }
    return out;
}

Json failure_to_json(const LabellingFailure& failure) {
    Json out{{"stage", failure.stage == LabellingFailure::Stage::quasi_tree ? "linear_quasi_tree" : "closed_complex"},
             {"component", failure.component},
             {"component_vertices", failure.component_vertices},
             {"facets", failure.facets},
             {"order", failure.order ? Json(*failure.order) : Json(nullptr)},
             {"message", failure.describe()}};
    if (failure.violation) {
        const auto& v = *failure.violation;
        if (v.condition == ClosedComplexViolation::Condition::covering) {
            out["violation"] = {{"condition", "covering"}, {"i", v.i}, {"d", v.d()}};
        } else {
            out["violation"] = {{"condition", "incomparability"}, {"i", v.i}, {"j", v.j}, {"k", v.k}, {"l", v.l}};
        }
    } else {
        out["violation"] = nullptr;
    }
    if (failure.claw) {
        out["claw"] = {{"center", failure.claw->center}, {"leaves", failure.claw->leaves}};
    } else {
        out["claw"] = nullptr;
    }
    return out;
}

Json report_to_json(const EquivalenceReport& report) {
    auto labels = [](const std::optional<Labelling>& lab) {
        return lab ? labelling_to_json(*lab)["labels"] : Json(nullptr);
    };
    Json trials = Json::array();
    std::size_t quadratic = 0;
    for (const auto& t : report.trials) {
        quadratic += t.quadratic ? 1 : 0;
        trials.push_back({{"order", t.order.to_spec()},
                          {"quadratic", t.quadratic},
                          {"max_degree", t.max_degree},
                          {"basis_size", t.basis_size},
                          {"acyclic", t.acyclic},
                          {"certified", t.certified},
                          {"topological_labels", labels(t.topological)}});
    }
    Json out{{"seed", report.seed},
             {"vertices", report.vertices},
             {"edges", report.edges},
             {"closed", report.closed()},
             {"checks",
              {{"brute_force_closed", report.brute_force.has_value()},
               {"pipeline_closed", report.pipeline.has_value()},
               {"verdicts_agree", report.brute_force.has_value() == report.pipeline.has_value()},
               {"lex_quadratic", report.lex_quadratic},
               {"lex_certified", report.lex_certified},
               {"trials_quadratic", quadratic},
               {"trials_total", report.trials.size()}}},
             {"brute_force_labels", labels(report.brute_force)},
             {"pipeline_labels", labels(report.pipeline)},
             {"pipeline_failure", report.pipeline_failure.empty() ? Json(nullptr) : Json(report.pipeline_failure)},
             {"trials", trials},
             {"counterexamples", report.counterexamples},
             {"passed", report.passed()}};
    if (report.seconds) out["seconds"] = *report.seconds;
    return out;
}

}  // namespace closedgraphs
