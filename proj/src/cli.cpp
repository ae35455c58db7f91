#include "closedgraphs/cli.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "closedgraphs/error.hpp"

namespace closedgraphs::cli {

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::affirmative: return 0;
        case Verdict::negative: return 1;
        case Verdict::usage_error: return 2;
        case Verdict::internal_error: return 3;
    }
    return 3;
}

std::size_t cap_from_environment() {
    if (const char* value = std::getenv("CLOSEDGRAPHS_CAP")) {
        char* end = nullptr;
        const unsigned long long cap = std::strtoull(value, &end, 10);
        if (end != value && *end == '\0' && cap > 0) return static_cast<std::size_t>(cap);
    }
    return default_brute_force_cap;
}

namespace {

CommandResult finish(Verdict verdict, Json payload, std::string text) {
    return CommandResult{verdict, std::move(payload), std::move(text), exit_code(verdict)};
}

CommandResult error_result(Verdict verdict, const std::string& message) {
    return finish(verdict, Json{{"error", message}}, "error: " + message + "\n");
}

// Maps the error types onto exit codes.
CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const InputError& e) {
        return error_result(Verdict::usage_error, e.what());
    } catch (const CapExceeded& e) {
        return error_result(Verdict::usage_error, e.what());
    } catch (const InternalError& e) {
        return error_result(Verdict::internal_error, std::string("internal: ") + e.what());
    }
}

std::string render_labels(const Json& labels) {
    std::vector<std::pair<int, std::string>> by_label;
    for (const auto& [name, label] : labels.items()) by_label.emplace_back(label.get<int>(), name);
    std::sort(by_label.begin(), by_label.end());
    std::string out;
    for (const auto& [label, name] : by_label) out += name + " " + std::to_string(label) + "\n";
    return out;
}

std::string render_facets(const Json& facets) {
    std::string out;
    for (std::size_t f = 0; f < facets.size(); ++f) {
        out += "  F" + std::to_string(f + 1) + " = {";
        for (std::size_t k = 0; k < facets[f].size(); ++k) {
            out += (k ? "," : "") + facets[f][k].get<std::string>();
        }
        out += "}\n";
    }
    return out;
}

std::string render_order(const Json& order) {
    std::string out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        out += (k ? ", F" : "F") + std::to_string(order[k].get<std::size_t>() + 1);
    }
    return out;
}

Labelling labelling_option(const Graph& g, const Options& opts) {
    if (!opts.labelling) return Labelling::identity(g);
    std::vector<std::string> order;
    std::stringstream in(*opts.labelling);
    std::string name;
    while (std::getline(in, name, ',')) order.push_back(name);
    Labelling lab = Labelling::from_order(std::move(order));
    if (!lab.covers_exactly(g)) throw InputError("--labelling must list every vertex exactly once");
    return lab;
}

CommandResult check_impl(const std::string& path, bool labels_only) {
    const Graph g = load_graph_file(path);
    const LabellingResult result = find_closed_labelling(g);
    Json payload{{"closed", result.closed()}, {"vertices", g.size()}, {"edges", g.edge_count()}};
    std::string text;
    if (result.closed()) {
        payload["labelling"] = labelling_to_json(*result.labelling, result.certificate);
        payload["failure"] = nullptr;
        text = labels_only ? render_labels(payload["labelling"]["labels"])
                           : "closed\n" + render_labels(payload["labelling"]["labels"]);
    } else {
        payload["labelling"] = nullptr;
        payload["failure"] = failure_to_json(*result.failure);
        text = labels_only ? "" : "not closed\n" + payload["failure"]["message"].get<std::string>() + "\n";
    }
    if (labels_only) payload = Json{{"closed", result.closed()}, {"labelling", payload["labelling"]}};
    return finish(result.closed() ? Verdict::affirmative : Verdict::negative, std::move(payload), std::move(text));
}

}  // namespace

CommandResult cmd_check(const std::string& path, const Options&) {
    return guarded([&] { return check_impl(path, false); });
}

CommandResult cmd_label(const std::string& path, const Options&) {
    return guarded([&] { return check_impl(path, true); });
}

CommandResult cmd_complex(const std::string& path, const Options&) {
    return guarded([&] {
        const Graph g = load_graph_file(path);
        const SimplicialComplex complex = clique_complex(g);
        const auto ordered = linear_quasi_tree_order(complex);
        Json payload{{"complex", complex_to_json(complex, ordered)}, {"linear_quasi_tree", ordered.has_value()}};
        std::string text = "facets:\n" + render_facets(payload["complex"]["facets"]);
        bool closed = false;
        if (ordered) {
            const auto check = is_closed_complex(*ordered);
            closed = check.closed;
            payload["closed"] = closed;
            payload["violation"] = check.violation ? Json(check.violation->describe()) : Json(nullptr);
            text += "order: " + render_order(payload["complex"]["order"]) + "\n";
            text += std::string("linear quasi-tree: yes; closed: ") + (closed ? "yes" : "no");
            if (check.violation) text += "; " + check.violation->describe();
            text += "\n";
        } else {
            payload["closed"] = false;
            payload["violation"] = nullptr;
            text += "order: none\nlinear quasi-tree: no; closed: no\n";
        }
        return finish(closed ? Verdict::affirmative : Verdict::negative, std::move(payload), std::move(text));
    });
}

CommandResult cmd_gb(const std::string& path, const Options& opts) {
    return guarded([&] {
        const Graph g = load_graph_file(path);
        const Labelling lab = labelling_option(g, opts);
        const TermOrder order = TermOrder::parse(opts.order, g.size());
        const GroebnerBasis basis = reduced_groebner_basis(g, lab, order);
        const bool quadratic = is_quadratic(basis);
        const OrientedGraph og = orient(g, lab, order);
        Json payload{{"labelling", labelling_to_json(lab)["labels"]},
                     {"basis", basis_to_json(basis)},
                     {"quadratic", quadratic},
                     {"generators", g.edge_count()},
                     {"orientation", orientation_to_json(og, topological_labelling(og))}};
        std::string text = "order: " + order.to_spec() + "\nlabelling:\n" + render_labels(payload["labelling"]);
        text += "reduced basis (" + std::to_string(basis.elements.size()) + " elements):\n";
        for (const auto& e : payload["basis"]["elements"]) text += "  " + e.get<std::string>() + "\n";
        text += "max degree: " + std::to_string(basis.max_degree()) + "\n";
        text += std::string("quadratic: ") + (quadratic ? "yes" : "no") + "\n";
        return finish(quadratic ? Verdict::affirmative : Verdict::negative, std::move(payload), std::move(text));
    });
}

CommandResult cmd_verify(const std::string& path, const Options& opts) {
    return guarded([&] {
        const Graph g = load_graph_file(path);
        RandomSource rs(opts.seed);
        const EquivalenceReport report = equivalence_suite(g, opts.trials, rs, opts.cap, opts.timing);
        Json payload = report_to_json(report);
        const auto& checks = payload["checks"];
        std::string text = std::string(report.closed() ? "closed" : "not closed") + "\n";
        text += "brute force and pipeline agree: " + std::string(checks["verdicts_agree"] ? "yes" : "no") + "\n";
        text += "lex basis quadratic: " + std::string(report.lex_quadratic ? "yes" : "no") + "\n";
        text += "random orders: " + std::to_string(checks["trials_quadratic"].get<std::size_t>()) + "/" +
                std::to_string(report.trials.size()) + " quadratic\n";
        for (const auto& c : report.counterexamples) text += "COUNTEREXAMPLE " + c + "\n";
        text += report.passed() ? "all checks passed\n" : "checks FAILED\n";
        return finish(report.passed() ? Verdict::affirmative : Verdict::internal_error, std::move(payload),
                      std::move(text));
    });
}

CommandResult cmd_oracle(const std::string& path, const Options& opts) {
    return guarded([&] {
        const Graph g = load_graph_file(path);
        const auto lab = brute_force_closed(g, opts.cap);
        Json payload{{"closed", lab.has_value()}, {"labels", lab ? labelling_to_json(*lab)["labels"] : Json(nullptr)}};
        std::string text = lab ? "closed\n" + render_labels(payload["labels"]) : "not closed\n";
        return finish(lab ? Verdict::affirmative : Verdict::negative, std::move(payload), std::move(text));
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-graph recognition and binomial edge ideal Groebner bases"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    opts.cap = cap_from_environment();
    app.add_flag("--json", opts.json, "Print the JSON payload instead of text");
    app.add_option("--seed", opts.seed, "Seed for random term orders");
    app.add_option("--trials", opts.trials, "Number of random term orders for verify");
    app.add_option("--cap", opts.cap, "Largest vertex count for brute-force search")->check(CLI::PositiveNumber);
    app.add_flag("--timing", opts.timing, "Include wall-clock timing in verify reports");

    std::string path;
    std::function<CommandResult(const std::string&, const Options&)> command;
    auto subcommand = [&](const char* name, const char* help, CommandResult (*fn)(const std::string&, const Options&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("graph", path, "Edge-list file")->required();
        sub->callback([&command, fn] { command = fn; });
        return sub;
    };
    subcommand("check", "Decide closedness and print a closed labelling or a witness", cmd_check);
    subcommand("label", "Like check, printing only the labelling", cmd_label);
    subcommand("complex", "Print the clique complex, its leaf order and closedness", cmd_complex);
    CLI::App* gb = subcommand("gb", "Reduced Groebner basis of the binomial edge ideal", cmd_gb);
    gb->add_option("--order", opts.order, "lex|deglex|degrevlex[:ranking][:weights]");
    gb->add_option("--labelling", opts.labelling, "Comma-separated vertex names, first gets label 1");
    subcommand("verify", "Cross-check all closedness characterisations", cmd_verify);
    subcommand("oracle", "Exhaustive search for a closed labelling", cmd_oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_code(Verdict::usage_error);
    }

    const CommandResult result = command(path, opts);
    if (opts.json) {
        out << result.payload.dump(2) << "\n";
    } else if (result.verdict == Verdict::usage_error || result.verdict == Verdict::internal_error) {
        (result.payload.contains("error") ? err : out) << result.text;
    } else {
        out << result.text;
    }
    return result.exit_code;
}

}  // namespace closedgraphs::cli
