#include "closedgraphs/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "closedgraphs/error.hpp"
#include "closedgraphs/labelling.hpp"
#include "closedgraphs/orientation.hpp"

namespace closedgraphs {

std::uint64_t RandomSource::below(std::uint64_t bound) {
    if (bound == 0) throw InputError("empty random range");
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t x = next();
        if (x >= threshold) return x % bound;
    }
}

namespace {

// Same test as is_closed_wrt, on raw label vectors.
bool closed_under(const Graph& g, const std::vector<int>& labels) {
    for (Vertex j = 0; j < g.size(); ++j) {
        const auto& nb = g.neighbors(j);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if ((labels[nb[a]] > labels[j]) == (labels[nb[b]] > labels[j]) && !g.adjacent(nb[a], nb[b])) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

std::optional<Labelling> brute_force_closed(const Graph& g, std::size_t cap) {
    if (g.size() > cap) {
        throw CapExceeded("brute-force search is capped at " + std::to_string(cap) + " vertices, graph has " +
                          std::to_string(g.size()));
    }
    Labelling total;
    for (const auto& sub : connected_components(g)) {
        std::vector<int> labels(sub.size());
        std::iota(labels.begin(), labels.end(), 1);
        bool found = false;
        do {
            if (closed_under(sub, labels)) {
                found = true;
                break;
            }
        } while (std::next_permutation(labels.begin(), labels.end()));
        if (!found) return std::nullopt;
        std::vector<std::string> order(sub.size());
        for (Vertex v = 0; v < sub.size(); ++v) order[static_cast<std::size_t>(labels[v] - 1)] = sub.name(v);
        total = total.concatenated(Labelling::from_order(std::move(order)));
    }
    if (!is_closed_wrt(g, total).closed) throw InternalError("brute-force labelling failed re-verification");
    return total;
}

ClosedSample random_closed_graph(RandomSource& rs, std::size_t n, std::size_t r) {
    if (n < 2 || r < 1 || r > n - 1) {
        throw InputError("need n >= 2 and 1 <= r <= n - 1 (got n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                         ")");
    }
    // m_2 < ... < m_r: a random (r-1)-subset of {2, ..., n-1}.
    std::vector<std::size_t> pool(n - 2);
    std::iota(pool.begin(), pool.end(), std::size_t{2});
    for (std::size_t k = 0; k + 1 < r; ++k) std::swap(pool[k], pool[k + rs.below(pool.size() - k)]);
    std::vector<std::size_t> low{1};
    low.insert(low.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(r - 1));
    std::sort(low.begin(), low.end());

    std::vector<std::size_t> high(r);
    high[r - 1] = n;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        std::size_t lo = std::max(low[i] + 1, low[i + 1]);
        if (i > 0) lo = std::max(lo, high[i - 1] + 1);
        high[i] = rs.between(lo, n - (r - 1 - i));
    }

    const std::size_t width = std::to_string(n).size();
    auto name = [&](std::size_t v) {
        std::string digits = std::to_string(v);
        return "v" + std::string(width - digits.size(), '0') + digits;
    };
    std::vector<Graph::NamedEdge> edges;
    std::vector<std::pair<std::size_t, std::size_t>> intervals;
    for (std::size_t i = 0; i < r; ++i) {
        intervals.emplace_back(low[i], high[i]);
        for (std::size_t a = low[i]; a <= high[i]; ++a) {
            for (std::size_t b = a + 1; b <= high[i]; ++b) edges.emplace_back(name(a), name(b));
        }
    }
    Graph graph(edges);
    Labelling identity = Labelling::identity(graph);
    ClosedSample sample{std::move(graph), std::move(identity), std::move(intervals)};
    return sample;
}

TermOrder random_term_order(RandomSource& rs, std::size_t n) {
    std::vector<std::size_t> ranking(2 * n);
    std::iota(ranking.begin(), ranking.end(), std::size_t{0});
    for (std::size_t k = ranking.size(); k > 1; --k) std::swap(ranking[k - 1], ranking[rs.below(k)]);
    const auto base = static_cast<BaseOrder>(rs.below(3));
    std::vector<std::uint64_t> weights;
    if (rs.below(2) == 1) {
        for (std::size_t k = 0; k < 2 * n; ++k) weights.push_back(rs.below(4));
    }
    return TermOrder(2 * n, base, std::move(ranking), std::move(weights));
}

bool certify_basis(const GroebnerBasis& gb) {
    try {
        for (const auto& b : gb.elements) multidegree(b);
    } catch (const InternalError&) {
        return false;
    }
    return all_s_pairs_reduce(gb);
}

namespace {

std::string order_list(const Labelling& lab) {
    std::string out;
    for (const auto& name : lab.order()) out += (out.empty() ? "" : ",") + name;
    return out;
}

std::string dump_basis(const GroebnerBasis& gb) {
    std::string out = "[";
    for (const auto& b : gb.elements) out += (out.size() > 1 ? "; " : "") + to_string(b);
    return out + "]";
}

}  // namespace

EquivalenceReport equivalence_suite(const Graph& g, std::size_t trials, RandomSource& rs, std::size_t cap,
                                    bool timed) {
    const auto start = std::chrono::steady_clock::now();
    EquivalenceReport report;
    report.seed = rs.seed();
    report.vertices = g.size();
    report.edges = g.edge_count();
    report.brute_force = brute_force_closed(g, cap);

    const LabellingResult pipeline = find_closed_labelling(g);
    report.pipeline = pipeline.labelling;
    if (pipeline.failure) report.pipeline_failure = pipeline.failure->describe();
    if (report.brute_force.has_value() != report.pipeline.has_value()) {
        report.counterexamples.push_back(std::string("brute force says ") +
                                         (report.closed() ? "closed" : "not closed") + ", pipeline says " +
                                         (report.pipeline ? "closed" : "not closed"));
    }

    const std::size_t n = g.size();
    const TermOrder lex = TermOrder::lex(n);
    const Labelling lex_labelling = report.pipeline ? *report.pipeline : Labelling::identity(g);
    const GroebnerBasis lex_basis = reduced_groebner_basis(g, lex_labelling, lex);
    report.lex_quadratic = is_quadratic(lex_basis);
    report.lex_certified = certify_basis(lex_basis);
    if (!report.lex_certified) {
        report.counterexamples.push_back("lex basis failed certification under labelling " +
                                         order_list(lex_labelling) + ": " + dump_basis(lex_basis));
    }
    if (report.lex_quadratic != report.closed()) {
        report.counterexamples.push_back(std::string("lex basis under labelling ") + order_list(lex_labelling) +
                                         (report.lex_quadratic ? " is quadratic" : " is not quadratic") +
                                         " but the graph is " + (report.closed() ? "closed" : "not closed") + ": " +
                                         dump_basis(lex_basis));
    }

    const Labelling identity = Labelling::identity(g);
    for (std::size_t t = 0; t < trials; ++t) {
        OrderTrial trial{random_term_order(rs, n), false, 0, 0, false, false, std::nullopt};
        const GroebnerBasis basis = reduced_groebner_basis(g, identity, trial.order);
        trial.quadratic = is_quadratic(basis);
        trial.max_degree = basis.max_degree();
        trial.basis_size = basis.elements.size();
        trial.certified = certify_basis(basis);
        const TopologicalResult topo = topological_labelling(orient(g, identity, trial.order));
        trial.acyclic = topo.labelling.has_value();
        trial.topological = topo.labelling;

        const std::string where = "order " + trial.order.to_spec() + ": ";
        if (!trial.certified) report.counterexamples.push_back(where + "basis failed certification " + dump_basis(basis));
        if (!trial.acyclic) report.counterexamples.push_back(where + "orientation has a directed cycle");
        if (trial.quadratic && !report.closed()) {
            report.counterexamples.push_back(where + "quadratic basis for a graph that is not closed " +
                                             dump_basis(basis));
        }
        if (trial.quadratic && trial.acyclic && !is_closed_wrt(g, *trial.topological).closed) {
            report.counterexamples.push_back(where + "topological labelling " + order_list(*trial.topological) +
                                             " of a quadratic case is not closed");
        }
        report.trials.push_back(std::move(trial));
    }
    if (timed) {
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

}  // namespace closedgraphs
