#include "closedgraphs/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "closedgraphs/error.hpp"

namespace closedgraphs {

Graph::Graph(const std::vector<NamedEdge>& edges) {
    if (edges.empty()) {
        throw InputError("graph has no edges");
    }
    std::set<std::string> names;
    for (const auto& [u, v] : edges) {
        if (u == v) {
            throw InputError("loop at vertex '" + u + "'");
        }
        names.insert(u);
        names.insert(v);
    }
    names_.assign(names.begin(), names.end());
    const std::size_t n = names_.size();
    adj_.assign(n * n, 0);
    neighbors_.resize(n);
    for (const auto& [u, v] : edges) {
        const Vertex a = index_of(u);
        const Vertex b = index_of(v);
        if (adj_[a * n + b] == 0) {
            adj_[a * n + b] = adj_[b * n + a] = 1;
            ++edge_count_;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = 0; w < n; ++w) {
            if (adjacent(v, w)) neighbors_[v].push_back(w);
        }
    }
}

std::optional<Vertex> Graph::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<Vertex>(it - names_.begin());
}

Vertex Graph::index_of(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u) {
        for (Vertex v : neighbors_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::induced(const VertexSet& vertices) const {
    std::vector<NamedEdge> edges;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (adjacent(vertices[a], vertices[b])) {
                edges.emplace_back(names_.at(vertices[a]), names_.at(vertices[b]));
            }
        }
    }
    Graph sub(edges);
    if (sub.size() != vertices.size()) {
        throw InternalError("induced subgraph would contain isolated vertices");
    }
    return sub;
}

std::vector<std::string> Graph::names_of(const VertexSet& vertices) const {
    std::vector<std::string> out;
    out.reserve(vertices.size());
    for (Vertex v : vertices) out.push_back(names_.at(v));
    return out;
}

VertexSet Graph::indices_of(const std::vector<std::string>& names) const {
    VertexSet out;
    out.reserve(names.size());
    for (const auto& name : names) out.push_back(index_of(name));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph load_graph(std::string_view text) {
    std::vector<Graph::NamedEdge> edges;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string u;
        if (!(fields >> u) || u.front() == '#') continue;
        std::string v;
        std::string extra;
        if (!(fields >> v) || (fields >> extra)) {
            throw InputError("line " + std::to_string(line_no) + ": expected two vertex names");
        }
        if (u == v) {
            throw InputError("line " + std::to_string(line_no) + ": loop at vertex '" + u + "'");
        }
        edges.emplace_back(std::move(u), std::move(v));
    }
    if (edges.empty()) {
        throw InputError("edge list is empty");
    }
    return Graph(edges);
}

Graph load_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_graph(buffer.str());
}

Labelling Labelling::from_order(std::vector<std::string> order) {
    Labelling lab;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (!lab.label_.emplace(order[k], static_cast<int>(k + 1)).second) {
            throw InputError("vertex '" + order[k] + "' labelled twice");
        }
    }
    lab.order_ = std::move(order);
    return lab;
}

Labelling Labelling::identity(const Graph& g) { return from_order(g.names()); }

int Labelling::label_of(std::string_view name) const {
    auto it = label_.find(name);
    if (it == label_.end()) {
        throw InputError("vertex '" + std::string(name) + "' has no label");
    }
    return it->second;
}

bool Labelling::covers_exactly(const Graph& g) const {
    if (order_.size() != g.size()) return false;
    return std::all_of(order_.begin(), order_.end(),
                       [&](const std::string& name) { return g.find(name).has_value(); });
}

std::vector<int> Labelling::labels_for(const Graph& g) const {
    if (!covers_exactly(g)) {
        throw InputError("labelling does not match the vertex set of the graph");
    }
    std::vector<int> labels(g.size());
    for (Vertex v = 0; v < g.size(); ++v) labels[v] = label_of(g.name(v));
    return labels;
}

Labelling Labelling::concatenated(const Labelling& other) const {
    std::vector<std::string> order = order_;
    order.insert(order.end(), other.order_.begin(), other.order_.end());
    return from_order(std::move(order));
}

NeighborhoodSplit split_neighborhood(const Graph& g, const Labelling& lab, Vertex j) {
    if (j >= g.size()) {
        throw InputError("unknown vertex index " + std::to_string(j));
    }
    const auto labels = lab.labels_for(g);
    NeighborhoodSplit split;
    for (Vertex i : g.neighbors(j)) {
        (labels[i] < labels[j] ? split.below : split.above).push_back(i);
    }
    return split;
}

NeighborhoodSplit split_neighborhood(const Graph& g, const Labelling& lab, std::string_view j) {
    return split_neighborhood(g, lab, g.index_of(j));
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) {
        if (v >= g.size()) throw InputError("unknown vertex index " + std::to_string(v));
    }
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (s[a] != s[b] && !g.adjacent(s[a], s[b])) return false;
        }
    }
    return true;
}

namespace {

std::optional<std::pair<Vertex, Vertex>> non_edge_in(const Graph& g, const VertexSet& s) {
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (!g.adjacent(s[a], s[b])) return std::make_pair(s[a], s[b]);
        }
    }
    return std::nullopt;
}

}  // namespace

ClosednessCheck is_closed_wrt(const Graph& g, const Labelling& lab) {
    const auto labels = lab.labels_for(g);
    // Visit vertices by label so the reported witness does not depend on names.
    std::vector<Vertex> by_label(g.size());
    for (Vertex v = 0; v < g.size(); ++v) by_label[static_cast<std::size_t>(labels[v] - 1)] = v;

    for (Vertex j : by_label) {
        VertexSet below;
        VertexSet above;
        for (Vertex i : g.neighbors(j)) (labels[i] < labels[j] ? below : above).push_back(i);
        auto by_lab = [&](Vertex a, Vertex b) { return labels[a] < labels[b]; };
        std::sort(below.begin(), below.end(), by_lab);
        std::sort(above.begin(), above.end(), by_lab);
        if (auto pair = non_edge_in(g, below)) {
            return {false, ClosednessWitness{j, pair->first, pair->second, false}};
        }
        if (auto pair = non_edge_in(g, above)) {
            return {false, ClosednessWitness{j, pair->first, pair->second, true}};
        }
    }
    return {};
}

bool is_closed_wrt_edge_pairs(const Graph& g, const Labelling& lab) {
    const auto labels = lab.labels_for(g);
    const std::size_t n = g.size();
    std::vector<Vertex> at(n + 1);
    for (Vertex v = 0; v < n; ++v) at[static_cast<std::size_t>(labels[v])] = v;
    auto edge = [&](std::size_t i, std::size_t j) { return g.adjacent(at[i], at[j]); };

    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (!edge(i, j)) continue;
            for (std::size_t k = 1; k <= n; ++k) {
                for (std::size_t l = k + 1; l <= n; ++l) {
                    if (!edge(k, l) || (i == k && j == l)) continue;
                    if (i == k && !edge(j, l)) return false;
                    if (j == l && !edge(i, k)) return false;
                }
            }
        }
    }
    return true;
}

std::optional<Claw> find_induced_claw(const Graph& g) {
    for (Vertex c = 0; c < g.size(); ++c) {
        const auto& nb = g.neighbors(c);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.adjacent(nb[a], nb[b])) continue;
                for (std::size_t d = b + 1; d < nb.size(); ++d) {
                    if (!g.adjacent(nb[a], nb[d]) && !g.adjacent(nb[b], nb[d])) {
                        return Claw{c, {nb[a], nb[b], nb[d]}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<VertexSet> component_vertex_sets(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.size(), false);
    for (Vertex root = 0; root < g.size(); ++root) {
        if (seen[root]) continue;
        VertexSet comp;
        std::vector<Vertex> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& comp : component_vertex_sets(g)) out.push_back(g.induced(comp));
    return out;
}

}  // namespace closedgraphs
