#include "closedgraphs/orientation.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "closedgraphs/error.hpp"

namespace closedgraphs {

OrientedGraph OrientedGraph::from_arcs(std::vector<std::string> names, std::vector<std::pair<Vertex, Vertex>> arcs) {
    for (const auto& [u, v] : arcs) {
        if (u >= names.size() || v >= names.size()) throw InputError("arc endpoint out of range");
    }
    std::vector<int> rank(names.size());
    for (std::size_t v = 0; v < rank.size(); ++v) rank[v] = static_cast<int>(v + 1);
    return OrientedGraph{std::move(names), std::move(arcs), std::move(rank)};
}

OrientedGraph orient(const Graph& g, const Labelling& lab, const TermOrder& o) {
    const auto labels = lab.labels_for(g);
    const std::size_t n = g.size();
    OrientedGraph og{g.names(), {}, labels};
    for (const auto& [u, v] : g.edges()) {
        const auto i = static_cast<std::size_t>(labels[u]);
        const auto j = static_cast<std::size_t>(labels[v]);
        if (o.compare(Monomial::xy(n, i, j), Monomial::xy(n, j, i)) > 0) {
            og.arcs.emplace_back(u, v);
        } else {
            og.arcs.emplace_back(v, u);
        }
    }
    return og;
}

TopologicalResult topological_labelling(const OrientedGraph& og) {
    const std::size_t n = og.names.size();
    std::vector<std::vector<Vertex>> out(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& [u, v] : og.arcs) {
        out[u].push_back(v);
        ++indegree[v];
    }
    using Entry = std::pair<int, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> sources;
    for (Vertex v = 0; v < n; ++v) {
        if (indegree[v] == 0) sources.emplace(og.rank[v], v);
    }
    std::vector<std::string> order;
    while (!sources.empty()) {
        const Vertex v = sources.top().second;
        sources.pop();
        order.push_back(og.names[v]);
        for (Vertex w : out[v]) {
            if (--indegree[w] == 0) sources.emplace(og.rank[w], w);
        }
    }
    TopologicalResult result;
    if (order.size() == n) {
        result.labelling = Labelling::from_order(std::move(order));
    } else if (auto cycle = find_directed_cycle(og)) {
        result.cycle = std::move(*cycle);
    } else {
        throw InternalError("topological sort stalled but no directed cycle was found");
    }
    return result;
}

std::optional<std::vector<Vertex>> find_directed_cycle(const OrientedGraph& og) {
    const std::size_t n = og.names.size();
    std::vector<std::vector<Vertex>> out(n);
    for (const auto& [u, v] : og.arcs) out[u].push_back(v);

    enum class Colour { white, grey, black };
    std::vector<Colour> colour(n, Colour::white);
    std::vector<Vertex> path;
    std::optional<std::vector<Vertex>> found;

    std::function<bool(Vertex)> visit = [&](Vertex v) {
        colour[v] = Colour::grey;
        path.push_back(v);
        for (Vertex w : out[v]) {
            if (colour[w] == Colour::grey) {
                found.emplace(std::find(path.begin(), path.end(), w), path.end());
                return true;
            }
            if (colour[w] == Colour::white && visit(w)) return true;
        }
        path.pop_back();
        colour[v] = Colour::black;
        return false;
    };
    for (Vertex v = 0; v < n; ++v) {
        if (colour[v] == Colour::white && visit(v)) return found;
    }
    return std::nullopt;
}

}  // namespace closedgraphs
