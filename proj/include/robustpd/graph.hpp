#ifndef ROBUSTPD_GRAPH_HPP
#define ROBUSTPD_GRAPH_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "robustpd/error.hpp"
#include "robustpd/vertex_set.hpp"

namespace robustpd {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Vertex order is part of the identity of a graph: solvers break ties
/// lexicographically under it. Labels are display names only and do not take
/// part in equality.
class Graph {
public:
    /// Builds from an edge list. Rejects self-loops, out-of-range ends and repeated edges.
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels = {}) {
        if (n == 0) throw ParameterError("n", "a graph needs at least one vertex");
        if (n > kMaxVertices)
            throw ParameterError("n", "at most " + std::to_string(kMaxVertices) + " vertices are supported");
        if (!labels.empty() && labels.size() != n) throw ParameterError("labels", "expected one label per vertex");
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, VertexSet{});
        for (const auto& [u, v] : edges) {
            if (u >= n || v >= n)
                throw ParameterError("edge", "endpoint out of range in " + std::to_string(u) + "-" + std::to_string(v));
            if (u == v) throw ParameterError("edge", "self-loop at " + std::to_string(u));
            if (g.adj_[u].contains(v))
                throw ParameterError("edge", "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
            g.adj_[u].insert(v);
            g.adj_[v].insert(u);
            ++g.m_;
        }
        if (labels.empty()) {
            labels.reserve(n);
            for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
        }
        g.labels_ = std::move(labels);
        return g;
    }

    [[nodiscard]] std::size_t order() const { return n_; }
    [[nodiscard]] std::size_t edge_count() const { return m_; }
    [[nodiscard]] const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    [[nodiscard]] VertexSet closed_neighbors(Vertex v) const {
        VertexSet s = adj_[v];
        s.insert(v);
        return s;
    }
    [[nodiscard]] std::size_t degree(Vertex v) const { return adj_[v].size(); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    [[nodiscard]] VertexSet vertices() const { return VertexSet::prefix(n_); }
    [[nodiscard]] const std::string& label(Vertex v) const { return labels_[v]; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

    [[nodiscard]] std::size_t max_degree() const {
        std::size_t d = 0;
        for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }
    [[nodiscard]] std::size_t min_degree() const {
        std::size_t d = n_;
        for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    /// Edges (u, v) with u < v, sorted.
    [[nodiscard]] std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n_; ++u)
            adj_[u].for_each([&](Vertex v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    /// Vertices reachable from `start` inside `within`.
    [[nodiscard]] VertexSet component(Vertex start, const VertexSet& within) const {
        VertexSet seen{start};
        VertexSet frontier{start};
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](Vertex v) { next |= adj_[v]; });
            next &= within;
            next -= seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }
    [[nodiscard]] bool is_connected() const { return component(0, vertices()).size() == n_; }

    [[nodiscard]] Vertex find_label(const std::string& label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw ParameterError("vertex", "no vertex labelled " + label);
        return static_cast<Vertex>(it - labels_.begin());
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    Graph() = default;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

/// Throws StructuralError unless g is connected.
inline void require_connected(const Graph& g, const char* op) {
    if (!g.is_connected()) throw StructuralError(std::string(op) + ": graph is disconnected");
}

/// "n m" header followed by one "u v" line per edge.
inline std::string render_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto read_pair = [&](long long& a, long long& b) {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) throw ParseError(lineno, "expected two integers, got '" + line + "'");
    };

    if (!next_content_line()) throw ParseError(0, "empty input");
    long long n = 0, m = 0;
    read_pair(n, m);
    if (n < 1) throw ParseError(lineno, "vertex count must be at least 1");
    if (n > static_cast<long long>(kMaxVertices))
        throw ParseError(lineno, "vertex count exceeds " + std::to_string(kMaxVertices));
    if (m < 0) throw ParseError(lineno, "edge count must be non-negative");

    std::vector<Edge> edges;
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line()) throw ParseError(lineno, "expected " + std::to_string(m) + " edge lines");
        long long u = 0, v = 0;
        read_pair(u, v);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex index out of range");
        if (u == v) throw ParseError(lineno, "self-loop at " + std::to_string(u));
        auto uu = static_cast<Vertex>(u), vv = static_cast<Vertex>(v);
        if (adj[uu].contains(vv)) throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        adj[uu].insert(vv);
        adj[vv].insert(uu);
        edges.emplace_back(uu, vv);
    }
    if (next_content_line()) throw ParseError(lineno, "unexpected content after the edge list");
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

} // namespace robustpd

#endif
