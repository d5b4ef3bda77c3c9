#ifndef ROBUSTPD_FAMILIES_HPP
#define ROBUSTPD_FAMILIES_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "robustpd/graph.hpp"

namespace robustpd {

enum class FamilyKind { path, cycle, star, complete, complete_bipartite, complete_multipartite, grid, custom };

/// Parameterised graph family.
///
/// Vertex numbering of the generated graphs:
///  - path / cycle: 0..n-1 along the path.
///  - star:n (K_{1,n}): centre 0, leaves 1..n. Labels "c", "l1".."ln".
///  - complete_bipartite(a,b): side A = 0..a-1 ("x1".."xa"), side B = a..a+b-1 ("y1".."yb").
///  - complete_multipartite(parts): parts laid out consecutively; labels "p<i>.<j>".
///  - grid(rows, cols): row-major, labels "(r,c)" 1-indexed.
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    std::vector<int> params;
    std::size_t custom_order = 0;
    std::vector<Edge> custom_edges;

    static FamilySpec path(int n) { return {FamilyKind::path, {n}, 0, {}}; }
    static FamilySpec cycle(int n) { return {FamilyKind::cycle, {n}, 0, {}}; }
    static FamilySpec star(int leaves) { return {FamilyKind::star, {leaves}, 0, {}}; }
    static FamilySpec complete(int n) { return {FamilyKind::complete, {n}, 0, {}}; }
    static FamilySpec complete_bipartite(int a, int b) { return {FamilyKind::complete_bipartite, {a, b}, 0, {}}; }
    static FamilySpec complete_multipartite(std::vector<int> parts) {
        return {FamilyKind::complete_multipartite, std::move(parts), 0, {}};
    }
    static FamilySpec grid(int rows, int cols) { return {FamilyKind::grid, {rows, cols}, 0, {}}; }
    static FamilySpec custom(std::size_t n, std::vector<Edge> edges) {
        return {FamilyKind::custom, {}, n, std::move(edges)};
    }
};

namespace detail {

inline void require_positive(int value, const char* field) {
    if (value < 1) throw ParameterError(field, "must be positive, got " + std::to_string(value));
}

inline Graph complete_multipartite_graph(const std::vector<int>& parts) {
    if (parts.empty()) throw ParameterError("parts", "at least one part is required");
    std::vector<int> part_of;
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        require_positive(parts[p], "parts");
        for (int i = 0; i < parts[p]; ++i) {
            part_of.push_back(static_cast<int>(p));
            labels.push_back("p" + std::to_string(p + 1) + "." + std::to_string(i + 1));
        }
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < part_of.size(); ++u)
        for (Vertex v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return Graph::from_edges(part_of.size(), edges, std::move(labels));
}

} // namespace detail

inline Graph build(const FamilySpec& spec) {
    auto param = [&](std::size_t i, const char* field) {
        if (spec.params.size() <= i) throw ParameterError(field, "missing");
        detail::require_positive(spec.params[i], field);
        return spec.params[i];
    };
    std::vector<Edge> edges;
    switch (spec.kind) {
    case FamilyKind::path: {
        int n = param(0, "n");
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        return Graph::from_edges(static_cast<std::size_t>(n), edges);
    }
    case FamilyKind::cycle: {
        int n = param(0, "n");
        if (n < 3) throw ParameterError("n", "a cycle needs at least 3 vertices");
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        return Graph::from_edges(static_cast<std::size_t>(n), edges);
    }
    case FamilyKind::star: {
        int leaves = param(0, "leaves");
        std::vector<std::string> labels{"c"};
        for (int i = 1; i <= leaves; ++i) {
            edges.emplace_back(0, i);
            labels.push_back("l" + std::to_string(i));
        }
        return Graph::from_edges(static_cast<std::size_t>(leaves) + 1, edges, std::move(labels));
    }
    case FamilyKind::complete: {
        int n = param(0, "n");
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(static_cast<std::size_t>(n), edges);
    }
    case FamilyKind::complete_bipartite: {
        int a = param(0, "a");
        int b = param(1, "b");
        std::vector<std::string> labels;
        for (int i = 1; i <= a; ++i) labels.push_back("x" + std::to_string(i));
        for (int i = 1; i <= b; ++i) labels.push_back("y" + std::to_string(i));
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
        return Graph::from_edges(static_cast<std::size_t>(a + b), edges, std::move(labels));
    }
    case FamilyKind::complete_multipartite:
        return detail::complete_multipartite_graph(spec.params);
    case FamilyKind::grid: {
        int rows = param(0, "rows");
        int cols = param(1, "cols");
        std::vector<std::string> labels;
        auto id = [cols](int r, int c) { return static_cast<Vertex>(r * cols + c); };
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                labels.push_back("(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
                if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
                if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
            }
        return Graph::from_edges(static_cast<std::size_t>(rows * cols), edges, std::move(labels));
    }
    case FamilyKind::custom:
        return Graph::from_edges(spec.custom_order, spec.custom_edges);
    }
    throw ParameterError("kind", "unknown family");
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, char sep, const char* field) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        auto end = text.find(sep, start);
        auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
            throw ParameterError(field, "expected an integer, got '" + std::string(piece) + "'");
        out.push_back(value);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

} // namespace detail

/// Parses "grid:4x4", "kab:3,4", "kparts:3,3,3", "star:15", "path:n", "cycle:n", "complete:n".
inline FamilySpec parse_family(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParameterError("family", "expected <kind>:<params>");
    auto kind = text.substr(0, colon);
    auto rest = text.substr(colon + 1);
    auto one = [&](const char* field) {
        auto v = detail::parse_int_list(rest, ',', field);
        if (v.size() != 1) throw ParameterError(field, "expected one integer");
        return v[0];
    };
    if (kind == "path") return FamilySpec::path(one("n"));
    if (kind == "cycle") return FamilySpec::cycle(one("n"));
    if (kind == "star") return FamilySpec::star(one("leaves"));
    if (kind == "complete") return FamilySpec::complete(one("n"));
    if (kind == "kab") {
        auto v = detail::parse_int_list(rest, ',', "kab");
        if (v.size() != 2) throw ParameterError("kab", "expected a,b");
        return FamilySpec::complete_bipartite(v[0], v[1]);
    }
    if (kind == "kparts") return FamilySpec::complete_multipartite(detail::parse_int_list(rest, ',', "parts"));
    if (kind == "grid") {
        auto v = detail::parse_int_list(rest, 'x', "grid");
        if (v.size() != 2) throw ParameterError("grid", "expected <rows>x<cols>");
        return FamilySpec::grid(v[0], v[1]);
    }
    throw ParameterError("family", "unknown family kind '" + std::string(kind) + "'");
}

struct TerminalCounts {
    int paths = 0;
    int cycles = 0;
    friend bool operator==(const TerminalCounts&, const TerminalCounts&) = default;
};

/// Counts terminal paths (degree-2 chains from v ending at a leaf) and
/// terminal cycles (degree-2 chains leaving v and returning to it).
inline TerminalCounts terminal_structures(const Graph& g, Vertex v) {
    if (v >= g.order()) throw ParameterError("v", "vertex out of range");
    TerminalCounts out;
    int cycle_ends = 0;
    g.neighbors(v).for_each([&](Vertex first) {
        Vertex prev = v;
        Vertex cur = first;
        while (true) {
            if (cur == v) {
                ++cycle_ends;
                return;
            }
            auto d = g.degree(cur);
            if (d == 1) {
                ++out.paths;
                return;
            }
            if (d != 2) return;
            VertexSet next = g.neighbors(cur);
            next.erase(prev);
            prev = cur;
            cur = next.first();
        }
    });
    // each terminal cycle is walked once from each end
    out.cycles = cycle_ends / 2;
    return out;
}

} // namespace robustpd

#endif
