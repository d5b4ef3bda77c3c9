#ifndef ROBUSTPD_BLOCKS_HPP
#define ROBUSTPD_BLOCKS_HPP

#include <algorithm>
#include <deque>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>

#include "robustpd/pd.hpp"
#include "robustpd/robust.hpp"

namespace robustpd {

struct BlockDecomposition {
    VertexSet cut_vertices;
    /// Vertex sets of the blocks, in lexicographic order.
    std::vector<VertexSet> blocks;
};

/// Cut vertices and blocks (maximal pieces without a cut vertex) of a connected graph.
inline BlockDecomposition decompose(const Graph& g) {
    require_connected(g, "decompose");
    BlockDecomposition out;
    if (g.order() == 1) {
        out.blocks.push_back(VertexSet{0});
        return out;
    }
    struct EdgeInfo {
        std::size_t component = 0;
    };
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property, EdgeInfo>;
    BoostGraph bg(g.order());
    for (const auto& [u, v] : g.edges()) boost::add_edge(u, v, bg);
    auto component = boost::get(&EdgeInfo::component, bg);
    std::vector<BoostGraph::vertex_descriptor> articulation;
    auto count = boost::biconnected_components(bg, component, std::back_inserter(articulation)).first;

    out.blocks.assign(count, VertexSet{});
    for (auto [it, end] = boost::edges(bg); it != end; ++it) {
        auto& block = out.blocks[component[*it]];
        block.insert(static_cast<Vertex>(boost::source(*it, bg)));
        block.insert(static_cast<Vertex>(boost::target(*it, bg)));
    }
    for (auto v : articulation) out.cut_vertices.insert(static_cast<Vertex>(v));
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const VertexSet& a, const VertexSet& b) { return lex_compare(a, b) < 0; });
    return out;
}

namespace detail {

inline bool is_clique(const Graph& g, const VertexSet& members) {
    bool ok = true;
    members.for_each([&](Vertex v) {
        VertexSet others = members;
        others.erase(v);
        if (!others.is_subset_of(g.neighbors(v))) ok = false;
    });
    return ok;
}

} // namespace detail

/// Every block induces a complete graph.
inline bool is_block_graph(const Graph& g) {
    auto d = decompose(g);
    return std::all_of(d.blocks.begin(), d.blocks.end(), [&](const VertexSet& b) { return detail::is_clique(g, b); });
}

enum class BlockClass { empty, one, multi };

inline const char* to_string(BlockClass c) {
    switch (c) {
    case BlockClass::empty: return "empty";
    case BlockClass::one: return "one";
    case BlockClass::multi: return "multi";
    }
    return "?";
}

struct BlockNode {
    VertexSet members;
    std::vector<Vertex> cut_members;
    std::vector<Vertex> non_cut_members;
    BlockClass cls = BlockClass::empty;
};

/// Tree on cut vertices and block vertices of a block graph; a block vertex is
/// joined to each cut vertex its block contains.
///
/// Node ids: cut vertex i is node i, block b is node cut_vertices.size() + b.
struct RefinedCutTree {
    std::vector<Vertex> cut_vertices;
    std::vector<BlockNode> blocks;
    /// (block index, cut index) pairs.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t root = 0;

    [[nodiscard]] std::size_t node_count() const { return cut_vertices.size() + blocks.size(); }
    [[nodiscard]] bool is_block_node(std::size_t node) const { return node >= cut_vertices.size(); }
    [[nodiscard]] std::size_t block_node(std::size_t b) const { return cut_vertices.size() + b; }
    [[nodiscard]] std::optional<std::size_t> cut_index(Vertex v) const {
        auto it = std::lower_bound(cut_vertices.begin(), cut_vertices.end(), v);
        if (it == cut_vertices.end() || *it != v) return std::nullopt;
        return static_cast<std::size_t>(it - cut_vertices.begin());
    }
    [[nodiscard]] std::vector<std::vector<std::size_t>> adjacency() const {
        std::vector<std::vector<std::size_t>> adj(node_count());
        for (auto [b, c] : edges) {
            adj[block_node(b)].push_back(c);
            adj[c].push_back(block_node(b));
        }
        return adj;
    }
    [[nodiscard]] std::string node_name(std::size_t node) const {
        if (is_block_node(node)) return "w" + std::to_string(node - cut_vertices.size() + 1);
        return "x" + std::to_string(node + 1);
    }
};

/// Connected with |E| = |V| - 1, and every edge joins a block node to a cut node.
inline bool is_tree(const RefinedCutTree& t) {
    if (t.node_count() == 0 || t.edges.size() + 1 != t.node_count()) return false;
    for (auto [b, c] : t.edges)
        if (b >= t.blocks.size() || c >= t.cut_vertices.size()) return false;
    auto adj = t.adjacency();
    std::vector<bool> seen(t.node_count(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto w : adj[u])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == t.node_count();
}

inline RefinedCutTree refined_cut_tree(const Graph& g) {
    if (!is_block_graph(g)) throw StructuralError("refined_cut_tree: not a block graph");
    auto d = decompose(g);
    if (d.cut_vertices.empty()) throw StructuralError("refined_cut_tree: graph has no cut vertex (single clique)");
    RefinedCutTree t;
    t.cut_vertices = d.cut_vertices.to_vector();
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        BlockNode node;
        node.members = d.blocks[b];
        node.members.for_each([&](Vertex v) {
            if (d.cut_vertices.contains(v)) {
                node.cut_members.push_back(v);
                t.edges.emplace_back(b, *t.cut_index(v));
            } else {
                node.non_cut_members.push_back(v);
            }
        });
        auto extra = node.non_cut_members.size();
        node.cls = extra == 0 ? BlockClass::empty : extra == 1 ? BlockClass::one : BlockClass::multi;
        t.blocks.push_back(std::move(node));
    }
    if (!is_tree(t)) throw std::logic_error("refined_cut_tree: construction is not a tree");
    return t;
}

enum class CutTreeRule { domination, empty_block, one_block };

struct CutTreeStep {
    std::size_t node;
    CutTreeRule rule;
    std::size_t source;
};

struct CutTreeObservation {
    /// Indexed by node id.
    std::vector<bool> observed;
    bool is_full = false;
    std::vector<CutTreeStep> trace;
};

/// Observation on the refined cut tree from PMUs on cut vertices `s` (original vertex ids).
///
/// Rules: a PMU on x observes every neighbouring block node w together with
/// N(w); an observed cut vertex whose only unobserved neighbour is an empty block
/// with at most one unobserved neighbour observes that block and its neighbours;
/// an observed cut vertex whose only unobserved neighbour is a one-block whose
/// neighbours are all observed observes that block. An empty block holds no
/// vertex of its own, so it also counts as observed once all its neighbours are.
inline CutTreeObservation cut_tree_observe(const RefinedCutTree& t, const VertexSet& s) {
    const auto adj = t.adjacency();
    CutTreeObservation out;
    out.observed.assign(t.node_count(), false);
    std::deque<std::size_t> queue;

    auto mark = [&](std::size_t node, CutTreeRule rule, std::size_t source) {
        if (out.observed[node]) return;
        out.observed[node] = true;
        out.trace.push_back({node, rule, source});
        // the states seen by cut vertices within distance two changed
        auto touch_cut = [&](std::size_t c) { queue.push_back(c); };
        if (t.is_block_node(node)) {
            for (auto c : adj[node]) touch_cut(c);
        } else {
            touch_cut(node);
            for (auto w : adj[node])
                for (auto c : adj[w]) touch_cut(c);
        }
    };
    auto observe_closed = [&](std::size_t w, CutTreeRule rule, std::size_t source) {
        mark(w, rule, source);
        for (auto c : adj[w]) mark(c, rule, source);
    };

    s.for_each([&](Vertex v) {
        auto idx = t.cut_index(v);
        if (!idx) throw ParameterError("s", "vertex " + std::to_string(v) + " is not a cut vertex");
        mark(*idx, CutTreeRule::domination, *idx);
        for (auto w : adj[*idx]) observe_closed(w, CutTreeRule::domination, *idx);
    });

    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        if (!out.observed[x]) continue;
        for (auto w : adj[x]) {
            if (out.observed[w] || t.blocks[w - t.cut_vertices.size()].cls != BlockClass::empty) continue;
            if (std::all_of(adj[w].begin(), adj[w].end(), [&](std::size_t c) { return out.observed[c]; }))
                mark(w, CutTreeRule::empty_block, x);
        }
        std::optional<std::size_t> sole;
        int unobserved = 0;
        for (auto w : adj[x])
            if (!out.observed[w]) {
                ++unobserved;
                sole = w;
            }
        if (unobserved != 1) continue;
        const auto& block = t.blocks[*sole - t.cut_vertices.size()];
        int block_unobserved = 0;
        for (auto c : adj[*sole])
            if (!out.observed[c]) ++block_unobserved;
        if (block.cls == BlockClass::empty && block_unobserved <= 1)
            observe_closed(*sole, CutTreeRule::empty_block, x);
        else if (block.cls == BlockClass::one && block_unobserved == 0)
            mark(*sole, CutTreeRule::one_block, x);
    }
    out.is_full = std::all_of(out.observed.begin(), out.observed.end(), [](bool b) { return b; });
    return out;
}

/// Power domination number of a block graph, searched over cut-vertex sets on the
/// refined cut tree. A single clique has no cut vertex and is dominated by vertex 0.
inline GammaResult gamma_p_block(const Graph& g) {
    if (!is_block_graph(g)) throw StructuralError("gamma_p_block: not a block graph");
    auto d = decompose(g);
    if (d.cut_vertices.empty()) return {1, VertexSet{0}};
    auto t = refined_cut_tree(g);
    for (std::size_t size = 1; size <= t.cut_vertices.size(); ++size) {
        std::optional<VertexSet> found;
        detail::for_each_combination(t.cut_vertices, size, [&](const VertexSet& s) {
            if (!cut_tree_observe(t, s).is_full) return false;
            found = s;
            return true;
        });
        if (found) return {static_cast<int>(size), *found};
    }
    throw std::logic_error("gamma_p_block: all cut vertices fail to dominate the cut tree");
}

/// Robust number of a block graph: k+1 PMUs on every vertex of a minimum power dominating set.
inline RobustResult gpk_block(const Graph& g, int k) {
    if (k < 0) throw ParameterError("k", "must be non-negative");
    auto gamma = gamma_p_block(g);
    return {(k + 1) * gamma.value, PmuMultiset::uniform(gamma.witness, k + 1)};
}

/// Indented outline of the cut tree rooted at t.root.
inline std::string render_text(const RefinedCutTree& t, const Graph& g) {
    auto adj = t.adjacency();
    std::ostringstream os;
    std::vector<bool> seen(t.node_count(), false);
    auto describe = [&](std::size_t node) {
        if (!t.is_block_node(node)) return t.node_name(node) + " cut " + g.label(t.cut_vertices[node]);
        const auto& b = t.blocks[node - t.cut_vertices.size()];
        std::string s = t.node_name(node) + " " + to_string(b.cls) + "-block [";
        bool first = true;
        b.members.for_each([&](Vertex v) {
            s += (first ? "" : " ") + g.label(v);
            first = false;
        });
        return s + "]";
    };
    auto walk = [&](auto&& self, std::size_t node, int depth) -> void {
        seen[node] = true;
        os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << describe(node) << '\n';
        for (auto w : adj[node])
            if (!seen[w]) self(self, w, depth + 1);
    };
    walk(walk, t.root, 0);
    return os.str();
}

/// Graphviz description: cut vertices as circles, block vertices as boxes.
inline std::string render_dot(const RefinedCutTree& t, const Graph& g) {
    std::ostringstream os;
    os << "graph refined_cut_tree {\n";
    for (std::size_t c = 0; c < t.cut_vertices.size(); ++c)
        os << "  " << t.node_name(c) << " [shape=circle,label=\"" << g.label(t.cut_vertices[c]) << "\"];\n";
    for (std::size_t b = 0; b < t.blocks.size(); ++b)
        os << "  " << t.node_name(t.block_node(b)) << " [shape=box,label=\"" << t.node_name(t.block_node(b)) << " "
           << to_string(t.blocks[b].cls) << "\"];\n";
    for (auto [b, c] : t.edges) os << "  " << t.node_name(t.block_node(b)) << " -- " << t.node_name(c) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace robustpd

#endif
