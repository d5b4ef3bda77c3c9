#ifndef ROBUSTPD_PD_HPP
#define ROBUSTPD_PD_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "robustpd/graph.hpp"
#include "robustpd/search.hpp"

namespace robustpd {

enum class ObservationRule { domination, zero_forcing };

struct ForcingStep {
    Vertex vertex;
    ObservationRule rule;
    /// Forcing vertex for zero-forcing steps; the PMU vertex for domination steps.
    Vertex source;
    friend bool operator==(const ForcingStep&, const ForcingStep&) = default;
};

struct ObservationResult {
    VertexSet observed;
    bool is_full = false;
    std::vector<ForcingStep> trace;
};

namespace detail {

/// Domination step followed by zero forcing, driven by a queue of observed
/// vertices whose unobserved-neighbour count has dropped to one.
///
/// `pick` chooses which queued vertex to process next; any choice yields the
/// same fixed point.
template <bool Trace, typename Pick>
VertexSet propagate(const Graph& g, const VertexSet& s, std::vector<ForcingStep>* trace, Pick&& pick) {
    const auto n = g.order();
    VertexSet observed;
    std::vector<std::uint16_t> unobserved_nbrs(n);
    for (Vertex v = 0; v < n; ++v) unobserved_nbrs[v] = static_cast<std::uint16_t>(g.degree(v));
    std::vector<Vertex> queue;

    auto mark = [&](Vertex w, ObservationRule rule, Vertex source) {
        observed.insert(w);
        if constexpr (Trace) trace->push_back({w, rule, source});
        if (unobserved_nbrs[w] == 1) queue.push_back(w);
        g.neighbors(w).for_each([&](Vertex x) {
            if (--unobserved_nbrs[x] == 1 && observed.contains(x)) queue.push_back(x);
        });
    };

    s.for_each([&](Vertex v) {
        if (!observed.contains(v)) mark(v, ObservationRule::domination, v);
        g.neighbors(v).for_each([&](Vertex w) {
            if (!observed.contains(w)) mark(w, ObservationRule::domination, v);
        });
    });

    while (!queue.empty()) {
        std::size_t at = pick(queue.size());
        Vertex v = queue[at];
        queue[at] = queue.back();
        queue.pop_back();
        if (unobserved_nbrs[v] != 1) continue;
        Vertex w = (g.neighbors(v) - observed).first();
        mark(w, ObservationRule::zero_forcing, v);
    }
    return observed;
}

inline std::size_t pick_last(std::size_t size) { return size - 1; }

} // namespace detail

/// Fixed point of the observation process started from PMU locations `s`.
inline ObservationResult observe(const Graph& g, const VertexSet& s) {
    ObservationResult r;
    r.observed = detail::propagate<true>(g, s, &r.trace, detail::pick_last);
    r.is_full = r.observed.size() == g.order();
    return r;
}

/// Same as observe(), processing queued forces in random order.
inline ObservationResult observe(const Graph& g, const VertexSet& s, std::mt19937_64& rng) {
    ObservationResult r;
    r.observed = detail::propagate<true>(g, s, &r.trace, [&](std::size_t size) {
        return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
    });
    r.is_full = r.observed.size() == g.order();
    return r;
}

inline VertexSet observed_closure(const Graph& g, const VertexSet& s) {
    return detail::propagate<false>(g, s, nullptr, detail::pick_last);
}

inline bool is_pds(const Graph& g, const VertexSet& s) { return observed_closure(g, s).size() == g.order(); }

inline bool is_minimal_pds(const Graph& g, const VertexSet& s) {
    if (!is_pds(g, s)) return false;
    bool minimal = true;
    s.for_each([&](Vertex v) {
        if (!minimal) return;
        VertexSet t = s;
        t.erase(v);
        if (is_pds(g, t)) minimal = false;
    });
    return minimal;
}

/// Memoised is_pds over one graph.
class PdsOracle {
public:
    explicit PdsOracle(const Graph& g) : g_(&g) {}
    bool operator()(const VertexSet& s) {
        auto it = memo_.find(s);
        if (it != memo_.end()) return it->second;
        bool r = is_pds(*g_, s);
        memo_.emplace(s, r);
        return r;
    }
    [[nodiscard]] const Graph& graph() const { return *g_; }
    [[nodiscard]] std::size_t cached() const { return memo_.size(); }

private:
    const Graph* g_;
    std::unordered_map<VertexSet, bool, VertexSetHash> memo_;
};

/// Vertices a minimum search may restrict itself to: every vertex, or only
/// those of degree >= 3 when the maximum degree is at least 3.
inline std::vector<Vertex> pmu_candidates(const Graph& g, bool restrict_degree) {
    std::vector<Vertex> out;
    bool restrict = restrict_degree && g.max_degree() >= 3;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!restrict || g.degree(v) >= 3) out.push_back(v);
    return out;
}

struct GammaResult {
    int value = 0;
    VertexSet witness;
};

/// Power domination number with the lexicographically first optimal set
/// among the searched candidates.
///
/// When the maximum degree is at least 3 the search only places PMUs on
/// vertices of degree >= 3; some optimal set always lives there.
inline GammaResult gamma_p(const Graph& g, const SearchControl& control = {}, bool restrict_degree = true) {
    require_connected(g, "gamma_p");
    auto pool = pmu_candidates(g, restrict_degree);
    for (std::size_t size = 1; size <= pool.size(); ++size) {
        // branch on the first chosen candidate so workers stay in lexicographic order
        std::optional<VertexSet> hit;
        try {
            hit = detail::first_hit<VertexSet>(
                pool.size(), control.jobs, [] { return 0; },
                [&](int&, std::size_t branch, auto abandon) -> std::optional<VertexSet> {
                    if (pool.size() - branch < size) return std::nullopt;
                    std::vector<Vertex> rest(pool.begin() + static_cast<std::ptrdiff_t>(branch) + 1, pool.end());
                    std::optional<VertexSet> found;
                    detail::DeadlineTicker ticker(control);
                    detail::for_each_combination(rest, size - 1, [&](VertexSet s) {
                        if (ticker.expired()) throw detail::DeadlineHit{};
                        if (abandon()) return true;
                        s.insert(pool[branch]);
                        if (is_pds(g, s)) {
                            found = s;
                            return true;
                        }
                        return false;
                    });
                    return found;
                });
        } catch (const detail::DeadlineHit&) {
            throw SearchTimeout("gamma_p: deadline reached", static_cast<int>(size));
        }
        if (hit) return {static_cast<int>(size), *hit};
    }
    throw std::logic_error("gamma_p: the full vertex set failed to power dominate");
}

/// All minimal power dominating sets of size <= max_size, in lexicographic order.
inline std::vector<VertexSet> enumerate_minimal_pds(const Graph& g, int max_size) {
    std::vector<VertexSet> out;
    std::vector<Vertex> pool = g.vertices().to_vector();
    auto limit = std::min<std::size_t>(static_cast<std::size_t>(std::max(max_size, 0)), pool.size());
    for (std::size_t size = 1; size <= limit; ++size)
        detail::for_each_combination(pool, size, [&](const VertexSet& s) {
            if (is_minimal_pds(g, s)) out.push_back(s);
            return false;
        });
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return lex_compare(a, b) < 0; });
    return out;
}

} // namespace robustpd

#endif
