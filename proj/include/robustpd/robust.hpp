#ifndef ROBUSTPD_ROBUST_HPP
#define ROBUSTPD_ROBUST_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "robustpd/families.hpp"
#include "robustpd/multiset.hpp"
#include "robustpd/overlap.hpp"
#include "robustpd/pd.hpp"

namespace robustpd {

/// Underlying set is a minimal power dominating set.
inline bool is_essential(const Graph& g, const PmuMultiset& m) { return is_minimal_pds(g, m.support()); }

struct RobustCheck {
    bool ok = false;
    /// A size-k failure multiset that breaks the placement, when one exists.
    std::optional<PmuMultiset> counterexample;
    std::string reason;
};

namespace detail {

using Entries = std::vector<std::pair<Vertex, int>>;

/// Searches for a set Z of support vertices with total multiplicity <= k whose
/// removal leaves a non-dominating set. Only maximal Z are tested: losing more
/// vertices can never help. Entries must be sorted by multiplicity ascending so
/// cheap-to-kill vertices are tried first.
class FatalRemovalSearch {
public:
    FatalRemovalSearch(PdsOracle& pds, const Entries& entries, VertexSet support, int k)
        : pds_(pds), entries_(entries), support_(support), k_(k) {}

    std::optional<VertexSet> run() {
        VertexSet z;
        if (walk(0, k_, z, kNone)) return found_;
        return std::nullopt;
    }

private:
    static constexpr int kNone = 1 << 30;

    bool walk(std::size_t i, int budget, VertexSet& z, int min_skipped) {
        if (i == entries_.size() || entries_[i].second > budget) {
            // anything unvisited is at least as heavy as entries_[i]
            if (min_skipped <= budget) return false;
            if (!pds_(support_ - z)) {
                found_ = z;
                return true;
            }
            return false;
        }
        auto [v, m] = entries_[i];
        z.insert(v);
        bool hit = walk(i + 1, budget - m, z, min_skipped);
        z.erase(v);
        if (hit) return true;
        return walk(i + 1, budget, z, std::min(min_skipped, m));
    }

    PdsOracle& pds_;
    const Entries& entries_;
    VertexSet support_;
    int k_;
    VertexSet found_;
};

inline Entries sorted_entries(const PmuMultiset& s) {
    Entries e(s.counts().begin(), s.counts().end());
    std::stable_sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return e;
}

/// Extends "all PMUs on z" to a failure multiset of exactly k PMUs.
inline PmuMultiset failure_from_zero_set(const PmuMultiset& s, const VertexSet& z, int k) {
    PmuMultiset f;
    z.for_each([&](Vertex v) { f.add(v, s.multiplicity(v)); });
    int extra = k - f.total();
    for (const auto& [v, m] : s.counts()) {
        if (extra == 0) break;
        if (z.contains(v)) continue;
        int take = std::min(extra, m);
        f.add(v, take);
        extra -= take;
    }
    return f;
}

inline RobustCheck check_robust(PdsOracle& pds, const PmuMultiset& s, int k) {
    if (k < 0) throw ParameterError("k", "must be non-negative");
    if (s.total() < k) return {false, std::nullopt, "insufficient PMUs"};
    auto entries = sorted_entries(s);
    FatalRemovalSearch search(pds, entries, s.support(), k);
    if (auto z = search.run()) {
        auto f = failure_from_zero_set(s, *z, k);
        return {false, f, "removing " + to_string(f) + " leaves a non-dominating set"};
    }
    return {true, std::nullopt, {}};
}

} // namespace detail

/// Whether every removal of k PMUs from s leaves a power dominating underlying set.
///
/// A placement with fewer than k PMUs is reported as not robust. When the power
/// domination number is supplied, placements below gamma_p + k are rejected up front.
inline RobustCheck is_k_rpds(const Graph& g, const PmuMultiset& s, int k, std::optional<int> known_gamma = std::nullopt) {
    if (k < 0) throw ParameterError("k", "must be non-negative");
    if (known_gamma && s.total() < *known_gamma + k && s.total() >= k)
        return {false, std::nullopt, "fewer than gamma_p + k PMUs"};
    PdsOracle pds(g);
    return detail::check_robust(pds, s, k);
}

// ---------------------------------------------------------------------------
// Bounds

struct BoundEntry {
    int value = 0;
    std::string source;
    friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

struct BoundReport {
    int k = 0;
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;
    int best_lower = 0;
    int best_upper = 0;
    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct Interval {
    int lo = 0;
    int hi = 0;
    [[nodiscard]] bool exact() const { return lo == hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// What is already known about a graph when bounding its k-robust number.
struct BoundContext {
    std::optional<int> gamma;
    /// Vertex count; enables the (k+1)n/3 bound for connected graphs with n >= 3.
    std::optional<int> order;
    /// Known ranges of the j-robust number, keyed by j.
    std::map<int, Interval> robust;
    /// j -> size of a verified overlap set at that j.
    std::map<int, int> overlap;
    /// Every gamma_p-subset of V power dominates (verified).
    bool full_overlap = false;
};

/// Every bound that applies to the k-robust number under the given context.
inline BoundReport bounds(int k, const BoundContext& ctx) {
    if (k < 0) throw ParameterError("k", "must be non-negative");
    if (!ctx.gamma) throw PreconditionError("bounds: gamma_p is required");
    const int gamma = *ctx.gamma;
    BoundReport r;
    r.k = k;
    r.lower.push_back({gamma + k, "gamma_p+k"});
    r.upper.push_back({(k + 1) * gamma, "(k+1)*gamma_p"});
    for (int j = 1; j <= k; ++j) {
        auto it = ctx.robust.find(k - j);
        if (it != ctx.robust.end())
            r.lower.push_back({it->second.lo + j, "robust[" + std::to_string(k - j) + "]+" + std::to_string(j)});
    }
    if (k >= 1) {
        if (auto it = ctx.robust.find(k - 1); it != ctx.robust.end())
            r.upper.push_back({it->second.hi + gamma, "robust[" + std::to_string(k - 1) + "]+gamma_p"});
        for (const auto& [j, size] : ctx.overlap)
            if (size > j && j >= gamma)
                r.upper.push_back({sjbound_upper(size, j, gamma, k),
                                   "overlap[j=" + std::to_string(j) + ",size=" + std::to_string(size) + "]"});
        if (ctx.full_overlap && ctx.order) {
            int exact = full_overlap_formula(*ctx.order, gamma, k);
            r.lower.push_back({exact, "full-overlap"});
            r.upper.push_back({exact, "full-overlap"});
        }
    }
    if (ctx.order && *ctx.order >= 3) r.upper.push_back({(k + 1) * *ctx.order / 3, "(k+1)*n/3"});
    if (auto it = ctx.robust.find(k); it != ctx.robust.end()) {
        r.lower.push_back({it->second.lo, "known"});
        r.upper.push_back({it->second.hi, "known"});
    }
    r.best_lower = 0;
    for (const auto& e : r.lower) r.best_lower = std::max(r.best_lower, e.value);
    r.best_upper = r.upper.front().value;
    for (const auto& e : r.upper) r.best_upper = std::min(r.best_upper, e.value);
    if (r.best_lower > r.best_upper)
        throw std::logic_error("bounds: lower bound " + std::to_string(r.best_lower) + " exceeds upper bound " +
                               std::to_string(r.best_upper));
    return r;
}

/// Fills in gamma_p and the vertex count from g when absent.
inline BoundReport bounds(const Graph& g, int k, BoundContext ctx, const SearchControl& control = {}) {
    if (!ctx.gamma) ctx.gamma = gamma_p(g, control).value;
    if (!ctx.order) ctx.order = static_cast<int>(g.order());
    return bounds(k, ctx);
}

// ---------------------------------------------------------------------------
// Exact minimum search

struct RobustResult {
    int value = 0;
    PmuMultiset witness;
};

struct RobustSearchOptions {
    /// Restrict PMUs to degree >= 3 vertices (when the maximum degree is at least 3)
    /// and pin vertices with two terminal paths or a terminal cycle to k+1 PMUs.
    bool prune = true;
    /// Optional restriction of where PMUs may go (e.g. cut vertices). Empty means unrestricted.
    std::optional<VertexSet> allowed;
    BoundContext context;
    SearchControl control;
};

namespace detail {

struct Slot {
    Vertex v;
    bool pinned;  // multiplicity is 0 or k+1
};

class RobustLevelSearch {
public:
    RobustLevelSearch(const Graph& g, const std::vector<Slot>& slots, int k, int total, const SearchControl& control)
        : slots_(slots), k_(k), total_(total), pds_(g), ticker_(control) {
        cap_suffix_.assign(slots_.size() + 1, 0);
        for (std::size_t i = slots_.size(); i-- > 0;) cap_suffix_[i] = cap_suffix_[i + 1] + (k + 1);
    }

    /// Branch b encodes (slot index, multiplicity) in lexicographic order.
    static std::vector<std::pair<std::size_t, int>> branches(const std::vector<Slot>& slots, int k, int total) {
        std::vector<std::pair<std::size_t, int>> out;
        for (std::size_t i = 0; i < slots.size(); ++i)
            for (int m = std::min(k + 1, total); m >= 1; --m)
                if (!slots[i].pinned || m == k + 1) out.emplace_back(i, m);
        return out;
    }

    template <typename Abandon>
    std::optional<PmuMultiset> run_branch(std::size_t slot, int m, Abandon&& abandon) {
        current_.clear();
        current_.emplace_back(slots_[slot].v, m);
        abandoned_ = false;
        if (descend(slot + 1, total_ - m, abandon)) return witness();
        return std::nullopt;
    }

private:
    template <typename Abandon>
    bool descend(std::size_t i, int remaining, Abandon& abandon) {
        if (remaining == 0) return leaf();
        if (cap_suffix_[i] < remaining) return false;
        if (ticker_.expired()) throw DeadlineHit{};
        if (abandoned_ || abandon()) {
            abandoned_ = true;
            return false;
        }
        for (std::size_t s = i; s < slots_.size(); ++s) {
            if (cap_suffix_[s] < remaining) return false;
            int hi = std::min(k_ + 1, remaining);
            for (int m = hi; m >= 1; --m) {
                if (slots_[s].pinned && m != k_ + 1) continue;
                current_.emplace_back(slots_[s].v, m);
                bool hit = descend(s + 1, remaining - m, abandon);
                if (hit) return true;
                current_.pop_back();
            }
        }
        return false;
    }

    bool leaf() {
        VertexSet support;
        Entries entries = current_;
        for (const auto& [v, m] : current_) support.insert(v);
        if (!pds_(support)) return false;
        std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
        FatalRemovalSearch search(pds_, entries, support, k_);
        return !search.run().has_value();
    }

    PmuMultiset witness() const {
        PmuMultiset s;
        for (const auto& [v, m] : current_) s.add(v, m);
        return s;
    }

    const std::vector<Slot>& slots_;
    int k_;
    int total_;
    PdsOracle pds_;
    DeadlineTicker ticker_;
    std::vector<int> cap_suffix_;
    Entries current_;
    bool abandoned_ = false;
};

} // namespace detail

/// Minimum number of PMUs in a placement surviving any k PMU failures, with the
/// lexicographically first optimal placement found (over the searched candidates).
///
/// Totals are tried upward from the best lower bound. Multiplicities never exceed
/// k+1: PMUs beyond that on one vertex can never all fail.
inline RobustResult min_k_rpds(const Graph& g, int k, RobustSearchOptions opts = {}) {
    if (k < 0) throw ParameterError("k", "must be non-negative");
    require_connected(g, "min_k_rpds");
    if (!opts.context.gamma) opts.context.gamma = gamma_p(g, opts.control).value;
    auto report = bounds(g, k, opts.context, opts.control);

    std::vector<detail::Slot> slots;
    const bool pin = opts.prune && g.max_degree() >= 3;
    for (Vertex v : pmu_candidates(g, opts.prune)) {
        if (opts.allowed && !opts.allowed->contains(v)) continue;
        bool pinned = false;
        if (pin) {
            auto t = terminal_structures(g, v);
            pinned = t.paths >= 2 || t.cycles >= 1;
        }
        slots.push_back({v, pinned});
    }

    for (int total = std::max(report.best_lower, 1); total <= report.best_upper; ++total) {
        auto branches = detail::RobustLevelSearch::branches(slots, k, total);
        std::optional<PmuMultiset> hit;
        try {
            hit = detail::first_hit<PmuMultiset>(
                branches.size(), opts.control.jobs,
                [&] { return detail::RobustLevelSearch(g, slots, k, total, opts.control); },
                [&](detail::RobustLevelSearch& search, std::size_t b, auto abandon) {
                    return search.run_branch(branches[b].first, branches[b].second, abandon);
                });
        } catch (const detail::DeadlineHit&) {
            throw SearchTimeout("min_k_rpds: deadline reached", total);
        }
        if (hit) return {total, *hit};
    }
    throw std::logic_error("min_k_rpds: no placement found within the upper bound " +
                           std::to_string(report.best_upper));
}

struct FaultTolerantResult {
    int value = 0;
    VertexSet witness;
};

/// Smallest vertex set S (one PMU per vertex) such that S minus any F with |F| <= k
/// still power dominates. Only |F| = k is tested: dropping fewer vertices leaves a
/// superset of some size-k outcome.
inline FaultTolerantResult min_fault_tolerant(const Graph& g, int k, const SearchControl& control = {}) {
    if (k < 0) throw ParameterError("k", "must be non-negative");
    require_connected(g, "min_fault_tolerant");
    if (static_cast<std::size_t>(k) >= g.order())
        throw InfeasibleError("min_fault_tolerant: k must be smaller than the vertex count");
    const int gamma = gamma_p(g, control).value;
    const auto pool = g.vertices().to_vector();

    auto survives = [&](PdsOracle& pds, const VertexSet& s) {
        if (!pds(s)) return false;
        return !detail::for_each_combination(s.to_vector(), static_cast<std::size_t>(k),
                                             [&](const VertexSet& f) { return !pds(s - f); });
    };

    for (std::size_t size = static_cast<std::size_t>(gamma + k); size <= pool.size(); ++size) {
        std::optional<VertexSet> hit;
        try {
            hit = detail::first_hit<VertexSet>(
                pool.size(), control.jobs, [&] { return PdsOracle(g); },
                [&](PdsOracle& pds, std::size_t branch, auto abandon) -> std::optional<VertexSet> {
                    if (pool.size() - branch < size) return std::nullopt;
                    std::vector<Vertex> rest(pool.begin() + static_cast<std::ptrdiff_t>(branch) + 1, pool.end());
                    std::optional<VertexSet> found;
                    detail::DeadlineTicker ticker(control);
                    detail::for_each_combination(rest, size - 1, [&](VertexSet s) {
                        if (ticker.expired()) throw detail::DeadlineHit{};
                        if (abandon()) return true;
                        s.insert(pool[branch]);
                        if (survives(pds, s)) {
                            found = s;
                            return true;
                        }
                        return false;
                    });
                    return found;
                });
        } catch (const detail::DeadlineHit&) {
            throw SearchTimeout("min_fault_tolerant: deadline reached", static_cast<int>(size));
        }
        if (hit) return {static_cast<int>(size), *hit};
    }
    throw InfeasibleError("min_fault_tolerant: no " + std::to_string(k) + "-fault-tolerant set exists");
}

} // namespace robustpd

#endif
