#ifndef ROBUSTPD_BIPARTITE_HPP
#define ROBUSTPD_BIPARTITE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "robustpd/multiset.hpp"

// Complete bipartite K_{a,b} with 3 <= a <= b. Side A is vertices 0..a-1,
// side B is a..a+b-1 (the numbering used by build(complete_bipartite(a, b))).

namespace robustpd {

struct BipartiteProfile {
    int a = 0;
    int b = 0;
    /// PMUs on side A / side B.
    int x = 0;
    int y = 0;
    /// Per-vertex multiplicities, ascending, zero padded to the side length.
    std::vector<int> sorted_a;
    std::vector<int> sorted_b;
    /// Uncover numbers: sum of the two smallest multiplicities on the side, minus one.
    int u_a = -1;
    int u_b = -1;
    friend bool operator==(const BipartiteProfile&, const BipartiteProfile&) = default;
};

namespace detail {

inline void require_sides(int a, int b) {
    if (!(3 <= a && a <= b)) throw PreconditionError("complete bipartite: requires 3 <= a <= b");
}

} // namespace detail

/// Builds the profile from per-vertex multiplicities of each side (any order).
/// When a == b the side with fewer PMUs is reported as side A.
inline BipartiteProfile profile_from_sides(int a, int b, std::vector<int> side_a, std::vector<int> side_b) {
    detail::require_sides(a, b);
    if (side_a.size() > static_cast<std::size_t>(a) || side_b.size() > static_cast<std::size_t>(b))
        throw PreconditionError("profile: more multiplicities than side vertices");
    side_a.resize(static_cast<std::size_t>(a), 0);
    side_b.resize(static_cast<std::size_t>(b), 0);
    for (int m : side_a)
        if (m < 0) throw PreconditionError("profile: negative multiplicity");
    for (int m : side_b)
        if (m < 0) throw PreconditionError("profile: negative multiplicity");
    std::sort(side_a.begin(), side_a.end());
    std::sort(side_b.begin(), side_b.end());
    BipartiteProfile p;
    p.a = a;
    p.b = b;
    p.sorted_a = std::move(side_a);
    p.sorted_b = std::move(side_b);
    for (int m : p.sorted_a) p.x += m;
    for (int m : p.sorted_b) p.y += m;
    if (a == b && p.x > p.y) {
        std::swap(p.sorted_a, p.sorted_b);
        std::swap(p.x, p.y);
    }
    p.u_a = p.sorted_a[0] + p.sorted_a[1] - 1;
    p.u_b = p.sorted_b[0] + p.sorted_b[1] - 1;
    return p;
}

inline BipartiteProfile profile(int a, int b, const PmuMultiset& s) {
    detail::require_sides(a, b);
    std::vector<int> side_a(static_cast<std::size_t>(a), 0), side_b(static_cast<std::size_t>(b), 0);
    for (const auto& [v, m] : s.counts()) {
        if (v >= static_cast<Vertex>(a + b)) throw PreconditionError("profile: PMU outside K_{a,b}");
        if (v < static_cast<Vertex>(a))
            side_a[v] = m;
        else
            side_b[v - static_cast<Vertex>(a)] = m;
    }
    return profile_from_sides(a, b, std::move(side_a), std::move(side_b));
}

/// k-robustness on K_{a,b} from side totals and uncover numbers alone.
inline bool is_k_rpds_bipartite(const BipartiteProfile& p, int k) {
    detail::require_sides(p.a, p.b);
    return p.x + p.u_b >= k && p.y + p.u_a >= k;
}

/// `total` PMUs spread over `side` vertices as q or q+1 each, the extra ones on the lowest indices.
inline std::vector<int> even_split(int side, int total) {
    if (side < 1 || total < 0) throw PreconditionError("even_split: requires side >= 1, total >= 0");
    std::vector<int> out(static_cast<std::size_t>(side), total / side);
    for (int i = 0; i < total % side; ++i) ++out[static_cast<std::size_t>(i)];
    return out;
}

/// Evenly distributed placement with x PMUs on side A and y on side B.
inline PmuMultiset evenly_distribute(int a, int b, int x, int y) {
    if (a < 1 || b < 1) throw PreconditionError("evenly_distribute: side sizes must be positive");
    if (x < 0 || y < 0) throw PreconditionError("evenly_distribute: totals must be non-negative");
    PmuMultiset s;
    auto side_a = even_split(a, x);
    auto side_b = even_split(b, y);
    for (int i = 0; i < a; ++i) s.add(static_cast<Vertex>(i), side_a[static_cast<std::size_t>(i)]);
    for (int i = 0; i < b; ++i) s.add(static_cast<Vertex>(a + i), side_b[static_cast<std::size_t>(i)]);
    return s;
}

struct JumpParams {
    int q_a = 0;
    int r_a = 0;
    int q_b = 0;
    int r_b = 0;
    friend bool operator==(const JumpParams&, const JumpParams&) = default;
};

/// Decomposition p_k = (q_a*a + r_a) + (q_b*b + r_b) with r_a <= a-3, r_b <= b-3,
/// q_a*a + r_a + 2q_b - 1 = k and q_b*b + r_b + 2q_a - 1 = k, if one exists.
/// Side-A totals are tried in increasing order.
inline std::optional<JumpParams> jump_condition(int a, int b, int k, int p_k) {
    detail::require_sides(a, b);
    if (k < 0 || p_k < 2) throw PreconditionError("jump_condition: requires k >= 0, p_k >= 2");
    for (int x = 0; x <= p_k; ++x) {
        int y = p_k - x;
        JumpParams j{x / a, x % a, y / b, y % b};
        if (j.r_a > a - 3 || j.r_b > b - 3) continue;
        if (x + 2 * j.q_b - 1 == k && y + 2 * j.q_a - 1 == k) return j;
    }
    return std::nullopt;
}

/// Every side split of p_k satisfying the jump condition (used to test uniqueness).
inline std::vector<JumpParams> all_jump_witnesses(int a, int b, int k, int p_k) {
    detail::require_sides(a, b);
    std::vector<JumpParams> out;
    for (int x = 0; x <= p_k; ++x) {
        int y = p_k - x;
        JumpParams j{x / a, x % a, y / b, y % b};
        if (j.r_a <= a - 3 && j.r_b <= b - 3 && x + 2 * j.q_b - 1 == k && y + 2 * j.q_a - 1 == k) out.push_back(j);
    }
    return out;
}

struct PkSequence {
    int a = 0;
    int b = 0;
    std::vector<int> values;
    /// jump_flags[k] is true when values[k+1] = values[k] + 2.
    std::vector<bool> jump_flags;
};

/// Robust numbers p_0..p_K of K_{a,b}: p_0 = 2, and each step adds 2 exactly
/// when (k, p_k) satisfies the jump condition.
inline PkSequence pk_sequence(int a, int b, int K) {
    detail::require_sides(a, b);
    if (K < 0) throw PreconditionError("pk_sequence: K must be non-negative");
    PkSequence seq{a, b, {2}, {}};
    for (int k = 0; k < K; ++k) {
        bool jump = jump_condition(a, b, k, seq.values.back()).has_value();
        seq.jump_flags.push_back(jump);
        seq.values.push_back(seq.values.back() + (jump ? 2 : 1));
    }
    return seq;
}

/// Closed form for K_{n,n}. Within each period of n+2 values of k, the first
/// n-3 steps (after the period start) add 2 and the rest add 1.
inline int gpk_knn(int n, int k) {
    if (n < 3 || k < 0) throw PreconditionError("gpk_knn: requires n >= 3, k >= 0");
    int period = n + 2;
    int q = k / period;
    int r = k % period;
    return k + 2 + (n - 2) * q + std::min(r, n - 3);
}

/// Closed form for K_{3,4}.
inline int gpk_k34(int k) {
    if (k < 0) throw PreconditionError("gpk_k34: requires k >= 0");
    int q = k / 8;
    return (k % 8 <= 2) ? k + 2 + 2 * q : k + 3 + 2 * q;
}

/// Closed form for the complete multipartite graph with m parts of size 3:
/// every pair of its 3m vertices power dominates.
inline int gpk_k333m(int m, int k) {
    if (m < 2 || k < 0) throw PreconditionError("gpk_k333m: requires m >= 2, k >= 0");
    if (k == 0) return 2;
    int n = 3 * m;
    int width = n - 1;
    int q = (k + 1) / width;
    int r = (k + 1) % width;
    return r == 0 ? n * q : n * q + r + 1;
}

/// Minimum robust placement on K_{a,b} (3 <= a <= b) realised as the evenly
/// distributed multiset of the given size with the fewest PMUs on side A.
inline std::optional<PmuMultiset> bipartite_witness(int a, int b, int k, int size) {
    detail::require_sides(a, b);
    for (int x = 0; x <= size; ++x) {
        auto s = evenly_distribute(a, b, x, size - x);
        if (is_k_rpds_bipartite(profile(a, b, s), k)) return s;
    }
    return std::nullopt;
}

} // namespace robustpd

#endif
