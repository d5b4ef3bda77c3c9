#ifndef ROBUSTPD_OVERLAP_HPP
#define ROBUSTPD_OVERLAP_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "robustpd/multiset.hpp"
#include "robustpd/pd.hpp"

namespace robustpd {

/// A vertex set all of whose j-subsets power dominate.
struct OverlapCertificate {
    int j = 0;
    VertexSet set;
    int size = 0;
    bool verified = false;
    /// True only when an exhaustive search showed no larger set exists.
    bool maximal = false;
};

inline bool verify_overlap_set(const Graph& g, const VertexSet& b, int j) {
    if (j < 1) throw PreconditionError("verify_overlap_set: j must be at least 1");
    if (b.size() < static_cast<std::size_t>(j)) throw PreconditionError("verify_overlap_set: set smaller than j");
    PdsOracle pds(g);
    return !detail::for_each_combination(b.to_vector(), static_cast<std::size_t>(j),
                                         [&](const VertexSet& a) { return !pds(a); });
}

/// Checks a proposed overlap set without any maximality claim.
inline OverlapCertificate certify_overlap_set(const Graph& g, const VertexSet& b, int j) {
    return {j, b, static_cast<int>(b.size()), verify_overlap_set(g, b, j), false};
}

namespace detail {

class OverlapSearch {
public:
    OverlapSearch(const Graph& g, int j, const SearchControl& control) : pds_(g), j_(j), ticker_(control) {}

    /// Largest size reachable from `order`, with one witness.
    std::vector<Vertex> maximum(const std::vector<Vertex>& order) {
        std::vector<Vertex> b;
        best_size_ = 0;
        best_.clear();
        target_ = 0;
        grow(b, initial(order));
        return best_;
    }

    /// First set of exactly `size` vertices in depth-first order over `order`.
    std::optional<std::vector<Vertex>> first_of_size(const std::vector<Vertex>& order, std::size_t size) {
        std::vector<Vertex> b;
        best_.clear();
        best_size_ = 0;
        target_ = size;
        grow(b, initial(order));
        if (best_.size() == size) return best_;
        return std::nullopt;
    }

private:
    std::vector<Vertex> initial(const std::vector<Vertex>& order) {
        if (j_ != 1) return order;
        std::vector<Vertex> out;
        for (Vertex v : order)
            if (pds_(VertexSet{v})) out.push_back(v);
        return out;
    }

    // every j-subset of b + {w} containing both b.back() and w power dominates
    bool compatible(const std::vector<Vertex>& b, Vertex w) {
        if (j_ < 2) return true;
        auto need = static_cast<std::size_t>(j_ - 2);
        if (need > b.size() - 1) return true;
        std::vector<Vertex> rest(b.begin(), b.end() - 1);
        return !for_each_combination(rest, need, [&](VertexSet a) {
            a.insert(b.back());
            a.insert(w);
            return !pds_(a);
        });
    }

    // returns true when the search should stop
    bool grow(std::vector<Vertex>& b, const std::vector<Vertex>& cand) {
        if (ticker_.expired()) throw DeadlineHit{};
        if (target_ == 0) {
            if (b.size() > best_size_) {
                best_size_ = b.size();
                best_ = b;
            }
        } else if (b.size() == target_) {
            best_ = b;
            return true;
        }
        for (std::size_t i = 0; i < cand.size(); ++i) {
            std::size_t reach = b.size() + (cand.size() - i);
            if (target_ == 0 ? reach <= best_size_ : reach < target_) return false;
            b.push_back(cand[i]);
            std::vector<Vertex> next;
            for (std::size_t t = i + 1; t < cand.size(); ++t)
                if (compatible(b, cand[t])) next.push_back(cand[t]);
            bool stop = grow(b, next);
            b.pop_back();
            if (stop) return true;
        }
        return false;
    }

    PdsOracle pds_;
    int j_;
    DeadlineTicker ticker_;
    std::size_t best_size_ = 0;
    std::size_t target_ = 0;
    std::vector<Vertex> best_;
};

} // namespace detail

/// Largest vertex set whose j-subsets all power dominate, returning the
/// lexicographically first such set of maximum size.
///
/// Undefined (throws) when j is below the power domination number.
inline OverlapCertificate bigpds_j(const Graph& g, int j, const SearchControl& control = {},
                                   std::optional<int> known_gamma = std::nullopt) {
    int gamma = known_gamma ? *known_gamma : gamma_p(g, control).value;
    if (j < gamma)
        throw UndefinedParameterError("bigpds_j: j = " + std::to_string(j) + " is below gamma_p = " +
                                      std::to_string(gamma) + ", no j-subset can power dominate");
    if (static_cast<std::size_t>(j) > g.order()) throw PreconditionError("bigpds_j: j exceeds the vertex count");

    std::vector<Vertex> natural = g.vertices().to_vector();
    std::vector<Vertex> by_degree = natural;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    detail::OverlapSearch search(g, j, control);
    std::vector<Vertex> best;
    try {
        auto size = search.maximum(by_degree).size();
        best = *search.first_of_size(natural, size);
    } catch (const detail::DeadlineHit&) {
        throw SearchTimeout("bigpds_j: deadline reached", j);
    }
    OverlapCertificate cert{j, VertexSet::from(best), static_cast<int>(best.size()), true, true};

    // a full overlap set at j = gamma_p forces minimum degree >= 3 on larger graphs
    if (j == gamma && best.size() == g.order() && g.order() >= 6 && gamma >= 2 && g.min_degree() < 3)
        throw std::logic_error("bigpds_j: full overlap certified on a graph with a vertex of degree < 3");
    return cert;
}

/// Upper bound on the k-robust number from an overlap set of size n_b whose
/// j-subsets all power dominate. With k+1 = q(n_b-j+1) + r:
/// n_b*q when r = 0, otherwise n_b*q + r + j - 1.
inline int sjbound_upper(int n_b, int j, int gamma, int k) {
    if (!(n_b > j && j >= gamma && gamma >= 1))
        throw PreconditionError("sjbound_upper: requires n_b > j >= gamma >= 1");
    if (k < 1) throw PreconditionError("sjbound_upper: requires k >= 1");
    int width = n_b - j + 1;
    int q = (k + 1) / width;
    int r = (k + 1) % width;
    return r == 0 ? n_b * q : n_b * q + r + (j - 1);
}

/// The placement behind sjbound_upper: q+1 PMUs on the first r+j-1 vertices of
/// `b` and q on the rest (q on all of them when r = 0).
inline PmuMultiset sjbound_witness(const std::vector<Vertex>& b, int j, int k) {
    int n_b = static_cast<int>(b.size());
    if (!(n_b > j && j >= 1) || k < 1) throw PreconditionError("sjbound_witness: requires |b| > j >= 1, k >= 1");
    int width = n_b - j + 1;
    int q = (k + 1) / width;
    int r = (k + 1) % width;
    PmuMultiset s;
    for (int i = 0; i < n_b; ++i) {
        int m = (r > 0 && i < r + j - 1) ? q + 1 : q;
        s.add(b[static_cast<std::size_t>(i)], m);
    }
    return s;
}

/// Closed form of the robust number for a graph whose every gamma-subset power dominates.
inline int full_overlap_formula(int n, int gamma, int k) {
    if (k <= 0) throw PreconditionError("full_overlap_formula: requires k > 0");
    if (!(n > gamma && gamma >= 1)) throw PreconditionError("full_overlap_formula: requires n > gamma >= 1");
    int width = n - gamma + 1;
    int q = (k + 1) / width;
    int r = (k + 1) % width;
    return r == 0 ? n * q : n * q + r + (gamma - 1);
}

/// Exact robust number, only for a certificate showing every gamma_p-subset of V power dominates.
inline int exact_when_full_overlap(const OverlapCertificate& cert, int n, int gamma, int k) {
    if (!cert.verified || cert.j != gamma || cert.size != n)
        throw PreconditionError("exact_when_full_overlap: needs a verified overlap certificate covering all vertices at j = gamma_p");
    return full_overlap_formula(n, gamma, k);
}

/// True iff gamma > n_b / (n_b - j + 1), i.e. the overlap bound eventually beats (k+1)*gamma.
inline bool bound_improves(int n_b, int j, int gamma) {
    if (!(j > gamma && gamma >= 2 && n_b > j)) throw PreconditionError("bound_improves: requires n_b > j > gamma >= 2");
    return gamma * (n_b - j + 1) > n_b;
}

} // namespace robustpd

#endif
