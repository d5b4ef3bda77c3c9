#ifndef ROBUSTPD_MULTISET_HPP
#define ROBUSTPD_MULTISET_HPP

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "robustpd/error.hpp"
#include "robustpd/vertex_set.hpp"

namespace robustpd {

/// PMU placement: vertex -> number of PMUs on it. Zero multiplicities are never stored.
class PmuMultiset {
public:
    PmuMultiset() = default;
    PmuMultiset(std::initializer_list<std::pair<Vertex, int>> entries) {
        for (auto [v, m] : entries) add(v, m);
    }
    static PmuMultiset uniform(const VertexSet& support, int multiplicity) {
        PmuMultiset s;
        support.for_each([&](Vertex v) { s.add(v, multiplicity); });
        return s;
    }

    void add(Vertex v, int m = 1) {
        if (m < 0) throw ParameterError("multiplicity", "must be non-negative");
        if (m == 0) return;
        counts_[v] += m;
        total_ += m;
    }
    void remove(Vertex v, int m = 1) {
        auto it = counts_.find(v);
        if (it == counts_.end() || it->second < m)
            throw PreconditionError("cannot remove " + std::to_string(m) + " PMUs from vertex " + std::to_string(v));
        it->second -= m;
        total_ -= m;
        if (it->second == 0) counts_.erase(it);
    }

    [[nodiscard]] int multiplicity(Vertex v) const {
        auto it = counts_.find(v);
        return it == counts_.end() ? 0 : it->second;
    }
    [[nodiscard]] int total() const { return total_; }
    [[nodiscard]] bool empty() const { return total_ == 0; }
    [[nodiscard]] const std::map<Vertex, int>& counts() const { return counts_; }
    [[nodiscard]] VertexSet support() const {
        VertexSet s;
        for (const auto& [v, m] : counts_) s.insert(v);
        return s;
    }
    /// Vertices repeated by multiplicity, ascending.
    [[nodiscard]] std::vector<Vertex> expanded() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(total_));
        for (const auto& [v, m] : counts_) out.insert(out.end(), static_cast<std::size_t>(m), v);
        return out;
    }
    [[nodiscard]] bool contains(const PmuMultiset& sub) const {
        for (const auto& [v, m] : sub.counts_)
            if (multiplicity(v) < m) return false;
        return true;
    }

    friend bool operator==(const PmuMultiset&, const PmuMultiset&) = default;

private:
    std::map<Vertex, int> counts_;
    int total_ = 0;
};

/// Lexicographic order on expanded vertex sequences: {0:2} < {0:1,1:1} < {1:2}.
inline std::strong_ordering lex_compare(const PmuMultiset& a, const PmuMultiset& b) {
    auto ea = a.expanded();
    auto eb = b.expanded();
    return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

inline std::string to_string(const PmuMultiset& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& [v, m] : s.counts()) {
        if (!first) out += ",";
        out += std::to_string(v) + ":" + std::to_string(m);
        first = false;
    }
    return out + "}";
}

} // namespace robustpd

#endif
