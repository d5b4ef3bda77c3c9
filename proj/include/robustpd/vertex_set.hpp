#ifndef ROBUSTPD_VERTEX_SET_HPP
#define ROBUSTPD_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace robustpd {

using Vertex = std::uint32_t;

inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kSetWords = 4;
/// Largest vertex count a Graph can hold.
inline constexpr std::size_t kMaxVertices = kWordBits * kSetWords;

/// Fixed-capacity bit-set over vertex ids. Iteration is always in ascending order.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }
    template <typename Range>
    static VertexSet from(const Range& vs) {
        VertexSet s;
        for (auto v : vs) s.insert(static_cast<Vertex>(v));
        return s;
    }
    /// {0, 1, ..., n-1}
    static VertexSet prefix(std::size_t n) {
        VertexSet s;
        for (std::size_t w = 0; w < kSetWords && n > 0; ++w) {
            if (n >= kWordBits) {
                s.words_[w] = ~std::uint64_t{0};
                n -= kWordBits;
            } else {
                s.words_[w] = (std::uint64_t{1} << n) - 1;
                n = 0;
            }
        }
        return s;
    }

    void insert(Vertex v) { words_[v / kWordBits] |= bit(v); }
    void erase(Vertex v) { words_[v / kWordBits] &= ~bit(v); }
    [[nodiscard]] bool contains(Vertex v) const { return (words_[v / kWordBits] & bit(v)) != 0; }

    [[nodiscard]] std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    [[nodiscard]] bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }
    /// Smallest member; the set must be non-empty.
    [[nodiscard]] Vertex first() const {
        for (std::size_t w = 0; w < kSetWords; ++w)
            if (words_[w] != 0)
                return static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w])));
        return static_cast<Vertex>(kMaxVertices);
    }
    [[nodiscard]] bool is_subset_of(const VertexSet& o) const {
        for (std::size_t w = 0; w < kSetWords; ++w)
            if ((words_[w] & ~o.words_[w]) != 0) return false;
        return true;
    }
    [[nodiscard]] bool intersects(const VertexSet& o) const {
        for (std::size_t w = 0; w < kSetWords; ++w)
            if ((words_[w] & o.words_[w]) != 0) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t w = 0; w < kSetWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t w = 0; w < kSetWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t w = 0; w < kSetWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < kSetWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                auto tz = static_cast<std::size_t>(std::countr_zero(bits));
                f(static_cast<Vertex>(w * kWordBits + tz));
                bits &= bits - 1;
            }
        }
    }
    [[nodiscard]] std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }
    [[nodiscard]] std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v % kWordBits); }
    std::array<std::uint64_t, kSetWords> words_{};
};

/// Lexicographic order on the ascending member lists ({0,5} < {1,2} < {1,2,3}).
inline std::strong_ordering lex_compare(const VertexSet& a, const VertexSet& b) {
    auto va = a.to_vector();
    auto vb = b.to_vector();
    return std::lexicographical_compare_three_way(va.begin(), va.end(), vb.begin(), vb.end());
}

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

inline std::string to_string(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Vertex v) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

} // namespace robustpd

#endif
