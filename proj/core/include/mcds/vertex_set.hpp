#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mcds {

/// Maximum number of vertices per side. Each side of a VertexSet is one
/// 64-bit word.
inline constexpr int kMaxSide = 64;

enum class Side : std::uint8_t { U, W };

/// A vertex of a bipartite graph, 1-based within its side.
struct VertexRef {
    Side side = Side::U;
    int index = 1;

    friend constexpr bool operator==(VertexRef, VertexRef) = default;
    /// Canonical order: U ascending, then W ascending.
    friend constexpr std::strong_ordering operator<=>(VertexRef a, VertexRef b) {
        if (a.side != b.side) return a.side == Side::U ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.index <=> b.index;
    }
};

constexpr VertexRef u_vertex(int i) { return {Side::U, i}; }
constexpr VertexRef w_vertex(int j) { return {Side::W, j}; }

/// "u3" / "w7".
std::string label(VertexRef v);

// Index masks: bit (i-1) stands for 1-based index i.
using IndexMask = std::uint64_t;

constexpr IndexMask index_bit(int i) { return IndexMask{1} << (i - 1); }

/// Mask of indices lo..hi inclusive (1-based); empty when lo > hi.
constexpr IndexMask index_range(int lo, int hi) {
    if (lo > hi) return 0;
    const int len = hi - lo + 1;
    const IndexMask ones = len >= 64 ? ~IndexMask{0} : (IndexMask{1} << len) - 1;
    return ones << (lo - 1);
}

constexpr int popcount(IndexMask m) { return std::popcount(m); }

/// Smallest 1-based index in a nonempty mask.
constexpr int lowest_index(IndexMask m) { return std::countr_zero(m) + 1; }

template <typename Fn>
constexpr void for_each_index(IndexMask m, Fn&& fn) {
    while (m != 0) {
        fn(lowest_index(m));
        m &= m - 1;
    }
}

/// Subset of V = U ∪ W, one bit field per side.
class VertexSet {
   public:
    constexpr VertexSet() = default;
    constexpr VertexSet(IndexMask u, IndexMask w) : u_(u), w_(w) {}

    static VertexSet of(std::initializer_list<VertexRef> vs) {
        VertexSet s;
        for (auto v : vs) s.insert(v);
        return s;
    }

    constexpr IndexMask u_bits() const { return u_; }
    constexpr IndexMask w_bits() const { return w_; }

    constexpr bool contains(VertexRef v) const {
        return ((v.side == Side::U ? u_ : w_) & index_bit(v.index)) != 0;
    }
    constexpr void insert(VertexRef v) { (v.side == Side::U ? u_ : w_) |= index_bit(v.index); }
    constexpr void erase(VertexRef v) { (v.side == Side::U ? u_ : w_) &= ~index_bit(v.index); }

    constexpr VertexSet with(VertexRef v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }
    constexpr VertexSet without(VertexRef v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    constexpr int size() const { return popcount(u_) + popcount(w_); }
    constexpr bool empty() const { return (u_ | w_) == 0; }

    constexpr bool is_subset_of(const VertexSet& o) const {
        return (u_ & ~o.u_) == 0 && (w_ & ~o.w_) == 0;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return {a.u_ | b.u_, a.w_ | b.w_}; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return {a.u_ & b.u_, a.w_ & b.w_}; }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return {a.u_ & ~b.u_, a.w_ & ~b.w_}; }
    constexpr VertexSet& operator|=(VertexSet o) { return *this = *this | o; }
    constexpr VertexSet& operator&=(VertexSet o) { return *this = *this & o; }
    constexpr VertexSet& operator-=(VertexSet o) { return *this = *this - o; }

    friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Lexicographic comparison of the canonical member sequences.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

    /// Members in canonical order.
    std::vector<VertexRef> members() const;

    template <typename Fn>
    constexpr void for_each(Fn&& fn) const {
        for_each_index(u_, [&](int i) { fn(u_vertex(i)); });
        for_each_index(w_, [&](int j) { fn(w_vertex(j)); });
    }

    /// Space-separated labels in canonical order, e.g. "u1 w2".
    std::string to_string() const;

   private:
    IndexMask u_ = 0;
    IndexMask w_ = 0;
};

}  // namespace mcds
