#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcds/vertex_set.hpp"

namespace mcds {

/// Raised when an operation's precondition on its graph arguments fails.
class GraphError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Closed range [left, right] of 1-based W indices.
struct Interval {
    int left = 1;
    int right = 1;

    constexpr bool contains(int j) const { return left <= j && j <= right; }
    constexpr bool is_subset_of(const Interval& o) const { return o.left <= left && right <= o.right; }
    constexpr int length() const { return right - left + 1; }
    constexpr IndexMask mask() const { return index_range(left, right); }

    friend constexpr bool operator==(Interval, Interval) = default;
};

/// Bipartite graph G = (U, W, E) stored as neighbor bit masks on both sides.
/// Not necessarily convex; the brute-force oracle works at this level.
class BipartiteGraph {
   public:
    BipartiteGraph() = default;

    /// `u_adjacency[i-1]` lists the 1-based W neighbors of u_i.
    BipartiteGraph(int n_u, int n_w, const std::vector<std::vector<int>>& u_adjacency);

    int n_u() const { return n_u_; }
    int n_w() const { return n_w_; }
    int n() const { return n_u_ + n_w_; }
    int m() const;

    bool valid(VertexRef v) const;

    /// W neighbors of u_i as an index mask.
    IndexMask u_neighbors(int i) const { return u_adj_[i - 1]; }
    /// U neighbors of w_j as an index mask.
    IndexMask w_neighbors(int j) const { return w_adj_[j - 1]; }

    VertexSet all_vertices() const { return {index_range(1, n_u_), index_range(1, n_w_)}; }

    /// Open neighborhood N(v); throws GraphError for out-of-range v.
    VertexSet neighbors(VertexRef v) const;

    /// N[D]: every vertex that is in D or adjacent to a member of D.
    VertexSet dominated_by(const VertexSet& d) const;

    /// Adjacency lists (1-based W indices) per U vertex.
    std::vector<std::vector<int>> u_adjacency() const;

   protected:
    int n_u_ = 0;
    int n_w_ = 0;
    std::vector<IndexMask> u_adj_;
    std::vector<IndexMask> w_adj_;

    void init_masks(int n_u, int n_w, std::vector<IndexMask> u_adj);
};

/// Convex bipartite graph: every N(u_i) is the interval I_i of the W order.
class ConvexBipartiteGraph : public BipartiteGraph {
   public:
    ConvexBipartiteGraph() = default;

    /// Throws GraphError if a side is empty or larger than kMaxSide, the
    /// interval count differs from n_u, or some interval is not within [1, n_w].
    ConvexBipartiteGraph(int n_u, int n_w, std::vector<Interval> intervals);

    const std::vector<Interval>& intervals() const { return intervals_; }
    const Interval& interval(int i) const { return intervals_[i - 1]; }

    friend bool operator==(const ConvexBipartiteGraph& a, const ConvexBipartiteGraph& b) {
        return a.n_u_ == b.n_u_ && a.n_w_ == b.n_w_ && a.intervals_ == b.intervals_;
    }

   private:
    std::vector<Interval> intervals_;
};

struct IntervalIssue {
    int u_index = 0;
    std::string message;
};

struct ValidationReport {
    bool connected = false;
    bool is_star = false;
    std::optional<VertexRef> star_center;
    VertexSet isolated_vertices;
    std::vector<IntervalIssue> interval_errors;

    bool well_formed() const { return interval_errors.empty(); }
};

/// Problems with a raw interval list; empty when it describes a valid graph.
std::vector<IntervalIssue> check_intervals(int n_u, int n_w, std::span<const Interval> intervals);

ValidationReport validate(const BipartiteGraph& g);
/// Validates raw input without requiring it to form a graph first.
ValidationReport validate(int n_u, int n_w, std::span<const Interval> intervals);

// Predicates. All accept any bipartite graph; D must be a subset of V(g).

bool is_connected_induced(const BipartiteGraph& g, const VertexSet& d);
bool is_connected(const BipartiteGraph& g);
bool is_dominating(const BipartiteGraph& g, const VertexSet& d);
bool is_cds(const BipartiteGraph& g, const VertexSet& d);

/// Vertices of D with a private neighbor: some x ∈ N[v] not dominated by D \ {v}.
bool has_private_neighbor(const BipartiteGraph& g, const VertexSet& d, VertexRef v);

/// Articulation points of G[D].
VertexSet cut_vertices_induced(const BipartiteGraph& g, const VertexSet& d);

/// Minimal CDS via the characterization: D is a CDS and every member has a
/// private neighbor or is a cut vertex of G[D].
bool is_minimal_cds(const BipartiteGraph& g, const VertexSet& d);

/// Minimal CDS straight from the definition: D is a CDS and no D \ {v} is.
bool is_minimal_cds_definition(const BipartiteGraph& g, const VertexSet& d);

/// Articulation points of g; throws GraphError if g is disconnected.
VertexSet cut_vertices(const BipartiteGraph& g);

/// True iff, listing W in `ordering` (ordering[p] = original 1-based index of
/// the W vertex at position p+1), every U neighborhood is consecutive.
/// Throws GraphError if `ordering` is not a permutation of 1..n_w.
bool check_convex_ordering(int n_w, const std::vector<std::vector<int>>& u_adjacency,
                           std::span<const int> ordering);

}  // namespace mcds
