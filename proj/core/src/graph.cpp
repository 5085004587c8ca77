#include "mcds/graph.hpp"

#include <algorithm>
#include <numeric>

namespace mcds {

namespace {

void check_side_sizes(int n_u, int n_w) {
    if (n_u < 1 || n_w < 1) throw GraphError("both sides of the bipartition must be nonempty");
    if (n_u > kMaxSide || n_w > kMaxSide)
        throw GraphError("at most " + std::to_string(kMaxSide) + " vertices per side are supported");
}

// Vertices of `d` reachable from `start` inside G[d].
VertexSet reach(const BipartiteGraph& g, const VertexSet& d, VertexSet start) {
    VertexSet reached = start & d;
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        IndexMask next_w = 0;
        IndexMask next_u = 0;
        for_each_index(frontier.u_bits(), [&](int i) { next_w |= g.u_neighbors(i); });
        for_each_index(frontier.w_bits(), [&](int j) { next_u |= g.w_neighbors(j); });
        frontier = VertexSet(next_u, next_w) & d;
        frontier -= reached;
        reached |= frontier;
    }
    return reached;
}

VertexSet first_member(const VertexSet& d) {
    if (d.u_bits() != 0) return {d.u_bits() & (~d.u_bits() + 1), 0};
    return {0, d.w_bits() & (~d.w_bits() + 1)};
}

int component_count(const BipartiteGraph& g, VertexSet d) {
    int count = 0;
    while (!d.empty()) {
        d -= reach(g, d, first_member(d));
        ++count;
    }
    return count;
}

}  // namespace

BipartiteGraph::BipartiteGraph(int n_u, int n_w, const std::vector<std::vector<int>>& u_adjacency) {
    check_side_sizes(n_u, n_w);
    if (static_cast<int>(u_adjacency.size()) != n_u) throw GraphError("adjacency list count must equal |U|");
    std::vector<IndexMask> masks(static_cast<std::size_t>(n_u), 0);
    for (int i = 1; i <= n_u; ++i) {
        for (int j : u_adjacency[i - 1]) {
            if (j < 1 || j > n_w)
                throw GraphError("u" + std::to_string(i) + " lists W index " + std::to_string(j) +
                                 " outside 1.." + std::to_string(n_w));
            masks[i - 1] |= index_bit(j);
        }
    }
    init_masks(n_u, n_w, std::move(masks));
}

void BipartiteGraph::init_masks(int n_u, int n_w, std::vector<IndexMask> u_adj) {
    n_u_ = n_u;
    n_w_ = n_w;
    u_adj_ = std::move(u_adj);
    w_adj_.assign(static_cast<std::size_t>(n_w), 0);
    for (int i = 1; i <= n_u; ++i)
        for_each_index(u_adj_[i - 1], [&](int j) { w_adj_[j - 1] |= index_bit(i); });
}

int BipartiteGraph::m() const {
    return std::accumulate(u_adj_.begin(), u_adj_.end(), 0,
                           [](int acc, IndexMask mask) { return acc + popcount(mask); });
}

bool BipartiteGraph::valid(VertexRef v) const {
    return v.index >= 1 && v.index <= (v.side == Side::U ? n_u_ : n_w_);
}

VertexSet BipartiteGraph::neighbors(VertexRef v) const {
    if (!valid(v)) throw GraphError("vertex " + label(v) + " is not in the graph");
    if (v.side == Side::U) return {0, u_neighbors(v.index)};
    return {w_neighbors(v.index), 0};
}

VertexSet BipartiteGraph::dominated_by(const VertexSet& d) const {
    IndexMask u = d.u_bits();
    IndexMask w = d.w_bits();
    for_each_index(d.u_bits(), [&](int i) { w |= u_neighbors(i); });
    for_each_index(d.w_bits(), [&](int j) { u |= w_neighbors(j); });
    return {u, w};
}

std::vector<std::vector<int>> BipartiteGraph::u_adjacency() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_u_));
    for (int i = 1; i <= n_u_; ++i) for_each_index(u_neighbors(i), [&](int j) { out[i - 1].push_back(j); });
    return out;
}

ConvexBipartiteGraph::ConvexBipartiteGraph(int n_u, int n_w, std::vector<Interval> intervals) {
    check_side_sizes(n_u, n_w);
    if (auto issues = check_intervals(n_u, n_w, intervals); !issues.empty()) {
        const auto& first = issues.front();
        throw GraphError("invalid interval for u" + std::to_string(first.u_index) + ": " + first.message);
    }
    std::vector<IndexMask> masks;
    masks.reserve(intervals.size());
    for (const auto& iv : intervals) masks.push_back(iv.mask());
    init_masks(n_u, n_w, std::move(masks));
    intervals_ = std::move(intervals);
}

std::vector<IntervalIssue> check_intervals(int n_u, int n_w, std::span<const Interval> intervals) {
    std::vector<IntervalIssue> issues;
    if (n_u < 1 || n_w < 1) issues.push_back({0, "both sides must be nonempty"});
    if (n_u > kMaxSide || n_w > kMaxSide)
        issues.push_back({0, "at most " + std::to_string(kMaxSide) + " vertices per side"});
    if (static_cast<int>(intervals.size()) != n_u)
        issues.push_back({0, "expected " + std::to_string(n_u) + " intervals, got " +
                                 std::to_string(intervals.size())});
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        const auto [l, r] = intervals[k];
        const int i = static_cast<int>(k) + 1;
        if (l > r)
            issues.push_back({i, "left endpoint " + std::to_string(l) + " exceeds right endpoint " +
                                     std::to_string(r)});
        else if (l < 1 || r > n_w)
            issues.push_back({i, "interval [" + std::to_string(l) + "," + std::to_string(r) +
                                     "] is outside 1.." + std::to_string(n_w)});
    }
    return issues;
}

ValidationReport validate(const BipartiteGraph& g) {
    ValidationReport rep;
    rep.connected = is_connected(g);
    IndexMask lonely_u = 0;
    IndexMask lonely_w = 0;
    for (int i = 1; i <= g.n_u(); ++i)
        if (g.u_neighbors(i) == 0) lonely_u |= index_bit(i);
    for (int j = 1; j <= g.n_w(); ++j)
        if (g.w_neighbors(j) == 0) lonely_w |= index_bit(j);
    rep.isolated_vertices = VertexSet(lonely_u, lonely_w);

    // K_{1,n-1} with n >= 3 has a unique center on the singleton side. K_2 is
    // left out because both of its vertices would qualify.
    if (g.n() >= 3) {
        if (g.n_u() == 1 && g.u_neighbors(1) == index_range(1, g.n_w())) {
            rep.is_star = true;
            rep.star_center = u_vertex(1);
        } else if (g.n_w() == 1 && g.w_neighbors(1) == index_range(1, g.n_u())) {
            rep.is_star = true;
            rep.star_center = w_vertex(1);
        }
    }
    return rep;
}

ValidationReport validate(int n_u, int n_w, std::span<const Interval> intervals) {
    auto issues = check_intervals(n_u, n_w, intervals);
    if (!issues.empty()) {
        ValidationReport rep;
        rep.interval_errors = std::move(issues);
        return rep;
    }
    return validate(ConvexBipartiteGraph(n_u, n_w, {intervals.begin(), intervals.end()}));
}

bool is_connected_induced(const BipartiteGraph& g, const VertexSet& d) {
    if (d.empty()) return false;
    return reach(g, d, first_member(d)) == d;
}

bool is_connected(const BipartiteGraph& g) { return is_connected_induced(g, g.all_vertices()); }

bool is_dominating(const BipartiteGraph& g, const VertexSet& d) {
    return g.dominated_by(d) == g.all_vertices();
}

bool is_cds(const BipartiteGraph& g, const VertexSet& d) {
    return is_dominating(g, d) && is_connected_induced(g, d);
}

bool has_private_neighbor(const BipartiteGraph& g, const VertexSet& d, VertexRef v) {
    const VertexSet closed = g.neighbors(v).with(v);
    const VertexSet covered_by_rest = g.dominated_by(d.without(v));
    return !(closed - covered_by_rest).empty();
}

VertexSet cut_vertices_induced(const BipartiteGraph& g, const VertexSet& d) {
    VertexSet cuts;
    const int base = component_count(g, d);
    d.for_each([&](VertexRef v) {
        if (component_count(g, d.without(v)) > base) cuts.insert(v);
    });
    return cuts;
}

bool is_minimal_cds(const BipartiteGraph& g, const VertexSet& d) {
    if (!is_cds(g, d)) return false;
    bool minimal = true;
    d.for_each([&](VertexRef v) {
        if (!minimal) return;
        if (has_private_neighbor(g, d, v)) return;
        // A member without private neighbors is only needed for connectivity.
        const VertexSet rest = d.without(v);
        if (!rest.empty() && is_connected_induced(g, rest)) minimal = false;
    });
    return minimal;
}

bool is_minimal_cds_definition(const BipartiteGraph& g, const VertexSet& d) {
    if (!is_cds(g, d)) return false;
    bool minimal = true;
    d.for_each([&](VertexRef v) {
        if (minimal && is_cds(g, d.without(v))) minimal = false;
    });
    return minimal;
}

VertexSet cut_vertices(const BipartiteGraph& g) {
    if (!is_connected(g)) throw GraphError("cut vertices undefined for disconnected graph");
    return cut_vertices_induced(g, g.all_vertices());
}

bool check_convex_ordering(int n_w, const std::vector<std::vector<int>>& u_adjacency,
                           std::span<const int> ordering) {
    if (static_cast<int>(ordering.size()) != n_w) throw GraphError("ordering must list every W vertex once");
    std::vector<int> position(static_cast<std::size_t>(n_w) + 1, 0);
    for (std::size_t p = 0; p < ordering.size(); ++p) {
        const int w = ordering[p];
        if (w < 1 || w > n_w || position[w] != 0) throw GraphError("ordering is not a permutation of W");
        position[w] = static_cast<int>(p) + 1;
    }
    for (const auto& nbrs : u_adjacency) {
        if (nbrs.empty()) continue;
        int lo = n_w + 1;
        int hi = 0;
        std::vector<int> seen;
        for (int w : nbrs) {
            if (w < 1 || w > n_w) throw GraphError("adjacency refers to a W index outside 1..|W|");
            seen.push_back(position[w]);
            lo = std::min(lo, position[w]);
            hi = std::max(hi, position[w]);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        if (hi - lo + 1 != static_cast<int>(seen.size())) return false;
    }
    return true;
}

}  // namespace mcds
