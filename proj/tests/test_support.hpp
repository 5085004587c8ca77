#pragma once

// Shared fixtures and a from-scratch reference implementation of the
// domination predicates. The reference works on a dense adjacency matrix and
// tests minimality against every proper subset, so it shares no code with the
// bit-mask predicates it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "mcds/graph.hpp"
#include "mcds/vertex_set.hpp"

namespace mcds::testing {

inline ConvexBipartiteGraph k23() { return ConvexBipartiteGraph(2, 3, {{1, 3}, {1, 3}}); }
/// u1 - w1 - u2 - w2
inline ConvexBipartiteGraph path4() { return ConvexBipartiteGraph(2, 2, {{1, 1}, {1, 2}}); }
/// K_{1,m} centered at u1.
inline ConvexBipartiteGraph star_u(int m) { return ConvexBipartiteGraph(1, m, {{1, m}}); }
/// K_{1,m} centered at w1.
inline ConvexBipartiteGraph star_w(int m) {
    return ConvexBipartiteGraph(m, 1, std::vector<Interval>(static_cast<std::size_t>(m), Interval{1, 1}));
}

namespace naive {

struct Graph {
    int n_u = 0;
    int n_w = 0;
    std::vector<std::vector<bool>> adj;  // canonical vertex numbering 0..n-1

    int n() const { return n_u + n_w; }
};

inline Graph from(const BipartiteGraph& g) {
    Graph h;
    h.n_u = g.n_u();
    h.n_w = g.n_w();
    h.adj.assign(static_cast<std::size_t>(h.n()), std::vector<bool>(static_cast<std::size_t>(h.n()), false));
    const auto lists = g.u_adjacency();
    for (int i = 0; i < h.n_u; ++i)
        for (int j : lists[static_cast<std::size_t>(i)]) {
            const auto a = static_cast<std::size_t>(i);
            const auto b = static_cast<std::size_t>(h.n_u + j - 1);
            h.adj[a][b] = h.adj[b][a] = true;
        }
    return h;
}

inline std::vector<int> members(std::uint64_t s) {
    std::vector<int> out;
    for (int v = 0; v < 64; ++v)
        if ((s >> v) & 1U) out.push_back(v);
    return out;
}

inline bool connected(const Graph& g, std::uint64_t s) {
    auto vs = members(s);
    if (vs.empty()) return false;
    std::vector<int> stack{vs.front()};
    std::uint64_t seen = std::uint64_t{1} << vs.front();
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : vs)
            if (!((seen >> y) & 1U) && g.adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) {
                seen |= std::uint64_t{1} << y;
                stack.push_back(y);
            }
    }
    return seen == s;
}

inline bool dominating(const Graph& g, std::uint64_t s) {
    for (int v = 0; v < g.n(); ++v) {
        if ((s >> v) & 1U) continue;
        bool hit = false;
        for (int x : members(s)) hit = hit || g.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)];
        if (!hit) return false;
    }
    return true;
}

inline bool cds(const Graph& g, std::uint64_t s) { return dominating(g, s) && connected(g, s); }

/// CDS with no proper subset (of any size) that is a CDS.
inline bool minimal_cds(const Graph& g, std::uint64_t s) {
    if (!cds(g, s)) return false;
    for (std::uint64_t sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s)
        if (cds(g, sub)) return false;
    return true;
}

inline std::uint64_t encode(const Graph& g, const VertexSet& d) {
    return d.u_bits() | (d.w_bits() << g.n_u);
}

inline VertexSet decode(const Graph& g, std::uint64_t s) {
    const std::uint64_t umask = (std::uint64_t{1} << g.n_u) - 1;
    return {s & umask, s >> g.n_u};
}

inline std::vector<VertexSet> all_mcds(const Graph& g) {
    std::vector<VertexSet> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.n()); ++s)
        if (minimal_cds(g, s)) out.push_back(decode(g, s));
    std::sort(out.begin(), out.end());
    return out;
}

/// Some W order making every U neighborhood consecutive, by trying all n_w!
/// permutations.
inline std::optional<std::vector<int>> find_convex_ordering(int n_w, const std::vector<std::vector<int>>& adjacency) {
    std::vector<int> order(static_cast<std::size_t>(n_w));
    std::iota(order.begin(), order.end(), 1);
    do {
        if (check_convex_ordering(n_w, adjacency, order)) return order;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

}  // namespace naive

/// Calls fn on every convex bipartite graph with the given side sizes (all
/// interval assignments).
inline void for_each_convex_graph(int n_u, int n_w, const std::function<void(const ConvexBipartiteGraph&)>& fn) {
    std::vector<Interval> choices;
    for (int l = 1; l <= n_w; ++l)
        for (int r = l; r <= n_w; ++r) choices.push_back({l, r});
    std::vector<std::size_t> pick(static_cast<std::size_t>(n_u), 0);
    for (;;) {
        std::vector<Interval> iv;
        for (auto p : pick) iv.push_back(choices[p]);
        fn(ConvexBipartiteGraph(n_u, n_w, iv));
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == choices.size()) pick[pos++] = 0;
        if (pos == pick.size()) return;
    }
}

}  // namespace mcds::testing
