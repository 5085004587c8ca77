#include "mcds/generators.hpp"

#include <random>

namespace mcds {

namespace {

void check_k(int k) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("lower-bound family needs an odd k >= 3, got " + std::to_string(k));
}

constexpr char kLetters[] = {'x', 'y', 'z'};

}  // namespace

ConvexBipartiteGraph lower_bound_graph(LowerBoundParams p) {
    check_k(p.k);
    const int half = (p.k - 1) / 2;  // number of even triples
    const int n_w = 3 * (half + 1);
    const int n_u = 3 * half + 2;
    std::vector<Interval> iv;
    iv.reserve(static_cast<std::size_t>(n_u));
    iv.push_back({1, 3});  // u sees T_1
    for (int j = 1; j <= half; ++j)
        for (int c = 0; c < 3; ++c) iv.push_back({3 * j - 2, 3 * j + 3});  // T_2j sees T_2j-1 and T_2j+1
    iv.push_back({n_w - 2, n_w});  // v sees T_k
    return ConvexBipartiteGraph(n_u, n_w, std::move(iv));
}

LowerBoundLayout lower_bound_layout(LowerBoundParams p) {
    check_k(p.k);
    const int half = (p.k - 1) / 2;
    LowerBoundLayout lay;
    lay.k = p.k;
    lay.u = u_vertex(1);
    lay.v = u_vertex(3 * half + 2);
    lay.triples.resize(static_cast<std::size_t>(p.k));
    for (int j = 0; j <= half; ++j) lay.triples[static_cast<std::size_t>(2 * j)] = {0, index_range(3 * j + 1, 3 * j + 3)};
    for (int j = 1; j <= half; ++j)
        lay.triples[static_cast<std::size_t>(2 * j - 1)] = {index_range(3 * j - 1, 3 * j + 1), 0};
    return lay;
}

std::string LowerBoundLayout::name(VertexRef x) const {
    if (x == u) return "u";
    if (x == v) return "v";
    if (x.side == Side::W) {
        const int q = x.index - 1;
        return kLetters[q % 3] + std::to_string(2 * (q / 3) + 1);
    }
    const int q = x.index - 2;
    return kLetters[q % 3] + std::to_string(2 * (q / 3 + 1));
}

ConvexBipartiteGraph random_convex_graph(const RandomParams& p) {
    if (p.n_u < 2 || p.n_w < 2 || p.n_u > kMaxSide || p.n_w > kMaxSide)
        throw std::invalid_argument("random graphs need 2 <= n_u, n_w <= " + std::to_string(kMaxSide));
    std::mt19937_64 rng(p.seed);
    const auto nw = static_cast<std::uint64_t>(p.n_w);
    for (int attempt = 0; attempt < p.max_retries; ++attempt) {
        std::vector<Interval> iv;
        iv.reserve(static_cast<std::size_t>(p.n_u));
        for (int i = 0; i < p.n_u; ++i) {
            const int left = 1 + static_cast<int>(rng() % nw);
            const int cap = p.n_w - left + 1;
            int len = 1;
            // Extend with probability 3/5 per step.
            while (len < cap && rng() % 5 < 3) ++len;
            iv.push_back({left, left + len - 1});
        }
        ConvexBipartiteGraph g(p.n_u, p.n_w, std::move(iv));
        const ValidationReport rep = validate(g);
        if (rep.connected && rep.isolated_vertices.empty()) return g;
    }
    throw GenerationError("no connected graph for n_u=" + std::to_string(p.n_u) + " n_w=" + std::to_string(p.n_w) +
                          " seed=" + std::to_string(p.seed) + " within " + std::to_string(p.max_retries) +
                          " attempts");
}

}  // namespace mcds
