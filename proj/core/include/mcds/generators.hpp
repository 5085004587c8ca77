#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcds/graph.hpp"

namespace mcds {

class GenerationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Chain of independent triples T_1..T_k between two end vertices u and v,
/// laid out so that odd triples form W and even triples join U. The graph has
/// n = 3k + 2 vertices and exactly 3^k minimal connected dominating sets.
struct LowerBoundParams {
    int k = 3;  ///< odd, >= 3
};

/// Throws std::invalid_argument for even k or k < 3.
ConvexBipartiteGraph lower_bound_graph(LowerBoundParams p);

/// Where the named vertices of lower_bound_graph(k) ended up.
struct LowerBoundLayout {
    VertexRef u;
    VertexRef v;
    std::vector<VertexSet> triples;  ///< triples[i-1] = T_i
    /// "u", "v", "x3", "y2", ... for every vertex, indexed like VertexSet::members().
    std::string name(VertexRef x) const;
    int k = 0;
};

LowerBoundLayout lower_bound_layout(LowerBoundParams p);

struct RandomParams {
    int n_u = 4;
    int n_w = 4;
    std::uint64_t seed = 0;
    int max_retries = 1000;
};

/// Seeded random connected convex bipartite graph. Uses std::mt19937_64 (whose
/// output sequence is fixed by the C++ standard) and integer-only draws, so a
/// given parameter set yields the same graph on every platform. Throws
/// GenerationError when no connected draw appears within max_retries.
ConvexBipartiteGraph random_convex_graph(const RandomParams& p);

}  // namespace mcds
