#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "mcds/analysis.hpp"
#include "mcds/graph.hpp"
#include "mcds/oracle.hpp"

namespace mcds {

/// One node of the Stage-2 search over U.
struct SearchState {
    int anchor = 0;               ///< selected U vertex with the largest right endpoint
    IndexMask undecided_u = 0;    ///< U vertices not yet selected or discarded
    VertexSet d;                  ///< partial solution (U vertices only in Stage 2)
    IndexMask discarded_u = 0;    ///< T: must be dominated by a W vertex later
    IndexMask forbidden_w = 0;    ///< F: W vertices excluded from D

    /// |undecided_U| + |W \ F|.
    std::int64_t measure(int n_w) const { return popcount(undecided_u) + n_w - popcount(forbidden_w); }

    friend bool operator==(const SearchState&, const SearchState&) = default;
};

/// Stage-2 branching rules, in priority order.
enum class Stage2Rule { Reduce, HandOff, Prune, Forced, Nested, Split, Wide };

struct Stage2Child {
    SearchState state;
    std::string_view step;
    std::string label;
    std::int64_t declared = 0;  ///< minimum measure decrease for this edge
};

struct Stage2Outcome {
    Stage2Rule rule = Stage2Rule::Prune;
    std::vector<Stage2Child> children;  ///< empty for HandOff and Prune
};

/// Intervals of W from each of which exactly one vertex must be selected.
using ConstraintIntervals = std::vector<Interval>;

struct EnumOptions {
    bool record_trace = false;
    /// Workers over Stage-1 seeds; results do not depend on this value.
    int threads = 1;
    /// Cap for the oracle used on trivial inputs.
    int fallback_max_n = 24;
    /// Called on every Stage-2 parent→child edge.
    std::function<void(const SearchState& parent, const Stage2Child& child)> on_stage2_edge;
    /// Called on every set reaching the final gate, with the Stage-4
    /// intervals processed on its path.
    std::function<void(const VertexSet& candidate, const std::vector<Interval>& processed)> on_candidate;
};

enum class EnumPath { Disconnected, Star, Fallback, Branching };

struct EnumerationResult {
    SolutionSet solutions;
    TreeStats stats;
    std::int64_t duplicates_discarded = 0;
    EnumPath path = EnumPath::Branching;
    std::vector<TraceRecord> trace;
};

/// All minimal connected dominating sets of g.
EnumerationResult enumerate_mcds(const ConvexBipartiteGraph& g, const EnumOptions& opts = {});

/// One Stage-2 state per u ∈ N(w_1). Needs |U|, |W| >= 2 and w_1 covered.
std::vector<SearchState> stage1_seed(const ConvexBipartiteGraph& g);

/// Applies the first Stage-2 rule that fires on `state`.
Stage2Outcome stage2_expand(const ConvexBipartiteGraph& g, const SearchState& state);

/// J(T, D) for a completed Stage-2 state, or nullopt when the partial solution
/// cannot be extended. D must contain no W vertex.
std::optional<ConstraintIntervals> stage3_build_constraints(const ConvexBipartiteGraph& g, const VertexSet& d,
                                                            IndexMask discarded_u, IndexMask forbidden_w,
                                                            bool* anomaly = nullptr);

/// Index into `j` of the interval Stage 4 branches on: smallest right
/// endpoint, then shortest, then smallest left endpoint.
std::size_t stage4_pick(const ConstraintIntervals& j);

/// Runs Stage 4 from (available W, J, F, D) and returns the accepted sets in
/// the order they were reached; duplicates are kept.
std::vector<VertexSet> stage4_select(const ConvexBipartiteGraph& g, IndexMask available_w, ConstraintIntervals j,
                                     IndexMask forbidden_w, const VertexSet& d);

/// The final gate.
bool finalize(const ConvexBipartiteGraph& g, const VertexSet& d);

}  // namespace mcds
