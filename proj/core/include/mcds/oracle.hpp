#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcds/graph.hpp"
#include "mcds/vertex_set.hpp"

namespace mcds {

/// Duplicate-free family of vertex sets, iterated in canonical lexicographic order.
class SolutionSet {
   public:
    SolutionSet() = default;
    explicit SolutionSet(std::vector<VertexSet> sets);

    /// Returns false if `s` was already present.
    bool insert(const VertexSet& s);
    bool contains(const VertexSet& s) const;

    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }
    const std::vector<VertexSet>& sets() const { return sets_; }

    friend bool operator==(const SolutionSet&, const SolutionSet&) = default;

   private:
    std::vector<VertexSet> sets_;
};

/// Members of `a` missing from `b`.
std::vector<VertexSet> set_difference(const SolutionSet& a, const SolutionSet& b);

class OracleLimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class MinimalityMode {
    /// Every CDS is tested with is_minimal_cds_definition.
    Definition,
    /// Subsets are scanned by cardinality; a CDS is minimal iff no
    /// previously found minimal CDS is contained in it.
    SubsetOfFound,
};

struct OracleOptions {
    int max_n = 24;
    MinimalityMode mode = MinimalityMode::Definition;
    /// Number of workers splitting each cardinality layer; 0 picks the
    /// hardware concurrency.
    int threads = 1;
};

/// Every minimal connected dominating set of `g`, by scanning all 2^n subsets.
/// Throws OracleLimitError when n exceeds `opts.max_n`.
SolutionSet enumerate_mcds_bruteforce(const BipartiteGraph& g, const OracleOptions& opts = {});

// Structural checks run against enumerated solutions.

enum class LemmaId {
    NeighborInD,        // every vertex has a neighbor in D
    NestedExclusion,    // I_i ⊆ I_j ⇒ not both in D
    SharedEndpoint,     // equal left or right endpoints ⇒ not both in D
    ConsecutiveCover,   // w_i, w_{i+1} share a neighbor in D ∩ U
    ConsecutiveDCover,  // consecutive members of W ∩ D share a neighbor in D ∩ U
    ForbiddenOverlap,   // I_k ⊂ I_i ∪ I_j, all in D ⇒ I_i ∩ I_j ∩ D = ∅
    OneInsideUnion,     // at most one k ∈ D with I_k ⊂ I_i ∪ I_j
};

inline constexpr LemmaId kAllLemmas[] = {
    LemmaId::NeighborInD,      LemmaId::NestedExclusion,   LemmaId::SharedEndpoint, LemmaId::ConsecutiveCover,
    LemmaId::ConsecutiveDCover, LemmaId::ForbiddenOverlap, LemmaId::OneInsideUnion,
};

std::string_view lemma_name(LemmaId id);

struct LemmaViolation {
    VertexSet solution;
    std::vector<VertexRef> witnesses;
};

struct LemmaResult {
    LemmaId id;
    std::vector<LemmaViolation> violations;
};

struct LemmaReport {
    std::vector<LemmaResult> results;

    bool ok() const;
    std::size_t violation_count() const;
    std::string summary() const;
};

/// Runs every structural check on every solution. Requires g connected with
/// |U|, |W| >= 2; throws GraphError if a member of `sols` is not a minimal CDS.
LemmaReport check_lemmas(const ConvexBipartiteGraph& g, const SolutionSet& sols);

}  // namespace mcds
