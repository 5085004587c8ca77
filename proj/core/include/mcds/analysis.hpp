#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcds {

/// Per-child measure decreases (c_1, ..., c_t) of one branching rule.
class BranchingVector {
   public:
    /// Throws std::invalid_argument unless nonempty with every entry >= 1.
    explicit BranchingVector(std::vector<int> decreases);

    const std::vector<int>& decreases() const { return decreases_; }
    int max_decrease() const;
    std::size_t size() const { return decreases_.size(); }

    /// p(x) = x^c - sum_i x^(c - c_i) with c = max c_i.
    double characteristic(double x) const;

    std::string to_string() const;

    friend bool operator==(const BranchingVector&, const BranchingVector&) = default;

   private:
    std::vector<int> decreases_;
};

/// Unique positive root of the characteristic polynomial, found by bisection
/// to an absolute tolerance `tol`. Throws std::invalid_argument if tol <= 0.
double branching_number(const BranchingVector& v, double tol = 1e-12);

/// (t, t+1 repeated t-1 times, 1) for a degree-t split in Stage 2; t >= 3.
BranchingVector step6_vector(int t);
/// (t, ..., t) with t entries, the Stage-4 selection rule; t >= 1.
BranchingVector stage4_vector(int t);

/// Every vector the enumerator can declare: (2,2), (2,2,3), step6_vector(t)
/// for 3 <= t <= max_t and stage4_vector(t) for 2 <= t <= max_t.
std::vector<BranchingVector> algorithm_vectors(int max_t = 12);

/// Base of the proven worst-case bound on search-tree leaves.
inline constexpr double kLeafGrowthBase = 1.7254;

// Search-tree trace. One record per node in depth-first preorder:
//   <depth> <step> <measure> <label>
// The step names the rule that created the node from its parent, the label
// names the branch ("i", "ii", "w3/2", ...). Labels of the form name/t carry
// the branching degree t needed to know the declared decrease.

namespace step {
inline constexpr std::string_view kRoot = "root";
inline constexpr std::string_view kSeed = "stage1";
inline constexpr std::string_view kReduce = "s2.reduce";
inline constexpr std::string_view kForced = "s2.forced";
inline constexpr std::string_view kNested = "s2.nested";
inline constexpr std::string_view kSplit = "s2.split";
inline constexpr std::string_view kWide = "s2.wide";
inline constexpr std::string_view kStage3 = "stage3";
inline constexpr std::string_view kSelect = "stage4";
}  // namespace step

struct TraceRecord {
    int depth = 0;
    std::string step;
    std::int64_t measure = 0;
    std::string label;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

class TraceParseError : public std::runtime_error {
   public:
    TraceParseError(int line, const std::string& what)
        : std::runtime_error("trace line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

   private:
    int line_;
};

/// Minimum measure decrease the analysis declares for an edge created by
/// (step, label); nullopt for unknown steps or malformed labels.
std::optional<std::int64_t> declared_decrease(std::string_view step, std::string_view label);

std::string format_trace_line(const TraceRecord& r);
void write_trace(std::ostream& os, const std::vector<TraceRecord>& trace);
/// Throws TraceParseError on malformed lines or an impossible depth sequence.
std::vector<TraceRecord> parse_trace(std::istream& is);

struct TreeStats {
    std::int64_t nodes = 0;
    std::int64_t leaves = 0;
    std::int64_t solutions_emitted = 0;
    std::int64_t duplicates = 0;
    int max_depth = 0;
    std::map<std::string, std::int64_t> per_step;
    std::int64_t measure_violations = 0;
    /// Stage-3 prunes taken because the smallest-right interval meets no other.
    std::int64_t stage3_anomalies = 0;

    TreeStats& operator+=(const TreeStats& o);
    std::string to_string() const;
};

/// Node, leaf, depth and per-step counts recoverable from a trace.
/// Solutions and duplicates are not part of the trace and stay zero.
TreeStats stats_from_trace(const std::vector<TraceRecord>& trace);

struct MeasureViolation {
    int line = 0;
    std::string step;
    std::string label;
    std::int64_t declared = 0;
    std::int64_t actual = 0;
};

struct MeasureReport {
    std::int64_t edges_checked = 0;
    std::vector<MeasureViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks that along every parent→child edge the measure drops by at least
/// the declared amount.
MeasureReport verify_measure_trace(const std::vector<TraceRecord>& trace);

/// leaves <= n^2 * 1.7254^n.
bool growth_check(const TreeStats& stats, int n);
double growth_bound(int n);

}  // namespace mcds
