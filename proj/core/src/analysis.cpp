#include "mcds/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace mcds {

BranchingVector::BranchingVector(std::vector<int> decreases) : decreases_(std::move(decreases)) {
    if (decreases_.empty()) throw std::invalid_argument("branching vector must be nonempty");
    for (int c : decreases_)
        if (c < 1) throw std::invalid_argument("branching vector entries must be >= 1");
}

int BranchingVector::max_decrease() const { return *std::max_element(decreases_.begin(), decreases_.end()); }

double BranchingVector::characteristic(double x) const {
    const int c = max_decrease();
    double p = std::pow(x, c);
    for (int ci : decreases_) p -= std::pow(x, c - ci);
    return p;
}

std::string BranchingVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < decreases_.size(); ++i) {
        if (i != 0) s += ',';
        s += std::to_string(decreases_[i]);
    }
    return s + ")";
}

double branching_number(const BranchingVector& v, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    // p(x) / x^c = 1 - sum x^-c_i is increasing on (0, inf), so the positive
    // root is unique and p(1) = 1 - t <= 0 puts it in [1, inf).
    if (v.characteristic(1.0) >= 0) return 1.0;
    double lo = 1.0;
    double hi = 2.0;
    while (v.characteristic(hi) <= 0) {
        lo = hi;
        hi *= 2;
    }
    for (int it = 0; it < 2000 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (v.characteristic(mid) > 0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

BranchingVector step6_vector(int t) {
    if (t < 3) throw std::invalid_argument("step-6 vectors need t >= 3");
    std::vector<int> c;
    c.push_back(t);
    c.insert(c.end(), static_cast<std::size_t>(t - 1), t + 1);
    c.push_back(1);
    return BranchingVector(std::move(c));
}

BranchingVector stage4_vector(int t) {
    if (t < 1) throw std::invalid_argument("stage-4 vectors need t >= 1");
    return BranchingVector(std::vector<int>(static_cast<std::size_t>(t), t));
}

std::vector<BranchingVector> algorithm_vectors(int max_t) {
    std::vector<BranchingVector> out{BranchingVector({2, 2}), BranchingVector({2, 2, 3})};
    for (int t = 3; t <= max_t; ++t) out.push_back(step6_vector(t));
    for (int t = 2; t <= max_t; ++t) out.push_back(stage4_vector(t));
    return out;
}

namespace {

struct Label {
    std::string_view name;
    std::optional<std::int64_t> degree;
};

std::optional<std::int64_t> parse_int(std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return value;
}

std::optional<Label> split_label(std::string_view label) {
    const auto slash = label.find('/');
    if (slash == std::string_view::npos) return Label{label, std::nullopt};
    auto t = parse_int(label.substr(slash + 1));
    if (!t || *t < 0) return std::nullopt;
    return Label{label.substr(0, slash), t};
}

bool is_vertex_name(std::string_view name, char side) {
    return name.size() >= 2 && name[0] == side && parse_int(name.substr(1)).value_or(0) >= 1;
}

bool is_roman(std::string_view name) { return name == "i" || name == "ii" || name == "iii"; }

}  // namespace

std::optional<std::int64_t> declared_decrease(std::string_view step_id, std::string_view label) {
    const auto parsed = split_label(label);
    if (!parsed) return std::nullopt;
    const auto [name, t] = *parsed;

    if (step_id == step::kRoot || step_id == step::kStage3) {
        if (name == "-" && !t) return 0;
        return std::nullopt;
    }
    if (step_id == step::kSeed) {
        if (is_vertex_name(name, 'u') && t) return *t;
        return std::nullopt;
    }
    if (step_id == step::kReduce) {
        if (name == "moved" && t) return *t;
        return std::nullopt;
    }
    if (step_id == step::kForced) {
        if (is_vertex_name(name, 'u') && !t) return 1;
        return std::nullopt;
    }
    if (step_id == step::kNested) {
        if ((name == "i" || name == "ii") && !t) return 2;
        return std::nullopt;
    }
    if (step_id == step::kSplit) {
        if (!is_roman(name) || t) return std::nullopt;
        return name == "iii" ? 3 : 2;
    }
    if (step_id == step::kWide) {
        if (!is_roman(name) || !t || *t < 3) return std::nullopt;
        if (name == "i") return *t;
        if (name == "ii") return *t + 1;
        return 1;
    }
    if (step_id == step::kSelect) {
        if (is_vertex_name(name, 'w') && t && *t >= 1) return *t;
        return std::nullopt;
    }
    return std::nullopt;
}

std::string format_trace_line(const TraceRecord& r) {
    return std::to_string(r.depth) + ' ' + r.step + ' ' + std::to_string(r.measure) + ' ' + r.label;
}

void write_trace(std::ostream& os, const std::vector<TraceRecord>& trace) {
    for (const auto& r : trace) os << format_trace_line(r) << '\n';
}

std::vector<TraceRecord> parse_trace(std::istream& is) {
    std::vector<TraceRecord> out;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string depth, step_id, measure, label, extra;
        if (!(fields >> depth >> step_id >> measure >> label) || (fields >> extra))
            throw TraceParseError(lineno, "expected 4 fields: depth step measure label");
        auto d = parse_int(depth);
        auto mu = parse_int(measure);
        if (!d || *d < 0) throw TraceParseError(lineno, "bad depth '" + depth + "'");
        if (!mu || *mu < 0) throw TraceParseError(lineno, "bad measure '" + measure + "'");
        if (!declared_decrease(step_id, label))
            throw TraceParseError(lineno, "unknown step/label '" + step_id + " " + label + "'");
        const bool is_root = step_id == step::kRoot;
        if (is_root != (*d == 0)) throw TraceParseError(lineno, "only the root may (and must) sit at depth 0");
        if (!out.empty() && *d > out.back().depth + 1) throw TraceParseError(lineno, "depth jumps by more than one");
        if (out.empty() && *d != 0) throw TraceParseError(lineno, "trace must start at the root");
        out.push_back({static_cast<int>(*d), step_id, *mu, label});
    }
    return out;
}

TreeStats& TreeStats::operator+=(const TreeStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    solutions_emitted += o.solutions_emitted;
    duplicates += o.duplicates;
    max_depth = std::max(max_depth, o.max_depth);
    for (const auto& [k, v] : o.per_step) per_step[k] += v;
    measure_violations += o.measure_violations;
    stage3_anomalies += o.stage3_anomalies;
    return *this;
}

std::string TreeStats::to_string() const {
    std::ostringstream os;
    os << "nodes " << nodes << '\n'
       << "leaves " << leaves << '\n'
       << "solutions_emitted " << solutions_emitted << '\n'
       << "duplicates " << duplicates << '\n'
       << "max_depth " << max_depth << '\n'
       << "measure_violations " << measure_violations << '\n'
       << "stage3_anomalies " << stage3_anomalies << '\n';
    for (const auto& [k, v] : per_step) os << "step " << k << ' ' << v << '\n';
    return os.str();
}

TreeStats stats_from_trace(const std::vector<TraceRecord>& trace) {
    TreeStats s;
    s.nodes = static_cast<std::int64_t>(trace.size());
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const bool has_child = i + 1 < trace.size() && trace[i + 1].depth == trace[i].depth + 1;
        if (!has_child) ++s.leaves;
        s.max_depth = std::max(s.max_depth, trace[i].depth);
        ++s.per_step[trace[i].step];
    }
    s.measure_violations = static_cast<std::int64_t>(verify_measure_trace(trace).violations.size());
    return s;
}

MeasureReport verify_measure_trace(const std::vector<TraceRecord>& trace) {
    MeasureReport rep;
    std::vector<std::int64_t> measure_at_depth;  // ancestors of the current node
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& r = trace[i];
        measure_at_depth.resize(static_cast<std::size_t>(r.depth));
        if (r.depth > 0) {
            const std::int64_t parent = measure_at_depth.back();
            const std::int64_t declared = declared_decrease(r.step, r.label).value_or(0);
            const std::int64_t actual = parent - r.measure;
            ++rep.edges_checked;
            if (actual < declared)
                rep.violations.push_back({static_cast<int>(i) + 1, r.step, r.label, declared, actual});
        }
        measure_at_depth.push_back(r.measure);
    }
    return rep;
}

double growth_bound(int n) {
    const double nn = static_cast<double>(n);
    return nn * nn * std::pow(kLeafGrowthBase, nn);
}

bool growth_check(const TreeStats& stats, int n) { return static_cast<double>(stats.leaves) <= growth_bound(n); }

}  // namespace mcds
