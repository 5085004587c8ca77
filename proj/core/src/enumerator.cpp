#include "mcds/enumerator.hpp"

#include <algorithm>
#include <thread>

namespace mcds {

namespace {

std::string u_label(int i) { return "u" + std::to_string(i); }

SearchState select(const SearchState& s, int anchor, IndexMask chosen, IndexMask decided) {
    SearchState c = s;
    c.anchor = anchor;
    c.undecided_u &= ~decided;
    c.d |= VertexSet(chosen, 0);
    c.discarded_u |= decided & ~chosen;
    return c;
}

// Stage 4 node: pick one vertex per remaining interval of J.
struct Stage4Node {
    IndexMask available_w = 0;
    ConstraintIntervals j;
    IndexMask forbidden_w = 0;
    VertexSet d;
    std::vector<Interval> processed;  // only filled when a candidate observer is installed

    std::int64_t measure() const { return popcount(available_w & ~forbidden_w); }
};

struct Stage4Step {
    enum Kind { Finalize, Prune, Branch } kind = Prune;
    std::vector<std::pair<int, Stage4Node>> children;  // (selected w, child)
    int degree = 0;
};

Stage4Step expand_stage4(const Stage4Node& node, bool keep_processed) {
    Stage4Step out;
    if (node.j.empty()) {
        out.kind = Stage4Step::Finalize;
        return out;
    }
    const std::size_t pick = stage4_pick(node.j);
    const Interval ji = node.j[pick];
    const IndexMask candidates = ji.mask() & node.available_w & ~node.forbidden_w;
    if (candidates == 0) return out;  // every vertex of J_i forbidden or already used

    out.kind = Stage4Step::Branch;
    out.degree = popcount(candidates);
    for_each_index(candidates, [&](int w) {
        Stage4Node child;
        child.available_w = node.available_w & ~ji.mask();
        child.forbidden_w = node.forbidden_w;
        child.d = node.d.with(w_vertex(w));
        child.j.reserve(node.j.size());
        for (const auto& iv : node.j)
            if (!iv.contains(w)) child.j.push_back(iv);
        if (keep_processed) {
            child.processed = node.processed;
            child.processed.push_back(ji);
        }
        out.children.emplace_back(w, std::move(child));
    });
    return out;
}

struct Frame {
    enum Kind { Stage2, Stage3, Stage4 } kind = Stage2;
    SearchState state;  // Stage2 / Stage3
    Stage4Node s4;      // Stage4
    int depth = 0;
    std::string_view step;
    std::string label;
    std::int64_t measure = 0;
    std::int64_t parent_measure = 0;
    std::int64_t declared = 0;
};

// Depth-first search over one subtree; one instance per Stage-1 seed.
class Searcher {
   public:
    Searcher(const ConvexBipartiteGraph& g, const EnumOptions& opts) : g_(g), opts_(opts) {}

    void run(Frame root) {
        stack_.push_back(std::move(root));
        while (!stack_.empty()) {
            Frame f = std::move(stack_.back());
            stack_.pop_back();
            visit(f);
        }
    }

    TreeStats stats;
    std::vector<TraceRecord> trace;
    std::vector<VertexSet> accepted;

   private:
    void visit(Frame& f) {
        ++stats.nodes;
        stats.max_depth = std::max(stats.max_depth, f.depth);
        ++stats.per_step[std::string(f.step)];
        if (f.parent_measure - f.measure < f.declared) ++stats.measure_violations;
        if (opts_.record_trace) trace.push_back({f.depth, std::string(f.step), f.measure, f.label});

        const std::size_t before = stack_.size();
        switch (f.kind) {
            case Frame::Stage2: visit_stage2(f); break;
            case Frame::Stage3: visit_stage3(f); break;
            case Frame::Stage4: visit_stage4(f, f.s4); break;
        }
        if (stack_.size() == before) ++stats.leaves;
    }

    void visit_stage2(const Frame& f) {
        Stage2Outcome out = stage2_expand(g_, f.state);
        if (out.rule == Stage2Rule::Prune) return;
        if (out.rule == Stage2Rule::HandOff) {
            Frame c;
            c.kind = Frame::Stage3;
            c.state = f.state;
            c.depth = f.depth + 1;
            c.step = step::kStage3;
            c.label = "-";
            c.measure = f.measure;
            c.parent_measure = f.measure;
            stack_.push_back(std::move(c));
            return;
        }
        // Reverse so children are visited in listed order.
        for (auto it = out.children.rbegin(); it != out.children.rend(); ++it) {
            if (opts_.on_stage2_edge) opts_.on_stage2_edge(f.state, *it);
            Frame c;
            c.kind = Frame::Stage2;
            c.state = it->state;
            c.depth = f.depth + 1;
            c.step = it->step;
            c.label = std::move(it->label);
            c.measure = it->state.measure(g_.n_w());
            c.parent_measure = f.measure;
            c.declared = it->declared;
            stack_.push_back(std::move(c));
        }
    }

    void visit_stage3(const Frame& f) {
        bool anomaly = false;
        auto j = stage3_build_constraints(g_, f.state.d, f.state.discarded_u, f.state.forbidden_w, &anomaly);
        if (anomaly) ++stats.stage3_anomalies;
        if (!j) return;
        Stage4Node node;
        node.available_w = index_range(1, g_.n_w());
        node.j = std::move(*j);
        node.forbidden_w = f.state.forbidden_w;
        node.d = f.state.d;
        visit_stage4(f, node);
    }

    void visit_stage4(const Frame& f, const Stage4Node& node) {
        Stage4Step st = expand_stage4(node, static_cast<bool>(opts_.on_candidate));
        if (st.kind == Stage4Step::Prune) return;
        if (st.kind == Stage4Step::Finalize) {
            if (opts_.on_candidate) opts_.on_candidate(node.d, node.processed);
            if (finalize(g_, node.d)) accepted.push_back(node.d);
            return;
        }
        for (auto it = st.children.rbegin(); it != st.children.rend(); ++it) {
            Frame c;
            c.kind = Frame::Stage4;
            c.depth = f.depth + 1;
            c.step = step::kSelect;
            c.label = "w" + std::to_string(it->first) + "/" + std::to_string(st.degree);
            c.measure = it->second.measure();
            c.parent_measure = f.measure;
            c.declared = st.degree;
            c.s4 = std::move(it->second);
            stack_.push_back(std::move(c));
        }
    }

    const ConvexBipartiteGraph& g_;
    const EnumOptions& opts_;
    std::vector<Frame> stack_;
};

EnumerationResult trivial_result(const ConvexBipartiteGraph& g, const EnumOptions& opts, EnumPath path,
                                 SolutionSet sols) {
    EnumerationResult res;
    res.path = path;
    res.solutions = std::move(sols);
    res.stats.nodes = 1;
    res.stats.leaves = 1;
    res.stats.per_step[std::string(step::kRoot)] = 1;
    res.stats.solutions_emitted = static_cast<std::int64_t>(res.solutions.size());
    if (opts.record_trace) res.trace.push_back({0, std::string(step::kRoot), g.n(), "-"});
    return res;
}

}  // namespace

std::vector<SearchState> stage1_seed(const ConvexBipartiteGraph& g) {
    if (g.n_u() < 2 || g.n_w() < 2) throw GraphError("stage 1 needs |U| >= 2 and |W| >= 2");
    const IndexMask first = g.w_neighbors(1);
    if (first == 0) throw GraphError("w1 has no neighbor");
    std::vector<SearchState> seeds;
    for_each_index(first, [&](int u) {
        SearchState s;
        s.anchor = u;
        s.undecided_u = index_range(1, g.n_u()) & ~first;
        s.d = VertexSet(index_bit(u), 0);
        s.discarded_u = first & ~index_bit(u);
        s.forbidden_w = 0;
        seeds.push_back(s);
    });
    return seeds;
}

Stage2Outcome stage2_expand(const ConvexBipartiteGraph& g, const SearchState& s) {
    Stage2Outcome out;
    const Interval anchor_iv = g.interval(s.anchor);
    const int r = anchor_iv.right;

    // Step 1: undecided vertices ending no later than r are nested in the anchor.
    IndexMask reducible = 0;
    for_each_index(s.undecided_u, [&](int i) {
        if (g.interval(i).right <= r) reducible |= index_bit(i);
    });
    if (reducible != 0) {
        out.rule = Stage2Rule::Reduce;
        SearchState c = s;
        c.undecided_u &= ~reducible;
        c.discarded_u |= reducible;
        const int k = popcount(reducible);
        out.children.push_back({c, step::kReduce, "moved/" + std::to_string(k), k});
        return out;
    }

    // Step 2.
    if (r == g.n_w()) {
        out.rule = Stage2Rule::HandOff;
        return out;
    }

    // Steps 3-6 branch on the undecided neighbors of w_r; every one of them
    // reaches w_{r+1}.
    const IndexMask nr = s.undecided_u & g.w_neighbors(r);
    const int deg = popcount(nr);
    if (deg == 0) {
        out.rule = Stage2Rule::Prune;
        return out;
    }
    if (deg == 1) {
        out.rule = Stage2Rule::Forced;
        const int j = lowest_index(nr);
        out.children.push_back({select(s, j, nr, nr), step::kForced, u_label(j), 1});
        return out;
    }

    const IndexMask overlap_with_anchor = anchor_iv.mask();
    if (deg == 2) {
        int j = lowest_index(nr);
        int k = lowest_index(nr & (nr - 1));
        const Interval ij = g.interval(j);
        const Interval ik = g.interval(k);
        if (ij.is_subset_of(ik) || ik.is_subset_of(ij)) {
            out.rule = Stage2Rule::Nested;
            out.children.push_back({select(s, j, index_bit(j), nr), step::kNested, "i", 2});
            out.children.push_back({select(s, k, index_bit(k), nr), step::kNested, "ii", 2});
            return out;
        }
        if (g.interval(j).right < g.interval(k).right) std::swap(j, k);
        out.rule = Stage2Rule::Split;
        out.children.push_back({select(s, j, index_bit(j), nr), step::kSplit, "i", 2});
        out.children.push_back({select(s, k, index_bit(k), nr), step::kSplit, "ii", 2});
        SearchState both = select(s, j, nr, nr);
        both.forbidden_w |= g.interval(j).mask() & overlap_with_anchor;
        out.children.push_back({both, step::kSplit, "iii", 3});
        return out;
    }

    // Step 6: j is the neighbor of w_r reaching furthest right (lowest index on ties).
    out.rule = Stage2Rule::Wide;
    int j = 0;
    for_each_index(nr, [&](int x) {
        if (j == 0 || g.interval(x).right > g.interval(j).right) j = x;
    });
    const Interval ij = g.interval(j);
    const std::string t = "/" + std::to_string(deg);
    out.children.push_back({select(s, j, index_bit(j), nr), step::kWide, "i" + t, deg});
    for_each_index(nr & ~index_bit(j), [&](int x) {
        if (g.interval(x).is_subset_of(ij)) return;
        SearchState c = select(s, j, index_bit(x) | index_bit(j), nr);
        c.forbidden_w |= ij.mask() & overlap_with_anchor;
        out.children.push_back({c, step::kWide, "ii" + t, deg + 1});
    });
    SearchState drop_j = s;
    drop_j.undecided_u &= ~index_bit(j);
    drop_j.discarded_u |= index_bit(j);
    out.children.push_back({drop_j, step::kWide, "iii" + t, 1});
    return out;
}

std::optional<ConstraintIntervals> stage3_build_constraints(const ConvexBipartiteGraph& g, const VertexSet& d,
                                                            IndexMask discarded_u, IndexMask forbidden_w,
                                                            bool* anomaly) {
    (void)forbidden_w;  // forbidden vertices only matter once Stage 4 selects
    if (anomaly) *anomaly = false;
    if (d.w_bits() != 0) throw GraphError("stage 3 expects a partial solution without W vertices");

    ConstraintIntervals j;
    for_each_index(discarded_u, [&](int t) { j.push_back(g.interval(t)); });

    std::vector<Interval> chosen;
    for_each_index(d.u_bits(), [&](int i) { chosen.push_back(g.interval(i)); });
    if (chosen.empty()) return std::nullopt;

    // Step 1.
    for (std::size_t a = 0; a < chosen.size(); ++a)
        for (std::size_t b = 0; b < chosen.size(); ++b)
            if (a != b && chosen[a].is_subset_of(chosen[b])) return std::nullopt;

    // Nested-free, so sorting by right endpoint also sorts by left endpoint.
    std::sort(chosen.begin(), chosen.end(), [](const Interval& x, const Interval& y) { return x.right < y.right; });

    // Step 2.
    std::size_t head = 0;
    while (chosen.size() - head > 1) {
        const Interval first = chosen[head];
        const int r = first.right;
        std::vector<std::size_t> at_r;
        for (std::size_t p = head; p < chosen.size(); ++p)
            if (chosen[p].contains(r)) at_r.push_back(p);
        const std::size_t deg = at_r.size();

        if (deg > 3) return std::nullopt;
        if (deg == 2) {
            const Interval other = chosen[at_r[1]];
            j.push_back({std::max(first.left, other.left), std::min(first.right, other.right)});
            ++head;
            continue;
        }
        if (deg == 3) {
            // Sorted by right endpoint: at_r = {i, k, j}.
            const Interval mid = chosen[at_r[1]];
            const Interval last = chosen[at_r[2]];
            const Interval left_part{mid.left, std::min(first.right, last.left - 1)};
            const Interval right_part{std::max(last.left, first.right + 1), mid.right};
            if (left_part.left > left_part.right || right_part.left > right_part.right) return std::nullopt;
            j.push_back(left_part);
            j.push_back(right_part);
            chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(at_r[1]));
            ++head;
            continue;
        }
        // deg == 1: the interval ending first meets no other chosen interval.
        if (anomaly) *anomaly = true;
        return std::nullopt;
    }
    return j;
}

std::size_t stage4_pick(const ConstraintIntervals& j) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < j.size(); ++p) {
        const auto& a = j[p];
        const auto& b = j[best];
        if (a.right != b.right ? a.right < b.right
                               : (a.length() != b.length() ? a.length() < b.length() : a.left < b.left))
            best = p;
    }
    return best;
}

std::vector<VertexSet> stage4_select(const ConvexBipartiteGraph& g, IndexMask available_w, ConstraintIntervals j,
                                     IndexMask forbidden_w, const VertexSet& d) {
    std::vector<VertexSet> out;
    std::vector<Stage4Node> stack;
    stack.push_back({available_w, std::move(j), forbidden_w, d, {}});
    while (!stack.empty()) {
        Stage4Node node = std::move(stack.back());
        stack.pop_back();
        Stage4Step st = expand_stage4(node, false);
        if (st.kind == Stage4Step::Finalize) {
            if (finalize(g, node.d)) out.push_back(node.d);
        } else if (st.kind == Stage4Step::Branch) {
            for (auto it = st.children.rbegin(); it != st.children.rend(); ++it) stack.push_back(std::move(it->second));
        }
    }
    return out;
}

bool finalize(const ConvexBipartiteGraph& g, const VertexSet& d) { return !d.empty() && is_minimal_cds(g, d); }

EnumerationResult enumerate_mcds(const ConvexBipartiteGraph& g, const EnumOptions& opts) {
    const ValidationReport rep = validate(g);
    if (!rep.connected) return trivial_result(g, opts, EnumPath::Disconnected, {});
    if (rep.is_star) return trivial_result(g, opts, EnumPath::Star, SolutionSet({VertexSet::of({*rep.star_center})}));
    if (g.n_u() <= 1 || g.n_w() <= 1 || g.n() <= 4) {
        OracleOptions oo;
        oo.max_n = opts.fallback_max_n;
        return trivial_result(g, opts, EnumPath::Fallback, enumerate_mcds_bruteforce(g, oo));
    }

    const std::vector<SearchState> seeds = stage1_seed(g);
    const std::int64_t root_measure = g.n();
    const int t = static_cast<int>(seeds.size());

    std::vector<Searcher> parts;
    parts.reserve(seeds.size());
    for (std::size_t s = 0; s < seeds.size(); ++s) parts.emplace_back(g, opts);

    auto run_seed = [&](std::size_t s) {
        Frame f;
        f.kind = Frame::Stage2;
        f.state = seeds[s];
        f.depth = 1;
        f.step = step::kSeed;
        f.label = u_label(seeds[s].anchor) + "/" + std::to_string(t);
        f.measure = seeds[s].measure(g.n_w());
        f.parent_measure = root_measure;
        f.declared = t;
        parts[s].run(std::move(f));
    };

    int threads = opts.threads <= 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))
                                    : opts.threads;
    threads = std::min<int>(threads, t);
    if (threads <= 1) {
        for (std::size_t s = 0; s < seeds.size(); ++s) run_seed(s);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < threads; ++w)
            workers.emplace_back([&, w] {
                for (std::size_t s = static_cast<std::size_t>(w); s < seeds.size(); s += static_cast<std::size_t>(threads))
                    run_seed(s);
            });
        for (auto& w : workers) w.join();
    }

    EnumerationResult res;
    res.path = EnumPath::Branching;
    res.stats.nodes = 1;
    res.stats.per_step[std::string(step::kRoot)] = 1;
    if (opts.record_trace) res.trace.push_back({0, std::string(step::kRoot), root_measure, "-"});
    std::vector<VertexSet> all;
    for (auto& p : parts) {
        res.stats += p.stats;
        all.insert(all.end(), p.accepted.begin(), p.accepted.end());
        if (opts.record_trace) res.trace.insert(res.trace.end(), p.trace.begin(), p.trace.end());
    }
    if (seeds.empty()) res.stats.leaves = 1;
    res.solutions = SolutionSet(all);
    res.duplicates_discarded = static_cast<std::int64_t>(all.size() - res.solutions.size());
    res.stats.solutions_emitted = static_cast<std::int64_t>(res.solutions.size());
    res.stats.duplicates = res.duplicates_discarded;
    return res;
}

}  // namespace mcds
