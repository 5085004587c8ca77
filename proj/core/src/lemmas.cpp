#include <sstream>

#include "mcds/oracle.hpp"

namespace mcds {

std::string_view lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::NeighborInD: return "neighbor-in-D";
        case LemmaId::NestedExclusion: return "nested-exclusion";
        case LemmaId::SharedEndpoint: return "shared-endpoint";
        case LemmaId::ConsecutiveCover: return "consecutive-cover";
        case LemmaId::ConsecutiveDCover: return "consecutive-D-cover";
        case LemmaId::ForbiddenOverlap: return "forbidden-overlap";
        case LemmaId::OneInsideUnion: return "one-inside-union";
    }
    return "?";
}

bool LemmaReport::ok() const { return violation_count() == 0; }

std::size_t LemmaReport::violation_count() const {
    std::size_t total = 0;
    for (const auto& r : results) total += r.violations.size();
    return total;
}

std::string LemmaReport::summary() const {
    std::ostringstream os;
    for (const auto& r : results) {
        os << lemma_name(r.id) << ": " << r.violations.size() << " violation(s)";
        if (!r.violations.empty()) {
            const auto& v = r.violations.front();
            os << " e.g. D={" << v.solution.to_string() << "} witnesses=";
            for (auto w : v.witnesses) os << label(w) << ' ';
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// Checks for one solution D; each returns the witness list of the first
// violation it finds, or nothing.
class SolutionChecker {
   public:
    SolutionChecker(const ConvexBipartiteGraph& g, const VertexSet& d) : g_(g), d_(d) {
        for_each_index(d.u_bits(), [&](int i) { du_.push_back(i); });
    }

    std::vector<VertexRef> neighbor_in_d() const {
        std::vector<VertexRef> bad;
        g_.all_vertices().for_each([&](VertexRef v) {
            if ((g_.neighbors(v) & d_).empty()) bad.push_back(v);
        });
        return bad;
    }

    std::vector<VertexRef> nested_exclusion() const {
        for (int i : du_)
            for (int j : du_)
                if (i != j && g_.interval(i).is_subset_of(g_.interval(j))) return {u_vertex(i), u_vertex(j)};
        return {};
    }

    std::vector<VertexRef> shared_endpoint() const {
        for (std::size_t a = 0; a < du_.size(); ++a)
            for (std::size_t b = a + 1; b < du_.size(); ++b) {
                const auto& x = g_.interval(du_[a]);
                const auto& y = g_.interval(du_[b]);
                if (x.left == y.left || x.right == y.right) return {u_vertex(du_[a]), u_vertex(du_[b])};
            }
        return {};
    }

    std::vector<VertexRef> consecutive_cover() const {
        for (int j = 1; j < g_.n_w(); ++j)
            if ((g_.w_neighbors(j) & g_.w_neighbors(j + 1) & d_.u_bits()) == 0) return {w_vertex(j), w_vertex(j + 1)};
        return {};
    }

    std::vector<VertexRef> consecutive_d_cover() const {
        int prev = 0;
        std::vector<VertexRef> bad;
        for_each_index(d_.w_bits(), [&](int j) {
            if (bad.empty() && prev != 0 && (g_.w_neighbors(prev) & g_.w_neighbors(j) & d_.u_bits()) == 0)
                bad = {w_vertex(prev), w_vertex(j)};
            prev = j;
        });
        return bad;
    }

    std::vector<VertexRef> forbidden_overlap() const {
        for (int i : du_)
            for (int j : du_) {
                if (i >= j) continue;
                const IndexMask both = g_.u_neighbors(i) & g_.u_neighbors(j);
                if (both == 0 || (both & d_.w_bits()) == 0) continue;
                for (int k : inside_union(i, j)) return {u_vertex(i), u_vertex(j), u_vertex(k)};
            }
        return {};
    }

    std::vector<VertexRef> one_inside_union() const {
        for (int i : du_)
            for (int j : du_) {
                if (i >= j || (g_.u_neighbors(i) & g_.u_neighbors(j)) == 0) continue;
                auto inside = inside_union(i, j);
                if (inside.size() > 1) {
                    std::vector<VertexRef> w{u_vertex(i), u_vertex(j)};
                    for (int k : inside) w.push_back(u_vertex(k));
                    return w;
                }
            }
        return {};
    }

   private:
    // D ∩ U members k ∉ {i, j} whose interval lies within I_i ∪ I_j.
    std::vector<int> inside_union(int i, int j) const {
        const IndexMask uni = g_.u_neighbors(i) | g_.u_neighbors(j);
        std::vector<int> out;
        for (int k : du_)
            if (k != i && k != j && (g_.u_neighbors(k) & ~uni) == 0) out.push_back(k);
        return out;
    }

    const ConvexBipartiteGraph& g_;
    const VertexSet& d_;
    std::vector<int> du_;
};

}  // namespace

LemmaReport check_lemmas(const ConvexBipartiteGraph& g, const SolutionSet& sols) {
    if (g.n_u() < 2 || g.n_w() < 2) throw GraphError("structural checks need |U| >= 2 and |W| >= 2");
    if (!is_connected(g)) throw GraphError("structural checks need a connected graph");

    LemmaReport report;
    for (LemmaId id : kAllLemmas) report.results.push_back({id, {}});

    for (const VertexSet& d : sols) {
        if (!is_minimal_cds(g, d))
            throw GraphError("{" + d.to_string() + "} is not a minimal connected dominating set");
        const SolutionChecker check(g, d);
        auto record = [&](LemmaId id, std::vector<VertexRef> witnesses) {
            if (!witnesses.empty())
                report.results[static_cast<std::size_t>(id)].violations.push_back({d, std::move(witnesses)});
        };
        record(LemmaId::NeighborInD, check.neighbor_in_d());
        record(LemmaId::NestedExclusion, check.nested_exclusion());
        record(LemmaId::SharedEndpoint, check.shared_endpoint());
        record(LemmaId::ConsecutiveCover, check.consecutive_cover());
        record(LemmaId::ConsecutiveDCover, check.consecutive_d_cover());
        record(LemmaId::ForbiddenOverlap, check.forbidden_overlap());
        record(LemmaId::OneInsideUnion, check.one_inside_union());
    }
    return report;
}

}  // namespace mcds
