#include "mcds/vertex_set.hpp"

namespace mcds {

std::string label(VertexRef v) {
    return (v.side == Side::U ? "u" : "w") + std::to_string(v.index);
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    // Walk both canonical sequences in lockstep.
    IndexMask au = a.u_, aw = a.w_, bu = b.u_, bw = b.w_;
    for (;;) {
        const bool a_done = (au | aw) == 0;
        const bool b_done = (bu | bw) == 0;
        if (a_done || b_done) {
            if (a_done && b_done) return std::strong_ordering::equal;
            return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        const VertexRef x = au != 0 ? u_vertex(lowest_index(au)) : w_vertex(lowest_index(aw));
        const VertexRef y = bu != 0 ? u_vertex(lowest_index(bu)) : w_vertex(lowest_index(bw));
        if (auto c = x <=> y; c != 0) return c;
        if (au != 0) au &= au - 1; else aw &= aw - 1;
        if (bu != 0) bu &= bu - 1; else bw &= bw - 1;
    }
}

std::vector<VertexRef> VertexSet::members() const {
    std::vector<VertexRef> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](VertexRef v) { out.push_back(v); });
    return out;
}

std::string VertexSet::to_string() const {
    std::string s;
    for_each([&](VertexRef v) {
        if (!s.empty()) s += ' ';
        s += label(v);
    });
    return s;
}

}  // namespace mcds
