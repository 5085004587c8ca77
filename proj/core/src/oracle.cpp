#include "mcds/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

namespace mcds {

SolutionSet::SolutionSet(std::vector<VertexSet> sets) : sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SolutionSet::insert(const VertexSet& s) {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
    if (it != sets_.end() && *it == s) return false;
    sets_.insert(it, s);
    return true;
}

bool SolutionSet::contains(const VertexSet& s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s);
}

std::vector<VertexSet> set_difference(const SolutionSet& a, const SolutionSet& b) {
    std::vector<VertexSet> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

using Subset = std::uint64_t;

struct SubsetCodec {
    int n_u;
    IndexMask u_mask;

    VertexSet decode(Subset s) const { return {s & u_mask, s >> n_u}; }
};

std::vector<VertexSet> scan_range(const BipartiteGraph& g, const SubsetCodec& codec, Subset lo, Subset hi) {
    std::vector<VertexSet> found;
    for (Subset s = lo; s < hi; ++s) {
        const VertexSet d = codec.decode(s);
        if (is_dominating(g, d) && is_minimal_cds_definition(g, d)) found.push_back(d);
    }
    return found;
}

SolutionSet scan_definition(const BipartiteGraph& g, const SubsetCodec& codec, int threads) {
    const Subset total = Subset{1} << g.n();
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (total < 4096) threads = 1;

    std::vector<std::vector<VertexSet>> parts(static_cast<std::size_t>(threads));
    const Subset chunk = total / static_cast<Subset>(threads);
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t) {
        const Subset lo = chunk * static_cast<Subset>(t);
        const Subset hi = t + 1 == threads ? total : lo + chunk;
        if (threads == 1) {
            parts[0] = scan_range(g, codec, lo, hi);
        } else {
            workers.emplace_back([&, t, lo, hi] { parts[static_cast<std::size_t>(t)] = scan_range(g, codec, lo, hi); });
        }
    }
    for (auto& w : workers) w.join();

    std::vector<VertexSet> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return SolutionSet(std::move(all));
}

// Next subset with the same popcount (Gosper).
Subset next_same_size(Subset s) {
    const Subset c = s & (~s + 1);
    const Subset r = s + c;
    return (((r ^ s) >> 2) / c) | r;
}

SolutionSet scan_by_cardinality(const BipartiteGraph& g, const SubsetCodec& codec) {
    const int n = g.n();
    const Subset limit = Subset{1} << n;
    std::vector<VertexSet> found;
    for (int k = 1; k <= n; ++k) {
        for (Subset s = (Subset{1} << k) - 1; s < limit; s = next_same_size(s)) {
            const VertexSet d = codec.decode(s);
            if (!is_cds(g, d)) continue;
            const bool has_smaller = std::any_of(found.begin(), found.end(),
                                                 [&](const VertexSet& f) { return f.is_subset_of(d); });
            if (!has_smaller) found.push_back(d);
        }
    }
    return SolutionSet(std::move(found));
}

}  // namespace

SolutionSet enumerate_mcds_bruteforce(const BipartiteGraph& g, const OracleOptions& opts) {
    const int n = g.n();
    if (n > opts.max_n || n > 62)
        throw OracleLimitError("brute-force oracle refuses n=" + std::to_string(n) + " (cap max_n=" +
                               std::to_string(opts.max_n) + ")");
    const SubsetCodec codec{g.n_u(), index_range(1, g.n_u())};
    if (opts.mode == MinimalityMode::SubsetOfFound) return scan_by_cardinality(g, codec);
    return scan_definition(g, codec, opts.threads);
}

}  // namespace mcds
