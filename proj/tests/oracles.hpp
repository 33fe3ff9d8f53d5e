#pragma once

// Test-only oracles, kept independent of the flip/BFS machinery they check.

#include <vector>

#include "hst/triangulation.hpp"

namespace hst_test {

/// Every triangulation of C(m, delta), found by backtracking over all
/// candidate cells with volume and pairwise-properness pruning. Exponential,
/// so only for small specs; the output is sorted like the canonical poset
/// numbering.
inline std::vector<std::vector<hst::VertexTuple>> brute_force_triangulations(
    const hst::PolytopeSpec& p) {
    using namespace hst;
    std::vector<VertexTuple> candidates;
    detail::for_each_combination(p.m, p.delta + 1, [&](const std::vector<int>& labels) {
        candidates.emplace_back(labels);
    });
    const BigInt total = detail::scaled_total_volume(p);

    std::vector<std::vector<VertexTuple>> found;
    std::vector<VertexTuple> chosen;
    BigInt vol = 0;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (vol == total) {
            if (is_triangulation(chosen, p)) found.push_back(chosen);
            return; // any further cell would overshoot the volume
        }
        if (from == candidates.size() || vol > total) return;
        self(self, from + 1); // skip candidates[from]
        for (const VertexTuple& c : chosen)
            if (improperly_intersecting(c, candidates[from], p)) return;
        chosen.push_back(candidates[from]);
        vol += scaled_simplex_volume(candidates[from]);
        self(self, from + 1);
        vol -= scaled_simplex_volume(candidates[from]);
        chosen.pop_back();
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace hst_test
