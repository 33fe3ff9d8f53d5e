#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "hst/reptheory.hpp"

namespace hst {

/// A d-maximal green sequence of A_n^d: a maximal chain of cluster-tilting
/// states from the projectives to the shifted projectives, one left mutation
/// per step. Equivalently, a maximal chain in the first Stasheff-Tamari order
/// on C(n+2d+1, 2d); the flip supports are recorded alongside the states.
struct GreenSequence {
    int d;
    int n;
    std::vector<TiltingState> states;
    std::vector<VertexTuple> flips; // (2d+2)-tuples, one per mutation

    std::size_t length() const { return flips.size(); }
};

/// All summand tuples appearing along the sequence; green sequences are
/// equivalent exactly when these sets agree.
inline std::vector<VertexTuple> summand_set(const GreenSequence& g) {
    std::vector<VertexTuple> out;
    for (const TiltingState& s : g.states)
        out.insert(out.end(), s.tuples().begin(), s.tuples().end());
    return detail::canonicalized(std::move(out));
}

namespace detail {

/// Checks one mutation step of a green sequence against the flip that
/// produced it: exactly one summand A is exchanged for B, A ≀ B, and the flip
/// support is A ∪ B.
inline void check_green_step(const TiltingState& from, const TiltingState& to,
                             const VertexTuple& support) {
    std::vector<VertexTuple> gone, fresh;
    std::set_difference(from.tuples().begin(), from.tuples().end(), to.tuples().begin(),
                        to.tuples().end(), std::back_inserter(gone));
    std::set_difference(to.tuples().begin(), to.tuples().end(), from.tuples().begin(),
                        from.tuples().end(), std::back_inserter(fresh));
    if (gone.size() != 1 || fresh.size() != 1 || !intertwines(gone[0], fresh[0]) ||
        !(merged(gone[0], fresh[0]) == support))
        throw integrity_error("GreenSequence: mutation step does not match its flip");
}

} // namespace detail

/// Enumerates every d-maximal green sequence of A_n^d, as the maximal chains
/// of the first-order poset on C(n+2d+1, 2d). Deterministic order:
/// lexicographic on the flip-support lists.
inline std::vector<GreenSequence> enumerate_green_sequences(
    int d, int n, std::size_t state_guard = default_state_guard,
    std::size_t chain_guard = default_chain_guard) {
    if (d < 1 || n < 1)
        throw contract_error("enumerate_green_sequences: need d >= 1 and n >= 1");
    const PolytopeSpec spec(n + 2 * d + 1, 2 * d);
    const TriangulationPoset poset = TriangulationPoset::enumerate(spec, state_guard);

    std::vector<TiltingState> states;
    states.reserve(static_cast<std::size_t>(poset.size()));
    for (int i = 0; i < poset.size(); ++i) states.push_back(cluster_state_of(poset.element(i)));

    std::vector<std::vector<std::pair<VertexTuple, int>>> next(
        static_cast<std::size_t>(poset.size()));
    for (const TriangulationPoset::CoverEdge& c : poset.covers())
        next[static_cast<std::size_t>(c.from)].emplace_back(c.support, c.to);
    // covers() is sorted by (from, support), so depth-first traversal emits
    // the chains already in flip-lex order.

    std::vector<GreenSequence> out;
    std::vector<int> path{poset.bottom()};
    std::vector<VertexTuple> flips;
    auto dfs = [&](auto&& self, int at) -> void {
        if (at == poset.top()) {
            if (out.size() >= chain_guard)
                throw resource_error("enumerate_green_sequences: chain guard of " +
                                     std::to_string(chain_guard) + " exceeded");
            GreenSequence g;
            g.d = d;
            g.n = n;
            g.flips = flips;
            for (int i : path) g.states.push_back(states[static_cast<std::size_t>(i)]);
            for (std::size_t k = 0; k + 1 < g.states.size(); ++k)
                detail::check_green_step(g.states[k], g.states[k + 1], g.flips[k]);
            out.push_back(std::move(g));
            return;
        }
        if (next[static_cast<std::size_t>(at)].empty())
            throw integrity_error("enumerate_green_sequences: dead end below the top");
        for (const auto& [support, to] : next[static_cast<std::size_t>(at)]) {
            path.push_back(to);
            flips.push_back(support);
            self(self, to);
            flips.pop_back();
            path.pop_back();
        }
    };
    dfs(dfs, poset.bottom());
    return out;
}

/// The triangulation of C(n+2d+1, 2d+1) whose cells are the flip supports of
/// the sequence. Depends only on the equivalence class of the sequence.
inline Triangulation odd_triangulation(const GreenSequence& g) {
    const PolytopeSpec spec(g.n + 2 * g.d + 1, 2 * g.d + 1);
    const std::vector<VertexTuple> cells = detail::canonicalized(g.flips);
    if (cells.size() != g.flips.size())
        throw integrity_error("odd_triangulation: repeated flip support");
    if (!is_triangulation(cells, spec))
        throw integrity_error("odd_triangulation: supports do not triangulate the polytope");
    return Triangulation(spec, cells);
}

/// True iff h is an increasing elementary polygonal deformation of g: the two
/// sequences agree outside one segment, where g walks the length-(d+2) side
/// and h the length-(d+1) side of an oriented polygon (same endpoints,
/// disjoint interiors). Such a deformation shortens the sequence by one.
inline bool is_increasing_polygonal_deformation(const GreenSequence& g,
                                                const GreenSequence& h) {
    if (g.d != h.d || g.n != h.n)
        throw contract_error("is_increasing_polygonal_deformation: parameter mismatch");
    const std::vector<TiltingState>& a = g.states;
    const std::vector<TiltingState>& b = h.states;
    if (a.size() != b.size() + 1) return false;

    std::size_t p = 0;
    while (p < b.size() && a[p] == b[p]) ++p;
    std::size_t s = 0;
    while (s < b.size() && a[a.size() - 1 - s] == b[b.size() - 1 - s]) ++s;
    if (p == 0 || s == 0) return false;

    const std::size_t bot = p - 1;
    const std::size_t top_a = a.size() - s;
    const std::size_t top_b = b.size() - s;
    if (top_a <= bot || top_b <= bot) return false;
    if (top_a - bot != static_cast<std::size_t>(g.d) + 2) return false;
    if (top_b - bot != static_cast<std::size_t>(g.d) + 1) return false;

    for (std::size_t i = bot + 1; i < top_a; ++i)
        for (std::size_t j = bot + 1; j < top_b; ++j)
            if (a[i] == b[j]) return false;
    return true;
}

/// An equivalence class of d-maximal green sequences: the common summand set
/// and every representative.
struct GreenClass {
    std::vector<VertexTuple> sigma;
    std::vector<GreenSequence> representatives;
};

/// Second order on classes: containment of summand sets.
inline bool green_leq_2(const GreenClass& c, const GreenClass& cp) {
    return detail::sorted_includes(c.sigma, cp.sigma);
}

/// Partition of d-maximal green sequences by summand set. Classes are
/// ordered by their (distinct) triangulations of C(n+2d+1, 2d+1); the
/// partition refusing to map injectively onto triangulations would be a bug.
inline std::vector<GreenClass> green_classes_of(std::vector<GreenSequence> sequences) {
    std::map<std::vector<VertexTuple>, GreenClass> by_sigma;
    for (GreenSequence& g : sequences) {
        std::vector<VertexTuple> sigma = summand_set(g);
        GreenClass& c = by_sigma[sigma];
        c.sigma = std::move(sigma);
        c.representatives.push_back(std::move(g));
    }
    std::vector<std::pair<std::vector<VertexTuple>, GreenClass>> keyed;
    for (auto& [sigma, c] : by_sigma) {
        // Representatives must share their flip-support set; the class
        // triangulation is a function of that set, so one validation serves.
        const std::vector<VertexTuple> cells =
            detail::canonicalized(c.representatives.front().flips);
        for (std::size_t i = 1; i < c.representatives.size(); ++i) {
            const std::vector<VertexTuple> other =
                detail::canonicalized(c.representatives[i].flips);
            if (other != cells || other.size() != c.representatives[i].flips.size())
                throw integrity_error("green_classes: class with inconsistent flip supports");
        }
        keyed.emplace_back(odd_triangulation(c.representatives.front()).simplices(),
                           std::move(c));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i + 1 < keyed.size(); ++i)
        if (keyed[i].first == keyed[i + 1].first)
            throw integrity_error("green_classes: distinct classes share a triangulation");
    std::vector<GreenClass> out;
    out.reserve(keyed.size());
    for (auto& [cells, c] : keyed) out.push_back(std::move(c));
    return out;
}

inline std::vector<GreenClass> green_classes(int d, int n,
                                             std::size_t state_guard = default_state_guard,
                                             std::size_t chain_guard = default_chain_guard) {
    return green_classes_of(enumerate_green_sequences(d, n, state_guard, chain_guard));
}

namespace detail {

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

/// Hash of a flip list with the window [from, from+width) cut out.
inline std::uint64_t flip_context_hash(const std::vector<VertexTuple>& flips,
                                       std::size_t from, std::size_t width) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < flips.size(); ++i) {
        if (i >= from && i < from + width) continue;
        for (int v : flips[i]) h = hash_mix(h, static_cast<std::uint64_t>(v));
        h = hash_mix(h, 0x7fULL);
    }
    return h;
}

} // namespace detail

/// The two orders on equivalence classes of d-maximal green sequences. The
/// first is the reflexive-transitive closure of elementary polygonal
/// deformations between representatives; the second is reverse containment of
/// summand sets.
class GreenClassOrders {
public:
    GreenClassOrders(int d, int n, std::vector<GreenSequence> sequences)
        : d_(d), n_(n), classes_(green_classes_of(std::move(sequences))) {
        const std::size_t k = classes_.size();
        for (const GreenClass& c : classes_)
            triangulations_.push_back(odd_triangulation(c.representatives.front()));

        // A sequence is determined by its flip list (all share the start
        // state), and a deformation pair agrees on flips outside one aligned
        // window of widths d+2 / d+1. Candidate pairs are therefore found by
        // hashing flip contexts (list length, window position, flips outside
        // the window) and joining; the exact predicate confirms each hit.
        deformation_ = RelationMatrix(k);
        struct Ref {
            std::size_t cls;
            const GreenSequence* seq;
        };
        std::unordered_map<std::uint64_t, std::vector<Ref>> shorter_contexts;
        const std::size_t short_width = static_cast<std::size_t>(d) + 1;
        auto context_key = [](std::size_t len, std::size_t at, std::uint64_t ctx) {
            return detail::hash_mix(detail::hash_mix(ctx, len), at);
        };
        for (std::size_t j = 0; j < k; ++j)
            for (const GreenSequence& g : classes_[j].representatives) {
                if (g.flips.size() < short_width) continue;
                for (std::size_t at = 0; at + short_width <= g.flips.size(); ++at)
                    shorter_contexts[context_key(
                                         g.flips.size(), at,
                                         detail::flip_context_hash(g.flips, at, short_width))]
                        .push_back(Ref{j, &g});
            }
        for (std::size_t i = 0; i < k; ++i)
            for (const GreenSequence& g : classes_[i].representatives) {
                if (g.flips.size() < short_width + 1) continue;
                for (std::size_t at = 0; at + short_width + 1 <= g.flips.size(); ++at) {
                    const auto it = shorter_contexts.find(context_key(
                        g.flips.size() - 1, at,
                        detail::flip_context_hash(g.flips, at, short_width + 1)));
                    if (it == shorter_contexts.end()) continue;
                    for (const Ref& r : it->second)
                        if (r.cls != i && !deformation_.test(i, r.cls) &&
                            is_increasing_polygonal_deformation(g, *r.seq))
                            deformation_.set(i, r.cls);
                }
            }

        // Reflexive-transitive closure by depth-first reachability.
        leq1_ = RelationMatrix(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::size_t> stack{i};
            leq1_.set(i, i);
            while (!stack.empty()) {
                const std::size_t at = stack.back();
                stack.pop_back();
                for (std::size_t j = 0; j < k; ++j)
                    if (deformation_.test(at, j) && !leq1_.test(i, j)) {
                        leq1_.set(i, j);
                        stack.push_back(j);
                    }
            }
        }

        leq2_ = RelationMatrix(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (green_leq_2(classes_[i], classes_[j])) leq2_.set(i, j);
    }

    GreenClassOrders(int d, int n, std::size_t state_guard = default_state_guard,
                     std::size_t chain_guard = default_chain_guard)
        : GreenClassOrders(d, n, enumerate_green_sequences(d, n, state_guard, chain_guard)) {}

    int d() const { return d_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(classes_.size()); }
    const std::vector<GreenClass>& classes() const { return classes_; }
    /// The class's triangulation of C(n+2d+1, 2d+1), aligned with classes().
    const std::vector<Triangulation>& class_triangulations() const { return triangulations_; }

    /// Some representative of class i deforms onto one of class j.
    bool deformation_cover(int i, int j) const {
        return deformation_.test(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    bool leq1(int i, int j) const {
        return leq1_.test(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    bool leq2(int i, int j) const {
        return leq2_.test(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    const RelationMatrix& leq1_matrix() const { return leq1_; }
    const RelationMatrix& leq2_matrix() const { return leq2_; }

private:
    int d_, n_;
    std::vector<GreenClass> classes_;
    std::vector<Triangulation> triangulations_;
    RelationMatrix deformation_, leq1_, leq2_;
};

} // namespace hst
