#pragma once

#include <map>
#include <string>
#include <vector>

#include "hst/export.hpp"

namespace hst {

/// One named verification check; detail carries a counterexample when failing.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline CheckResult passfail(std::string name, bool ok, std::string why_not) {
    return CheckResult{std::move(name), ok, ok ? std::string() : std::move(why_not)};
}

inline std::string pair_label(int i, int j) {
    return "T" + std::to_string(i) + ", T" + std::to_string(j);
}

} // namespace detail

/// The parity rule and the exact polynomial-sign oracle agree on every
/// delta-subset of [m].
inline CheckResult check_facet_oracle(const PolytopeSpec& p) {
    std::string bad;
    detail::for_each_combination(p.m, p.delta, [&](const std::vector<int>& labels) {
        if (!bad.empty()) return;
        const VertexTuple y(labels);
        if (classify_facet(y, p) != geometric_facet_oracle(y, p)) bad = y.str();
    });
    return detail::passfail("facet oracle", bad.empty(), "mismatch on " + bad);
}

inline CheckResult check_orders_coincide(const TriangulationPoset& poset) {
    const CoincidenceResult r = orders_coincide(poset);
    std::string why;
    if (r.counterexample)
        why = "orders differ on " +
              detail::pair_label(r.counterexample->first, r.counterexample->second);
    return detail::passfail("orders equal", r.coincide, why);
}

inline CheckResult check_leq1_implies_leq2(const TriangulationPoset& poset) {
    const CoincidenceResult r = orders_coincide(poset);
    return detail::passfail("leq1 implies leq2", r.leq1_implies_leq2,
                            "first order not contained in second");
}

inline CheckResult check_lattice(const TriangulationPoset& poset, int which) {
    const RelationMatrix& rel = which == 1 ? poset.leq1_matrix() : poset.leq2_matrix();
    const LatticeResult r = is_lattice(rel);
    std::string why;
    if (r.witness) why = "no meet or join for " +
                         detail::pair_label(r.witness->first, r.witness->second);
    return detail::passfail("hst" + std::to_string(which) + " lattice", r.is_lattice, why);
}

/// Undoing an increasing flip by the decreasing flip on the same support
/// returns the original triangulation.
inline CheckResult check_flip_involution(const TriangulationPoset& poset) {
    for (int i = 0; i < poset.size(); ++i) {
        const Triangulation& t = poset.element(i);
        for (const FlipEvent& f : increasing_flips(t)) {
            const Triangulation u = apply_flip(t, f);
            const FlipEvent back{f.support, f.added, f.removed};
            if (!(apply_flip(u, back) == t))
                return detail::passfail("flip involution", false,
                                        "support " + f.support.str() + " from T" +
                                            std::to_string(i));
        }
    }
    return detail::passfail("flip involution", true, "");
}

/// All triangulations of an even-dimensional cyclic polytope have the same
/// number of cells.
inline CheckResult check_uniform_size(const TriangulationPoset& poset) {
    for (int i = 1; i < poset.size(); ++i)
        if (poset.element(i).size() != poset.element(0).size())
            return detail::passfail("uniform cell count", false,
                                    "T" + std::to_string(i) + " differs from T0");
    return detail::passfail("uniform cell count", true, "");
}

/// |e(T)| = binom(n+d-1, d) for every triangulation of C(n+2d, 2d).
inline CheckResult check_e_sizes(const TriangulationPoset& poset) {
    const int d = poset.spec().delta / 2;
    const int n = poset.spec().m - poset.spec().delta;
    const std::uint64_t want = detail::binomial(n + d - 1, d);
    for (int i = 0; i < poset.size(); ++i)
        if (upper_set_tuples(poset.element(i)).size() != want)
            return detail::passfail("e-set sizes", false, "T" + std::to_string(i));
    return detail::passfail("e-set sizes", true, "");
}

namespace detail {

/// Number of bottom-to-top paths in the cover DAG, saturating at 2^63 - 1.
inline std::uint64_t path_count(const TriangulationPoset& poset) {
    std::vector<std::vector<int>> next(static_cast<std::size_t>(poset.size()));
    for (const TriangulationPoset::CoverEdge& c : poset.covers())
        next[static_cast<std::size_t>(c.from)].push_back(c.to);
    constexpr std::uint64_t cap = static_cast<std::uint64_t>(INT64_MAX);
    std::vector<std::uint64_t> memo(static_cast<std::size_t>(poset.size()), 0);
    std::vector<char> done(static_cast<std::size_t>(poset.size()), 0);
    auto rec = [&](auto&& self, int at) -> std::uint64_t {
        const std::size_t i = static_cast<std::size_t>(at);
        if (done[i]) return memo[i];
        done[i] = 1;
        if (at == poset.top()) return memo[i] = 1;
        std::uint64_t total = 0;
        for (int to : next[i]) {
            const std::uint64_t below = self(self, to);
            total = (total > cap - below) ? cap : total + below;
        }
        return memo[i] = total;
    };
    return rec(rec, poset.bottom());
}

/// Tilting states of all elements of an even poset, aligned by index.
inline std::vector<TiltingState> tilting_states(const TriangulationPoset& poset) {
    std::vector<TiltingState> out;
    out.reserve(static_cast<std::size_t>(poset.size()));
    for (int i = 0; i < poset.size(); ++i) out.push_back(tilting_state_of(poset.element(i)));
    return out;
}

} // namespace detail

/// HST1 covers coincide with left mutations of the corresponding tilting
/// modules.
inline CheckResult check_covers_are_left_mutations(const TriangulationPoset& poset) {
    const std::vector<TiltingState> states = detail::tilting_states(poset);
    std::map<std::vector<VertexTuple>, int> index;
    for (int i = 0; i < poset.size(); ++i)
        index.emplace(states[static_cast<std::size_t>(i)].tuples(), i);

    RelationMatrix covers(static_cast<std::size_t>(poset.size()));
    for (const TriangulationPoset::CoverEdge& c : poset.covers())
        covers.set(static_cast<std::size_t>(c.from), static_cast<std::size_t>(c.to));

    RelationMatrix mutation(static_cast<std::size_t>(poset.size()));
    for (int i = 0; i < poset.size(); ++i)
        for (const TiltingState& m : left_mutations(states[static_cast<std::size_t>(i)])) {
            auto it = index.find(m.tuples());
            if (it == index.end())
                return detail::passfail("flips match left mutations", false,
                                        "mutation of T" + std::to_string(i) +
                                            " is no triangulation");
            mutation.set(static_cast<std::size_t>(i), static_cast<std::size_t>(it->second));
        }

    for (int i = 0; i < poset.size(); ++i)
        for (int j = 0; j < poset.size(); ++j)
            if (covers.test(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) !=
                mutation.test(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
                return detail::passfail("flips match left mutations", false,
                                        "cover/mutation mismatch on " + detail::pair_label(i, j));
    return detail::passfail("flips match left mutations", true, "");
}

/// HST2 coincides with inclusion of perpendicular categories.
inline CheckResult check_hst2_is_perp_inclusion(const TriangulationPoset& poset) {
    const std::vector<TiltingState> states = detail::tilting_states(poset);
    std::vector<std::vector<VertexTuple>> perps;
    perps.reserve(states.size());
    for (const TiltingState& s : states) perps.push_back(perp(s));
    for (int i = 0; i < poset.size(); ++i)
        for (int j = 0; j < poset.size(); ++j) {
            const bool by_perp = detail::sorted_includes(perps[static_cast<std::size_t>(j)],
                                                         perps[static_cast<std::size_t>(i)]);
            if (by_perp != poset.leq2(i, j))
                return detail::passfail("hst2 matches perp inclusion", false,
                                        "hst2/perp mismatch on " + detail::pair_label(i, j));
        }
    return detail::passfail("hst2 matches perp inclusion", true, "");
}

/// An internal d-simplex is submerged by T exactly when its module lies in
/// the perpendicular category of T's tilting module.
inline CheckResult check_submersion_is_perp(const TriangulationPoset& poset) {
    const std::vector<TiltingState> states = detail::tilting_states(poset);
    for (int i = 0; i < poset.size(); ++i) {
        const std::vector<VertexTuple> sub = submersion_set(poset.element(i)).tuples;
        const std::vector<VertexTuple> pp = perp(states[static_cast<std::size_t>(i)]);
        for (const VertexTuple& a : poset.comparison_universe())
            if (detail::sorted_contains(sub, a) != detail::sorted_contains(pp, a))
                return detail::passfail("submersion matches perp", false,
                                        "tuple " + a.str() + " at T" + std::to_string(i));
    }
    return detail::passfail("submersion matches perp", true, "");
}

/// Green classes biject with triangulations of C(n+2d+1, 2d+1).
inline CheckResult check_green_class_count(const GreenClassOrders& go,
                                   const TriangulationPoset& odd) {
    return detail::passfail(
        "green class count", go.size() == odd.size(),
        std::to_string(go.size()) + " classes vs " + std::to_string(odd.size()) +
            " triangulations");
}

/// Both orders on green classes agree, through the bijection, with the two
/// orders on triangulations of C(n+2d+1, 2d+1); elementary deformations map
/// to covers.
inline CheckResult check_green_order_match(const GreenClassOrders& go,
                                   const TriangulationPoset& odd) {
    const std::string name = "green orders match";
    if (go.size() != odd.size()) return detail::passfail(name, false, "class count mismatch");
    std::vector<int> image;
    for (const Triangulation& t : go.class_triangulations()) {
        const std::optional<int> at = odd.find(t.simplices());
        if (!at) return detail::passfail(name, false, "class triangulation not enumerated");
        image.push_back(*at);
    }
    RelationMatrix odd_covers(static_cast<std::size_t>(odd.size()));
    for (const TriangulationPoset::CoverEdge& c : odd.covers())
        odd_covers.set(static_cast<std::size_t>(c.from), static_cast<std::size_t>(c.to));

    for (int i = 0; i < go.size(); ++i)
        for (int j = 0; j < go.size(); ++j) {
            const std::size_t oi = static_cast<std::size_t>(image[static_cast<std::size_t>(i)]);
            const std::size_t oj = static_cast<std::size_t>(image[static_cast<std::size_t>(j)]);
            if (go.leq1(i, j) != odd.leq1(static_cast<int>(oi), static_cast<int>(oj)))
                return detail::passfail(name, false,
                                        "first orders differ on " + detail::pair_label(i, j));
            if (go.leq2(i, j) != odd.leq2(static_cast<int>(oi), static_cast<int>(oj)))
                return detail::passfail(name, false,
                                        "second orders differ on " + detail::pair_label(i, j));
            if (i != j && go.deformation_cover(i, j) != odd_covers.test(oi, oj))
                return detail::passfail(name, false,
                                        "deformation/cover mismatch on " +
                                            detail::pair_label(i, j));
        }
    return detail::passfail(name, true, "");
}

/// Every green sequence runs from the projective state to the shifted
/// projective state of its parameters.
inline CheckResult check_green_endpoints(const GreenClassOrders& go) {
    const int d = go.d(), n = go.n();
    const PolytopeSpec even(n + 2 * d + 1, 2 * d);
    const TiltingState projective = cluster_state_of(boundary_triangulation(even, FacetClass::Lower));
    const TiltingState shifted = cluster_state_of(boundary_triangulation(even, FacetClass::Upper));
    for (const GreenClass& c : go.classes())
        for (const GreenSequence& g : c.representatives) {
            if (!(g.states.front() == projective))
                return detail::passfail("green endpoints", false, "sequence not starting at the projectives");
            if (!(g.states.back() == shifted))
                return detail::passfail("green endpoints", false, "sequence not ending at the shifted projectives");
        }
    return detail::passfail("green endpoints", true, "");
}

/// For d = 1 the two class orders are equal and form a lattice.
inline CheckResult check_green_lattice(const GreenClassOrders& go) {
    for (int i = 0; i < go.size(); ++i)
        for (int j = 0; j < go.size(); ++j)
            if (go.leq1(i, j) != go.leq2(i, j))
                return detail::passfail("green lattice", false,
                                        "class orders differ on " + detail::pair_label(i, j));
    const LatticeResult r = is_lattice(go.leq1_matrix());
    std::string why;
    if (r.witness) why = "no meet or join for " +
                         detail::pair_label(r.witness->first, r.witness->second);
    return detail::passfail("green lattice", r.is_lattice, why);
}

/// Every check applicable to one polytope C(m, delta).
inline std::vector<CheckResult> verify_polytope_suite(
    int m, int delta, std::size_t state_guard = default_state_guard,
    std::size_t chain_guard = default_chain_guard) {
    const PolytopeSpec p(m, delta);
    std::vector<CheckResult> out;
    if (m <= 12) out.push_back(check_facet_oracle(p));
    const TriangulationPoset poset = TriangulationPoset::enumerate(p, state_guard);
    out.push_back(check_orders_coincide(poset));
    out.push_back(check_leq1_implies_leq2(poset));
    if (delta == 2 || delta == 3) {
        out.push_back(check_lattice(poset, 1));
        out.push_back(check_lattice(poset, 2));
    }
    out.push_back(check_flip_involution(poset));
    if (delta % 2 == 0) {
        out.push_back(check_uniform_size(poset));
        out.push_back(check_e_sizes(poset));
        out.push_back(check_covers_are_left_mutations(poset));
        out.push_back(check_hst2_is_perp_inclusion(poset));
        out.push_back(check_submersion_is_perp(poset));
        const int d = delta / 2;
        const int n_cluster = m - delta - 1;
        // The green checks enumerate every maximal chain of this very poset
        // and build a quadratic deformation matrix over them, so they are
        // gated on the chain count (computed first by cheap path DP).
        if (n_cluster >= 1 && detail::path_count(poset) <= 10'000) {
            const GreenClassOrders go(d, n_cluster, state_guard, chain_guard);
            const TriangulationPoset odd =
                TriangulationPoset::enumerate(PolytopeSpec(m, delta + 1), state_guard);
            out.push_back(check_green_class_count(go, odd));
            out.push_back(check_green_order_match(go, odd));
        }
    }
    return out;
}

/// Every check applicable to the green sequences of A_n^d.
inline std::vector<CheckResult> verify_green_suite(
    int d, int n, std::size_t state_guard = default_state_guard,
    std::size_t chain_guard = default_chain_guard) {
    const GreenClassOrders go(d, n, state_guard, chain_guard);
    const TriangulationPoset odd =
        TriangulationPoset::enumerate(PolytopeSpec(n + 2 * d + 1, 2 * d + 1), state_guard);
    std::vector<CheckResult> out;
    out.push_back(check_green_endpoints(go));
    out.push_back(check_green_class_count(go, odd));
    out.push_back(check_green_order_match(go, odd));
    if (d == 1) out.push_back(check_green_lattice(go));
    return out;
}

} // namespace hst
