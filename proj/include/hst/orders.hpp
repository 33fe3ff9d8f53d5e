#pragma once

#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "hst/bitset.hpp"
#include "hst/triangulation.hpp"

namespace hst {

inline constexpr std::size_t default_state_guard = 1'000'000;
inline constexpr std::size_t default_chain_guard = 10'000'000;

/// The combinatorial data deciding the second order. In even dimension 2d
/// this is the set of internal d-simplices submerged by T (lying weakly below
/// its section); in odd dimension 2d+1 it is the supermersion set, realized
/// as the internal d-faces of T and ordered by reverse inclusion downstream.
struct SubmersionSet {
    std::vector<VertexTuple> tuples;
    bool supermersion = false;
};

/// An internal d-simplex |A| is submerged by an even-dimensional T exactly
/// when no B in e(T) intertwines A.
inline SubmersionSet submersion_set(const Triangulation& t) {
    const PolytopeSpec& p = t.spec();
    const int d = p.delta / 2;
    if (p.delta % 2 == 0) {
        const std::vector<VertexTuple> e = upper_set_tuples(t);
        SubmersionSet out;
        for (VertexTuple& a : internal_simplices(p, d)) {
            bool blocked = false;
            for (const VertexTuple& b : e)
                if (intertwines(b, a)) {
                    blocked = true;
                    break;
                }
            if (!blocked) out.tuples.push_back(std::move(a));
        }
        return out;
    }
    return SubmersionSet{internal_faces(t, d), true};
}

/// The second higher Stasheff-Tamari order: inclusion of submersion sets in
/// even dimension, reverse inclusion of supermersion sets in odd dimension.
inline bool hst2_leq(const Triangulation& t, const Triangulation& u) {
    if (!(t.spec() == u.spec()))
        throw contract_error("hst2_leq: triangulations of different polytopes");
    const SubmersionSet a = submersion_set(t);
    const SubmersionSet b = submersion_set(u);
    if (a.supermersion) return detail::sorted_includes(a.tuples, b.tuples);
    return detail::sorted_includes(b.tuples, a.tuples);
}

namespace detail {

/// Kahn topological order of a cover DAG given as adjacency lists.
inline std::vector<int> topological_order(const std::vector<std::vector<int>>& next) {
    const std::size_t n = next.size();
    std::vector<int> indeg(n, 0), order;
    order.reserve(n);
    for (const auto& js : next)
        for (int j : js) ++indeg[static_cast<std::size_t>(j)];
    std::queue<int> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push(static_cast<int>(i));
    while (!ready.empty()) {
        int i = ready.front();
        ready.pop();
        order.push_back(i);
        for (int j : next[static_cast<std::size_t>(i)])
            if (--indeg[static_cast<std::size_t>(j)] == 0) ready.push(j);
    }
    if (order.size() != n)
        throw integrity_error("topological_order: cover relation has a cycle");
    return order;
}

} // namespace detail

/// All triangulations of one cyclic polytope with both higher
/// Stasheff-Tamari orders. Elements carry a canonical numbering
/// (lexicographic on sorted simplex sets), so identical specs always produce
/// identical posets, covers, and serializations.
class TriangulationPoset {
public:
    struct CoverEdge {
        int from;
        int to;
        VertexTuple support;
    };

    /// Breadth-first closure of the flip graph from the lower triangulation,
    /// under both increasing and decreasing flips.
    static TriangulationPoset enumerate(const PolytopeSpec& spec,
                                        std::size_t guard = default_state_guard) {
        TriangulationPoset poset(spec);
        poset.build(guard);
        return poset;
    }

    const PolytopeSpec& spec() const { return spec_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<Triangulation>& elements() const { return elements_; }
    const Triangulation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    /// HST1 cover edges (increasing flips), sorted by source then support.
    const std::vector<CoverEdge>& covers() const { return covers_; }

    std::optional<int> find(const std::vector<VertexTuple>& simplices) const {
        auto it = index_.find(detail::canonicalized(simplices));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// First order: reachability along increasing flips.
    bool leq1(int i, int j) const { return leq1_.test(static_cast<std::size_t>(i),
                                                      static_cast<std::size_t>(j)); }
    /// Second order: submersion-set inclusion (supermersion reverse inclusion
    /// when the dimension is odd).
    bool leq2(int i, int j) const { return leq2_.test(static_cast<std::size_t>(i),
                                                      static_cast<std::size_t>(j)); }

    const RelationMatrix& leq1_matrix() const { return leq1_; }
    const RelationMatrix& leq2_matrix() const { return leq2_; }

    /// Universe of internal simplices underlying the second-order bitsets.
    const std::vector<VertexTuple>& comparison_universe() const { return universe_; }
    /// Per-element submersion (even) or internal-face (odd) set over the universe.
    const Bitset& comparison_bits(int i) const { return bits_[static_cast<std::size_t>(i)]; }

private:
    explicit TriangulationPoset(const PolytopeSpec& spec) : spec_(spec) {}

    void build(std::size_t guard) {
        // Flip-graph closure. Connectivity of the flip graph is a known fact
        // about cyclic polytopes and is cross-checked against brute-force
        // enumeration in the test suite.
        std::map<std::vector<VertexTuple>, int> discovered;
        std::vector<Triangulation> found;
        std::queue<int> frontier;
        auto visit = [&](std::vector<VertexTuple> cells) {
            auto it = discovered.find(cells);
            if (it != discovered.end()) return;
            if (found.size() >= guard)
                throw resource_error("TriangulationPoset: state guard of " +
                                     std::to_string(guard) + " exceeded");
            const int id = static_cast<int>(found.size());
            found.emplace_back(spec_, cells); // validates the new triangulation
            discovered.emplace(std::move(cells), id);
            frontier.push(id);
        };
        visit(detail::boundary_tuples(spec_, FacetClass::Lower));
        while (!frontier.empty()) {
            const int id = frontier.front();
            frontier.pop();
            const Triangulation t = found[static_cast<std::size_t>(id)]; // copy: found may grow
            for (const FlipEvent& f : increasing_flips(t))
                visit(detail::flipped_cells(t.simplices(), f));
            for (const FlipEvent& f : decreasing_flips(t))
                visit(detail::flipped_cells(t.simplices(), f));
        }

        // Canonical numbering.
        std::sort(found.begin(), found.end(),
                  [](const Triangulation& a, const Triangulation& b) {
                      return a.simplices() < b.simplices();
                  });
        elements_ = std::move(found);
        for (int i = 0; i < size(); ++i)
            index_.emplace(elements_[static_cast<std::size_t>(i)].simplices(), i);

        auto locate = [&](FacetClass side) {
            auto it = index_.find(detail::boundary_tuples(spec_, side));
            if (it == index_.end())
                throw integrity_error("TriangulationPoset: boundary triangulation missing");
            return it->second;
        };
        bottom_ = locate(FacetClass::Lower);
        top_ = locate(FacetClass::Upper);

        // HST1 covers and reachability.
        std::vector<std::vector<int>> next(static_cast<std::size_t>(size()));
        for (int i = 0; i < size(); ++i) {
            for (const FlipEvent& f : increasing_flips(element(i))) {
                auto it = index_.find(detail::flipped_cells(element(i).simplices(), f));
                if (it == index_.end())
                    throw integrity_error("TriangulationPoset: flip result not enumerated");
                covers_.push_back(CoverEdge{i, it->second, f.support});
                next[static_cast<std::size_t>(i)].push_back(it->second);
            }
        }
        leq1_ = RelationMatrix(static_cast<std::size_t>(size()));
        const std::vector<int> topo = detail::topological_order(next);
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            const std::size_t i = static_cast<std::size_t>(*it);
            leq1_.row(i).set(i);
            for (int j : next[i]) leq1_.row(i) |= leq1_.row(static_cast<std::size_t>(j));
        }

        // Second-order data over the internal-simplex universe.
        const int d = spec_.delta / 2;
        universe_ = internal_simplices(spec_, d);
        const bool even = spec_.delta % 2 == 0;
        bits_.reserve(static_cast<std::size_t>(size()));
        for (int i = 0; i < size(); ++i) {
            Bitset b(universe_.size());
            const std::vector<VertexTuple> tuples =
                even ? submersion_set(element(i)).tuples : internal_faces(element(i), d);
            for (std::size_t a = 0; a < universe_.size(); ++a)
                if (detail::sorted_contains(tuples, universe_[a])) b.set(a);
            bits_.push_back(std::move(b));
        }
        leq2_ = RelationMatrix(static_cast<std::size_t>(size()));
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) {
                const Bitset& bi = bits_[static_cast<std::size_t>(i)];
                const Bitset& bj = bits_[static_cast<std::size_t>(j)];
                if (even ? bi.is_subset_of(bj) : bj.is_subset_of(bi))
                    leq2_.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            }
    }

    PolytopeSpec spec_;
    std::vector<Triangulation> elements_;
    std::map<std::vector<VertexTuple>, int> index_;
    std::vector<CoverEdge> covers_;
    RelationMatrix leq1_, leq2_;
    std::vector<VertexTuple> universe_;
    std::vector<Bitset> bits_;
    int bottom_ = -1, top_ = -1;
};

/// Transitive reduction of a partial order: the cover pairs. Rejects
/// relations that fail antisymmetry.
inline std::vector<std::pair<int, int>> hasse(const RelationMatrix& leq) {
    const std::size_t n = leq.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (leq.test(i, j) && leq.test(j, i))
                throw integrity_error("hasse: relation is not antisymmetric");
    const RelationMatrix below = leq.transposed();
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !leq.test(i, j)) continue;
            Bitset middle = leq.row(i) & below.row(j);
            middle.reset(i);
            middle.reset(j);
            if (middle.none()) covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return covers;
}

struct LatticeResult {
    bool is_lattice = false;
    std::optional<std::pair<int, int>> witness; // a pair lacking a meet or a join
};

/// Checks that every pair of elements has a unique meet and join.
///
/// Elements are reindexed along a linear extension, so the meet candidate of
/// a pair is the top set bit of the intersected down-sets (and dually for
/// joins); candidate search and verification are word-level scans.
inline LatticeResult is_lattice(const RelationMatrix& leq) {
    const std::size_t n = leq.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq.test(i, i))
            throw contract_error("is_lattice: relation must be reflexive");
        for (std::size_t j = i + 1; j < n; ++j)
            if (leq.test(i, j) && leq.test(j, i))
                throw integrity_error("is_lattice: relation is not antisymmetric");
    }
    const RelationMatrix below = leq.transposed(); // below.row(x) = down-set of x
    // Sorting by down-set size yields a linear extension.
    std::vector<std::size_t> topo(n);
    for (std::size_t i = 0; i < n; ++i) topo[i] = i;
    std::sort(topo.begin(), topo.end(), [&](std::size_t a, std::size_t b) {
        return below.row(a).count() < below.row(b).count();
    });

    // Rank-space relation: up | down sets over linear-extension indices.
    RelationMatrix up_r(n), down_r(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            if (leq.test(topo[r], topo[s])) {
                up_r.set(r, s);
                down_r.set(s, r);
            }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const long m = Bitset::top_common(down_r.row(i), down_r.row(j));
            const bool meet_ok =
                m >= 0 && Bitset::common_within(down_r.row(i), down_r.row(j),
                                                down_r.row(static_cast<std::size_t>(m)));
            const long c = Bitset::bottom_common(up_r.row(i), up_r.row(j));
            const bool join_ok =
                c >= 0 && Bitset::common_within(up_r.row(i), up_r.row(j),
                                                up_r.row(static_cast<std::size_t>(c)));
            if (!meet_ok || !join_ok)
                return LatticeResult{false, std::make_pair(static_cast<int>(topo[i]),
                                                           static_cast<int>(topo[j]))};
        }
    return LatticeResult{true, std::nullopt};
}

struct CoincidenceResult {
    bool coincide = false;
    bool leq1_implies_leq2 = false; // failure here signals a bug, not a counterexample
    std::optional<std::pair<int, int>> counterexample;
};

/// Compares the two orders on every ordered pair of triangulations.
inline CoincidenceResult orders_coincide(const TriangulationPoset& poset) {
    CoincidenceResult out;
    out.coincide = true;
    out.leq1_implies_leq2 = true;
    for (int i = 0; i < poset.size(); ++i)
        for (int j = 0; j < poset.size(); ++j) {
            const bool a = poset.leq1(i, j);
            const bool b = poset.leq2(i, j);
            if (a && !b) out.leq1_implies_leq2 = false;
            if (a != b) {
                out.coincide = false;
                if (!out.counterexample) out.counterexample = std::make_pair(i, j);
            }
        }
    return out;
}

inline CoincidenceResult orders_coincide(const PolytopeSpec& spec,
                                         std::size_t guard = default_state_guard) {
    return orders_coincide(TriangulationPoset::enumerate(spec, guard));
}

/// Which tuple extraction a reconstruction should invert.
enum class TupleFamily { UpperSet, InternalSet };

/// Reconstructs the unique even-dimensional triangulation whose e(T)
/// (respectively internal d-simplex set) equals the given collection, by
/// lookup in the full enumeration. Zero or multiple matches indicate invalid
/// input or a bug, and are reported as integrity errors; uniqueness of the
/// match doubles as a standing check of the reconstruction principle.
inline Triangulation triangulation_from_tuples(const std::vector<VertexTuple>& tuples,
                                               const PolytopeSpec& spec, TupleFamily family,
                                               std::size_t guard = default_state_guard) {
    if (spec.delta % 2 != 0)
        throw contract_error("triangulation_from_tuples: spec must be even-dimensional");
    const int d = spec.delta / 2;
    const std::vector<VertexTuple> want = detail::canonicalized(tuples);
    const TriangulationPoset poset = TriangulationPoset::enumerate(spec, guard);
    std::optional<int> match;
    for (int i = 0; i < poset.size(); ++i) {
        const std::vector<VertexTuple> have = family == TupleFamily::UpperSet
                                                  ? upper_set_tuples(poset.element(i))
                                                  : internal_faces(poset.element(i), d);
        if (have == want) {
            if (match)
                throw integrity_error("triangulation_from_tuples: multiple matches");
            match = i;
        }
    }
    if (!match)
        throw integrity_error("triangulation_from_tuples: no triangulation matches");
    return poset.element(*match);
}

} // namespace hst
