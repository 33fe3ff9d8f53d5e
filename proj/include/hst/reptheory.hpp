#pragma once

#include <cstdint>
#include <vector>

#include "hst/orders.hpp"

namespace hst {

namespace detail {

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) /
                                      static_cast<std::uint64_t>(i);
    return r;
}

} // namespace detail

/// Arrow A -> A + e_direction of the quiver Q^(d,n); direction indexes the
/// tuple position that is incremented (0-based).
struct QuiverArrow {
    VertexTuple from;
    VertexTuple to;
    int direction;

    friend bool operator==(const QuiverArrow&, const QuiverArrow&) = default;
};

enum class RelationKind { Commute, Zero };

/// Relation on the length-2 path base -> base+e_first -> base+e_first+e_second:
/// the path commutes with its transpose when base+e_second is a vertex, and is
/// zero otherwise.
struct QuiverRelation {
    VertexTuple base;
    int first;
    int second;
    RelationKind kind;

    friend bool operator==(const QuiverRelation&, const QuiverRelation&) = default;
};

/// The quiver with relations presenting the higher Auslander algebra A_n^d.
struct QuiverPresentation {
    int d;
    int n;
    std::vector<VertexTuple> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<QuiverRelation> relations;
};

/// Builds Q^(d,n): vertices are the separated d-tuples in [n+2d-2], arrows
/// increment one coordinate, and every composable length-2 path carries
/// either a commutativity or a zero relation.
inline QuiverPresentation build_quiver(int d, int n) {
    if (d < 1 || n < 1)
        throw contract_error("build_quiver: need d >= 1 and n >= 1");
    QuiverPresentation q;
    q.d = d;
    q.n = n;
    q.vertices = enumerate_index_set(n + 2 * d - 2, d - 1, IndexSetKind::Separated);

    auto is_vertex = [&](const VertexTuple& v) { return detail::sorted_contains(q.vertices, v); };
    auto bumped = [](const VertexTuple& v, int i) {
        std::vector<int> e = v.entries();
        e[static_cast<std::size_t>(i)] += 1;
        // A separated tuple stays strictly increasing after one bump.
        return VertexTuple(std::move(e));
    };

    for (const VertexTuple& a : q.vertices)
        for (int i = 0; i < d; ++i) {
            VertexTuple b = bumped(a, i);
            if (is_vertex(b)) q.arrows.push_back(QuiverArrow{a, b, i});
        }

    for (const VertexTuple& a : q.vertices)
        for (int i = 0; i < d; ++i) {
            VertexTuple mid = bumped(a, i);
            if (!is_vertex(mid)) continue;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                VertexTuple end = bumped(mid, j);
                if (!is_vertex(end)) continue;
                const RelationKind kind =
                    is_vertex(bumped(a, j)) ? RelationKind::Commute : RelationKind::Zero;
                q.relations.push_back(QuiverRelation{a, i, j, kind});
            }
        }
    return q;
}

/// Ext^d(M_B, M_A) is nonzero precisely when A intertwines B; every
/// homological predicate the bijections need reduces to this.
inline bool ext_nonzero(const VertexTuple& b, const VertexTuple& a) {
    return intertwines(a, b);
}

/// Which of the two algebraic frameworks a state lives in. Tilting states
/// are collections inside the separated index set of C(n+2d, 2d); cluster
/// states live in the cyclically separated index set of C(n+2d+1, 2d).
enum class Framework { Tilting, ClusterTilting };

namespace detail {

inline std::vector<VertexTuple> state_universe(Framework fw, int d, int n) {
    return fw == Framework::Tilting
               ? enumerate_index_set(n + 2 * d, d, IndexSetKind::Separated)
               : enumerate_index_set(n + 2 * d + 1, d, IndexSetKind::CyclicSeparated);
}

} // namespace detail

/// True iff S is a maximal non-intertwining collection of the right size in
/// the framework's index set, i.e. labels a tilting module or cluster-tilting
/// object of A_n^d.
inline bool is_tilting_state(const std::vector<VertexTuple>& tuples, Framework fw, int d,
                             int n) {
    if (d < 1 || n < 1) return false;
    const std::vector<VertexTuple> s = detail::canonicalized(tuples);
    if (s.size() != tuples.size()) return false;
    if (s.size() != detail::binomial(n + d - 1, d)) return false;
    const std::vector<VertexTuple> universe = detail::state_universe(fw, d, n);
    for (const VertexTuple& t : s)
        if (!detail::sorted_contains(universe, t)) return false;
    return is_compatible_collection(s);
}

/// A basic tilting module or cluster-tilting object, stored as its sorted
/// collection of summand tuples.
class TiltingState {
public:
    TiltingState(Framework fw, int d, int n, std::vector<VertexTuple> tuples)
        : fw_(fw), d_(d), n_(n), tuples_(detail::canonicalized(std::move(tuples))) {
        if (!is_tilting_state(tuples_, fw_, d_, n_))
            throw contract_error("TiltingState: not a valid state");
    }

    Framework framework() const { return fw_; }
    int d() const { return d_; }
    int n() const { return n_; }
    const std::vector<VertexTuple>& tuples() const { return tuples_; }
    bool contains(const VertexTuple& t) const { return detail::sorted_contains(tuples_, t); }

    friend bool operator==(const TiltingState&, const TiltingState&) = default;
    friend auto operator<=>(const TiltingState& a, const TiltingState& b) {
        return a.tuples_ <=> b.tuples_;
    }

private:
    Framework fw_;
    int d_, n_;
    std::vector<VertexTuple> tuples_;
};

/// All left mutations of a state: exchanges of one summand A for a summand B
/// with A ≀ B such that the result is again a state. Under the bijections
/// these are exactly the increasing bistellar flips of the corresponding
/// triangulation.
inline std::vector<TiltingState> left_mutations(const TiltingState& s) {
    const std::vector<VertexTuple> universe =
        detail::state_universe(s.framework(), s.d(), s.n());
    std::vector<TiltingState> out;
    for (const VertexTuple& a : s.tuples()) {
        for (const VertexTuple& b : universe) {
            if (s.contains(b) || !intertwines(a, b)) continue;
            bool ok = true;
            for (const VertexTuple& c : s.tuples()) {
                if (c == a) continue;
                if (are_intertwining(c, b)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<VertexTuple> tuples;
            for (const VertexTuple& c : s.tuples())
                if (!(c == a)) tuples.push_back(c);
            tuples.push_back(b);
            out.emplace_back(s.framework(), s.d(), s.n(), std::move(tuples));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The left-perpendicular category of a tilting state, combinatorially: all
/// index tuples A such that no summand B of the state has B ≀ A.
inline std::vector<VertexTuple> perp(const TiltingState& s) {
    if (s.framework() != Framework::Tilting)
        throw contract_error("perp: defined in the tilting framework");
    std::vector<VertexTuple> out;
    for (const VertexTuple& a : detail::state_universe(Framework::Tilting, s.d(), s.n())) {
        bool blocked = false;
        for (const VertexTuple& b : s.tuples())
            if (intertwines(b, a)) {
                blocked = true;
                break;
            }
        if (!blocked) out.push_back(a);
    }
    return out;
}

/// Second-order comparison on tilting states: inclusion of perpendicular
/// categories. Agrees with hst2_leq on the corresponding triangulations.
inline bool hst2_by_perp(const TiltingState& s, const TiltingState& t) {
    if (s.framework() != t.framework() || s.d() != t.d() || s.n() != t.n())
        throw contract_error("hst2_by_perp: states with different parameters");
    return detail::sorted_includes(perp(t), perp(s));
}

/// The tilting state e(T) attached to a triangulation of C(n+2d, 2d).
inline TiltingState tilting_state_of(const Triangulation& t) {
    const PolytopeSpec& p = t.spec();
    if (p.delta % 2 != 0)
        throw contract_error("tilting_state_of: even-dimensional triangulations only");
    const int d = p.delta / 2;
    const int n = p.m - 2 * d;
    if (n < 1)
        throw contract_error("tilting_state_of: need m >= 2d + 1");
    return TiltingState(Framework::Tilting, d, n, upper_set_tuples(t));
}

/// The cluster-tilting state attached to a triangulation of C(n+2d+1, 2d):
/// its internal d-simplices.
inline TiltingState cluster_state_of(const Triangulation& t) {
    const PolytopeSpec& p = t.spec();
    if (p.delta % 2 != 0)
        throw contract_error("cluster_state_of: even-dimensional triangulations only");
    const int d = p.delta / 2;
    const int n = p.m - 2 * d - 1;
    if (n < 1)
        throw contract_error("cluster_state_of: need m >= 2d + 2");
    return TiltingState(Framework::ClusterTilting, d, n, internal_faces(t, d));
}

} // namespace hst
