#pragma once

#include <vector>

#include "hst/polytope.hpp"

namespace hst {

namespace detail {

/// The lower (or upper) boundary triangulation of C(m, delta) as raw tuples:
/// the chosen facets of C(m, delta + 1), read one dimension down. For
/// m = delta + 1 the polytope is a simplex and is its own single cell.
inline std::vector<VertexTuple> boundary_tuples(const PolytopeSpec& p, FacetClass side) {
    if (side == FacetClass::NotFacet)
        throw contract_error("boundary_tuples: side must be Lower or Upper");
    if (p.m == p.delta + 1) {
        std::vector<int> all(static_cast<std::size_t>(p.m));
        std::iota(all.begin(), all.end(), 1);
        return {VertexTuple(all)};
    }
    const PolytopeSpec lifted(p.m, p.delta + 1);
    FacetPartition facets = enumerate_facets(lifted);
    return side == FacetClass::Lower ? std::move(facets.lower) : std::move(facets.upper);
}

/// delta! times the volume of C(m, delta), as the sum over its lower
/// triangulation. This is the reference total for the triangulation checker.
inline BigInt scaled_total_volume(const PolytopeSpec& p) {
    BigInt total = 0;
    for (const VertexTuple& cell : boundary_tuples(p, FacetClass::Lower))
        total += scaled_simplex_volume(cell);
    return total;
}

/// Visits every (k+1)-subset of a tuple, in lexicographic order.
inline void for_each_subtuple(const VertexTuple& t, int k,
                              const std::function<void(VertexTuple)>& fn) {
    for_each_combination(static_cast<int>(t.size()), k + 1, [&](const std::vector<int>& pos) {
        std::vector<int> labels;
        labels.reserve(pos.size());
        for (int q : pos) labels.push_back(t[static_cast<std::size_t>(q - 1)]);
        fn(VertexTuple(std::move(labels)));
    });
}

} // namespace detail

/// True iff S is a triangulation of C(m, delta): the cells pairwise intersect
/// properly and their exact volumes sum to the full volume of the polytope.
inline bool is_triangulation(const std::vector<VertexTuple>& s, const PolytopeSpec& p) {
    for (const VertexTuple& cell : s) {
        if (static_cast<int>(cell.size()) != p.delta + 1)
            throw contract_error("is_triangulation: cells must be (delta+1)-tuples");
        if (cell.max_label() > p.m)
            throw contract_error("is_triangulation: label exceeds m");
    }
    const std::vector<VertexTuple> cells = detail::canonicalized(s);
    if (cells.size() != s.size()) return false; // duplicate cells overlap improperly
    BigInt total = 0;
    for (const VertexTuple& cell : cells) total += scaled_simplex_volume(cell);
    if (total != detail::scaled_total_volume(p)) return false;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            if (improperly_intersecting(cells[i], cells[j], p)) return false;
    return true;
}

/// A validated triangulation of a cyclic polytope, stored as its
/// lexicographically sorted set of (delta+1)-tuples.
class Triangulation {
public:
    Triangulation(PolytopeSpec spec, std::vector<VertexTuple> simplices)
        : spec_(spec), simplices_(detail::canonicalized(std::move(simplices))) {
        if (!is_triangulation(simplices_, spec_))
            throw contract_error("Triangulation: cell set is not a triangulation");
    }

    const PolytopeSpec& spec() const { return spec_; }
    const std::vector<VertexTuple>& simplices() const { return simplices_; }
    std::size_t size() const { return simplices_.size(); }

    bool contains(const VertexTuple& cell) const {
        return detail::sorted_contains(simplices_, cell);
    }

    friend bool operator==(const Triangulation& a, const Triangulation& b) {
        return a.spec_ == b.spec_ && a.simplices_ == b.simplices_;
    }

private:
    PolytopeSpec spec_;
    std::vector<VertexTuple> simplices_;
};

/// The lower or upper triangulation of C(m, delta), projected from the
/// matching facets of C(m, delta + 1). These are the bottom and top of both
/// Stasheff-Tamari orders.
inline Triangulation boundary_triangulation(const PolytopeSpec& p, FacetClass side) {
    return Triangulation(p, detail::boundary_tuples(p, side));
}

/// One bistellar flip: inside conv(H) the lower triangulation of C(H, delta)
/// is exchanged for the upper one (increasing direction) or back.
struct FlipEvent {
    VertexTuple support;               // the (delta+2)-tuple H
    std::vector<VertexTuple> removed;  // relabeled lower facets of C(H, delta+1)
    std::vector<VertexTuple> added;    // relabeled upper facets
};

namespace detail {

/// Lower/upper facet split of the simplex on positions [k], relabeled through
/// the sorted entries of H (|H| = k). Position facet [k] \ {i} is lower iff
/// k - i is even.
inline std::pair<std::vector<VertexTuple>, std::vector<VertexTuple>>
relabeled_facet_split(const VertexTuple& h) {
    const int k = static_cast<int>(h.size());
    std::vector<VertexTuple> lower, upper;
    for (int i = 1; i <= k; ++i) {
        std::vector<int> labels;
        labels.reserve(static_cast<std::size_t>(k) - 1);
        for (int q = 1; q <= k; ++q)
            if (q != i) labels.push_back(h[static_cast<std::size_t>(q - 1)]);
        ((k - i) % 2 == 0 ? lower : upper).emplace_back(std::move(labels));
    }
    std::sort(lower.begin(), lower.end());
    std::sort(upper.begin(), upper.end());
    return {std::move(lower), std::move(upper)};
}

inline std::vector<FlipEvent> flips(const Triangulation& t, bool increasing) {
    const PolytopeSpec& p = t.spec();
    std::vector<FlipEvent> out;
    for_each_combination(p.m, p.delta + 2, [&](const std::vector<int>& labels) {
        VertexTuple h(labels);
        auto [lower, upper] = relabeled_facet_split(h);
        std::vector<VertexTuple>& gone = increasing ? lower : upper;
        std::vector<VertexTuple>& fresh = increasing ? upper : lower;
        for (const VertexTuple& cell : gone)
            if (!t.contains(cell)) return;
        out.push_back(FlipEvent{std::move(h), std::move(gone), std::move(fresh)});
    });
    return out; // sorted by support, by construction
}

/// Cell set after a flip, without revalidation.
inline std::vector<VertexTuple> flipped_cells(const std::vector<VertexTuple>& cells,
                                              const FlipEvent& f) {
    std::vector<VertexTuple> out;
    out.reserve(cells.size() - f.removed.size() + f.added.size());
    std::set_difference(cells.begin(), cells.end(), f.removed.begin(), f.removed.end(),
                        std::back_inserter(out));
    out.insert(out.end(), f.added.begin(), f.added.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// All increasing bistellar flips available from T: the supports H whose
/// relabeled lower triangulation lies entirely inside T. Sorted by support.
inline std::vector<FlipEvent> increasing_flips(const Triangulation& t) {
    return detail::flips(t, true);
}

/// All decreasing bistellar flips available from T (the inverses of
/// increasing flips). Sorted by support.
inline std::vector<FlipEvent> decreasing_flips(const Triangulation& t) {
    return detail::flips(t, false);
}

/// Applies a flip event previously obtained from increasing_flips or
/// decreasing_flips on T.
inline Triangulation apply_flip(const Triangulation& t, const FlipEvent& f) {
    if (static_cast<int>(f.support.size()) != t.spec().delta + 2 ||
        f.support.max_label() > t.spec().m)
        throw contract_error("apply_flip: support is not a (delta+2)-tuple in [m]");
    auto [lower, upper] = detail::relabeled_facet_split(f.support);
    const bool inc = f.removed == lower && f.added == upper;
    const bool dec = f.removed == upper && f.added == lower;
    if (!inc && !dec)
        throw contract_error("apply_flip: event does not match its support");
    for (const VertexTuple& cell : f.removed)
        if (!t.contains(cell))
            throw contract_error("apply_flip: flip is not applicable to this triangulation");
    return Triangulation(t.spec(), detail::flipped_cells(t.simplices(), f));
}

/// e(T) for an even-dimensional triangulation: the d-simplices of T lying in
/// no lower facet of the polytope. Under the tilting bijection these are the
/// summand labels of the corresponding module.
inline std::vector<VertexTuple> upper_set_tuples(const Triangulation& t) {
    const PolytopeSpec& p = t.spec();
    if (p.delta % 2 != 0)
        throw contract_error("upper_set_tuples: defined for even dimension only");
    const int d = p.delta / 2;
    const std::vector<VertexTuple> lower = enumerate_facets(p).lower;
    std::vector<VertexTuple> faces;
    for (const VertexTuple& cell : t.simplices())
        detail::for_each_subtuple(cell, d, [&](VertexTuple a) { faces.push_back(std::move(a)); });
    faces = detail::canonicalized(std::move(faces));
    std::vector<VertexTuple> out;
    for (VertexTuple& a : faces) {
        bool buried = false;
        for (const VertexTuple& f : lower)
            if (f.contains_all(a)) {
                buried = true;
                break;
            }
        if (!buried) out.push_back(std::move(a));
    }
    return out;
}

/// All k-dimensional faces of T that are internal simplices of the polytope.
inline std::vector<VertexTuple> internal_faces(const Triangulation& t, int k) {
    const PolytopeSpec& p = t.spec();
    if (k < 0 || k > p.delta)
        throw contract_error("internal_faces: need 0 <= k <= delta");
    std::vector<VertexTuple> faces;
    for (const VertexTuple& cell : t.simplices())
        detail::for_each_subtuple(cell, k, [&](VertexTuple a) { faces.push_back(std::move(a)); });
    faces = detail::canonicalized(std::move(faces));
    std::vector<VertexTuple> out;
    for (VertexTuple& a : faces)
        if (is_internal_simplex(a, p)) out.push_back(std::move(a));
    return out;
}

} // namespace hst
