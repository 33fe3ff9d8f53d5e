#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <numeric>
#include <vector>

#include "hst/vertex_tuple.hpp"

namespace hst {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Classification of a candidate facet of a cyclic polytope.
enum class FacetClass { Lower, Upper, NotFacet };

/// The cyclic polytope C(m, delta): convex hull of the points (i, i^2, ..., i^delta)
/// for i in [m]. All combinatorics below is independent of the curve parameters,
/// so the moment-curve abscissae are fixed at t_i = i once and for all.
struct PolytopeSpec {
    int m;
    int delta;

    PolytopeSpec(int m_, int delta_) : m(m_), delta(delta_) {
        if (!(m >= delta + 1 && delta + 1 >= 2))
            throw contract_error("PolytopeSpec: need m >= delta + 1 >= 2");
    }

    friend bool operator==(const PolytopeSpec&, const PolytopeSpec&) = default;
};

namespace detail {

/// Visits every k-subset of [m] as a strictly increasing label vector, in
/// lexicographic order.
inline void for_each_combination(int m, int k,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > m) return;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        fn(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace detail

/// Gale's evenness criterion, split into the lower/upper dichotomy. A
/// delta-subset Y is a facet iff #{y in Y : y > i} has constant parity over
/// all i in [m] \ Y; all even means the polytope lies above the spanned
/// hyperplane (a lower facet), all odd means below (an upper facet). For
/// m = delta + 1 every delta-subset is a facet.
inline FacetClass classify_facet(const VertexTuple& y, const PolytopeSpec& p) {
    if (static_cast<int>(y.size()) != p.delta)
        throw contract_error("classify_facet: tuple size must equal delta");
    if (y.max_label() > p.m)
        throw contract_error("classify_facet: label exceeds m");
    bool seen_even = false, seen_odd = false;
    std::size_t at = 0; // entries of y below the sweep point
    for (int i = 1; i <= p.m; ++i) {
        if (at < y.size() && y[at] == i) {
            ++at;
            continue;
        }
        const int above = static_cast<int>(y.size() - at);
        (above % 2 == 0 ? seen_even : seen_odd) = true;
        if (seen_even && seen_odd) return FacetClass::NotFacet;
    }
    return seen_odd ? FacetClass::Upper : FacetClass::Lower;
}

struct FacetPartition {
    std::vector<VertexTuple> lower;
    std::vector<VertexTuple> upper;
};

/// All facets of C(m, delta), partitioned by class; both parts are nonempty
/// and lexicographically sorted.
inline FacetPartition enumerate_facets(const PolytopeSpec& p) {
    FacetPartition out;
    detail::for_each_combination(p.m, p.delta, [&](const std::vector<int>& labels) {
        VertexTuple y(labels);
        switch (classify_facet(y, p)) {
            case FacetClass::Lower: out.lower.push_back(std::move(y)); break;
            case FacetClass::Upper: out.upper.push_back(std::move(y)); break;
            case FacetClass::NotFacet: break;
        }
    });
    return out;
}

/// True iff the simplex |A| lies in no facet of the polytope. Internal
/// simplices are exactly the ones visible to the algebra side of the
/// bijections (the non-projective-injective summands).
inline bool is_internal_simplex(const VertexTuple& a, const PolytopeSpec& p) {
    if (static_cast<int>(a.size()) > p.delta + 1)
        throw contract_error("is_internal_simplex: tuple larger than a cell");
    if (a.max_label() > p.m)
        throw contract_error("is_internal_simplex: label exceeds m");
    if (static_cast<int>(a.size()) > p.delta) return true; // full cells fit in no facet
    // Complete A to a delta-subset in every possible way; A is internal iff
    // no completion is a facet.
    std::vector<int> rest;
    for (int v = 1; v <= p.m; ++v)
        if (!a.contains(v)) rest.push_back(v);
    const int need = p.delta - static_cast<int>(a.size());
    bool internal = true;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (!internal) return;
        if (left == 0) {
            std::vector<int> labels(a.begin(), a.end());
            labels.insert(labels.end(), pick.begin(), pick.end());
            std::sort(labels.begin(), labels.end());
            if (classify_facet(VertexTuple(labels), p) != FacetClass::NotFacet)
                internal = false;
            return;
        }
        for (std::size_t i = from;
             i < rest.size() && rest.size() - i >= static_cast<std::size_t>(left); ++i) {
            pick.push_back(rest[i]);
            self(self, i + 1, left - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, need);
    return internal;
}

/// All internal k-simplices of the spec, lexicographically sorted.
inline std::vector<VertexTuple> internal_simplices(const PolytopeSpec& p, int k) {
    std::vector<VertexTuple> out;
    detail::for_each_combination(p.m, k + 1, [&](const std::vector<int>& labels) {
        VertexTuple a(labels);
        if (is_internal_simplex(a, p)) out.push_back(std::move(a));
    });
    return out;
}

/// delta! times the Euclidean volume of the moment-curve simplex on A, i.e.
/// the Vandermonde product of the labels. Exact, and additive with a common
/// denominator, which is all the triangulation checker needs.
inline BigInt scaled_simplex_volume(const VertexTuple& a) {
    BigInt prod = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            prod *= a[j] - a[i];
    return prod;
}

/// Exact volume of the simplex conv{p(a_0), ..., p(a_delta)} on the moment
/// curve, with delta inferred from the tuple size.
inline BigRational simplex_volume(const VertexTuple& a) {
    if (a.size() < 2)
        throw contract_error("simplex_volume: need a full-dimensional simplex");
    const int delta = static_cast<int>(a.size()) - 1;
    return BigRational(scaled_simplex_volume(a), detail::factorial(delta));
}

/// Circuit-based improper-intersection test for two full-dimensional
/// moment-curve simplices. Points on the moment curve are in general
/// position, so the circuits are exactly the (delta+2)-subsets, whose Radon
/// partition alternates along the curve. Two simplices overlap improperly
/// exactly when some circuit splits with its odd positions in one simplex
/// and its even positions in the other, neither half lying in the common
/// face.
inline bool improperly_intersecting(const VertexTuple& s, const VertexTuple& t,
                                    const PolytopeSpec& p) {
    if (s.size() != t.size() || static_cast<int>(s.size()) != p.delta + 1)
        throw contract_error("improperly_intersecting: need two (delta+1)-tuples");
    const VertexTuple u = merged(s, t);
    const int z = p.delta + 2;
    if (static_cast<int>(u.size()) < z) return false;

    std::vector<int> shared;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(shared));
    const VertexTuple common(shared);

    bool found = false;
    std::vector<int> idx;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (found) return;
        if (left == 0) {
            std::vector<int> odd, even; // 1-based positions within the circuit
            for (std::size_t q = 0; q < idx.size(); ++q)
                (q % 2 == 0 ? odd : even).push_back(u[static_cast<std::size_t>(idx[q])]);
            const VertexTuple oddT(odd), evenT(even);
            auto splits = [&](const VertexTuple& lo, const VertexTuple& hi) {
                return s.contains_all(lo) && t.contains_all(hi) &&
                       !common.contains_all(lo) && !common.contains_all(hi);
            };
            if (splits(oddT, evenT) || splits(evenT, oddT)) found = true;
            return;
        }
        for (std::size_t i = from;
             i < u.size() && u.size() - i >= static_cast<std::size_t>(left); ++i) {
            idx.push_back(static_cast<int>(i));
            self(self, i + 1, left - 1);
            idx.pop_back();
        }
    };
    rec(rec, 0, z);
    return found;
}

/// Independent geometric facet classification: evaluate the sign of the monic
/// supporting polynomial q(t) = prod_{y in Y} (t - y) at every remaining
/// vertex. All positive means the polytope sits above the hyperplane (lower
/// facet), all negative upper, mixed signs no facet. Must agree with
/// classify_facet everywhere; kept as a cross-validation oracle.
inline FacetClass geometric_facet_oracle(const VertexTuple& y, const PolytopeSpec& p) {
    if (static_cast<int>(y.size()) != p.delta)
        throw contract_error("geometric_facet_oracle: tuple size must equal delta");
    if (y.max_label() > p.m)
        throw contract_error("geometric_facet_oracle: label exceeds m");
    if (p.m > 12)
        throw resource_error("geometric_facet_oracle: guard m <= 12 exceeded");
    bool pos = false, neg = false;
    for (int i = 1; i <= p.m; ++i) {
        if (y.contains(i)) continue;
        BigInt q = 1;
        for (int v : y) q *= i - v;
        (q > 0 ? pos : neg) = true;
        if (pos && neg) return FacetClass::NotFacet;
    }
    return neg ? FacetClass::Upper : FacetClass::Lower;
}

} // namespace hst
