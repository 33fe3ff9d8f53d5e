#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hst/errors.hpp"

namespace hst {

/// A strictly increasing tuple of 1-based vertex labels.
///
/// Tuples are the universal currency of the library: a (k+1)-tuple names a
/// k-simplex on the vertices of a cyclic polytope, and equally names an
/// indecomposable module of a higher Auslander algebra. Ordering is
/// lexicographic, which is the canonical order for all serialized output.
class VertexTuple {
public:
    VertexTuple() = default;

    explicit VertexTuple(std::vector<int> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] < 1)
                throw contract_error("VertexTuple: labels are 1-based, got " +
                                     std::to_string(entries_[i]));
            if (i > 0 && entries_[i] <= entries_[i - 1])
                throw contract_error("VertexTuple: entries must be strictly increasing");
        }
    }

    VertexTuple(std::initializer_list<int> entries)
        : VertexTuple(std::vector<int>(entries)) {}

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int front() const { return entries_.front(); }
    int back() const { return entries_.back(); }

    const std::vector<int>& entries() const { return entries_; }
    std::vector<int>::const_iterator begin() const { return entries_.begin(); }
    std::vector<int>::const_iterator end() const { return entries_.end(); }

    bool contains(int v) const {
        return std::binary_search(entries_.begin(), entries_.end(), v);
    }

    /// Subset test; both tuples are sorted so a linear merge walk suffices.
    bool contains_all(const VertexTuple& other) const {
        return std::includes(entries_.begin(), entries_.end(),
                             other.entries_.begin(), other.entries_.end());
    }

    /// Maximum label, 0 for the empty tuple.
    int max_label() const { return entries_.empty() ? 0 : entries_.back(); }

    /// Sorted union of two tuples.
    friend VertexTuple merged(const VertexTuple& a, const VertexTuple& b) {
        std::vector<int> out;
        out.reserve(a.size() + b.size());
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return VertexTuple(std::move(out));
    }

    /// Compact rendering: "135" while labels fit one digit, "1.3.11" otherwise.
    std::string str() const {
        std::ostringstream os;
        const bool wide = max_label() > 9;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (wide && i > 0) os << '.';
            os << entries_[i];
        }
        return os.str();
    }

    friend auto operator<=>(const VertexTuple&, const VertexTuple&) = default;

private:
    std::vector<int> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const VertexTuple& t) {
    return os << t.str();
}

/// The intertwining relation A ≀ B: a0 < b0 < a1 < b1 < ... < ad < bd.
/// Irreflexive and antisymmetric on tuples of equal length.
inline bool intertwines(const VertexTuple& a, const VertexTuple& b) {
    if (a.size() != b.size())
        throw contract_error("intertwines: tuples must have equal length");
    if (a.empty()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] < b[i])) return false;
        if (i + 1 < a.size() && !(b[i] < a[i + 1])) return false;
    }
    return true;
}

/// Symmetric closure of `intertwines`.
inline bool are_intertwining(const VertexTuple& a, const VertexTuple& b) {
    return intertwines(a, b) || intertwines(b, a);
}

/// The two index-set families parameterizing indecomposables.
enum class IndexSetKind {
    Separated,       // consecutive gaps >= 2
    CyclicSeparated, // additionally a_d + 2 <= a_0 + m
};

/// All increasing (d+1)-tuples in [m] with consecutive gaps >= 2, optionally
/// with the cyclic gap condition as well. Output is lexicographically sorted.
inline std::vector<VertexTuple> enumerate_index_set(int m, int d, IndexSetKind kind) {
    if (m < 1 || d < 0)
        throw contract_error("enumerate_index_set: need m >= 1 and d >= 0");
    std::vector<VertexTuple> out;
    std::vector<int> cur(static_cast<std::size_t>(d) + 1);
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == d + 1) {
            if (kind == IndexSetKind::CyclicSeparated && !(cur.back() + 2 <= cur.front() + m))
                return;
            out.emplace_back(cur);
            return;
        }
        for (int v = low; v <= m; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v + 2);
        }
    };
    rec(rec, 0, 1);
    return out;
}

/// True iff no ordered pair of distinct members intertwines.
inline bool is_compatible_collection(const std::vector<VertexTuple>& tuples) {
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = i + 1; j < tuples.size(); ++j)
            if (are_intertwining(tuples[i], tuples[j])) return false;
    return true;
}

namespace detail {

/// Sorts and deduplicates a tuple collection into canonical form.
inline std::vector<VertexTuple> canonicalized(std::vector<VertexTuple> tuples) {
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    return tuples;
}

/// Membership in a sorted tuple list.
inline bool sorted_contains(const std::vector<VertexTuple>& sorted, const VertexTuple& t) {
    return std::binary_search(sorted.begin(), sorted.end(), t);
}

/// Subset test on sorted tuple lists.
inline bool sorted_includes(const std::vector<VertexTuple>& outer,
                            const std::vector<VertexTuple>& inner) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

} // namespace detail

} // namespace hst
