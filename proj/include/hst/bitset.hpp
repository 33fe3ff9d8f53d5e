#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "hst/errors.hpp"

namespace hst {

/// Fixed-width bitset sized at runtime; just enough for subset lattices and
/// reachability matrices at desk scale.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool none() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }

    /// Highest index set in a & b, or -1. Word-level scan from the top.
    static long top_common(const Bitset& a, const Bitset& b) {
        for (std::size_t k = a.w_.size(); k-- > 0;) {
            const std::uint64_t w = a.w_[k] & b.w_[k];
            if (w) return static_cast<long>(k * 64 + (63 - __builtin_clzll(w)));
        }
        return -1;
    }

    /// Lowest index set in a & b, or -1.
    static long bottom_common(const Bitset& a, const Bitset& b) {
        for (std::size_t k = 0; k < a.w_.size(); ++k) {
            const std::uint64_t w = a.w_[k] & b.w_[k];
            if (w) return static_cast<long>(k * 64 + __builtin_ctzll(w));
        }
        return -1;
    }

    /// (a & b) subset of c, without a temporary.
    static bool common_within(const Bitset& a, const Bitset& b, const Bitset& c) {
        for (std::size_t k = 0; k < a.w_.size(); ++k)
            if ((a.w_[k] & b.w_[k]) & ~c.w_[k]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) {
        a &= b;
        return a;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// A binary relation on {0, ..., n-1} stored row-wise: row(i).test(j) holds
/// iff i R j. Used for partial orders.
class RelationMatrix {
public:
    RelationMatrix() = default;
    explicit RelationMatrix(std::size_t n) : rows_(n, Bitset(n)) {}

    std::size_t size() const { return rows_.size(); }
    Bitset& row(std::size_t i) { return rows_[i]; }
    const Bitset& row(std::size_t i) const { return rows_[i]; }
    bool test(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    void set(std::size_t i, std::size_t j) { rows_[i].set(j); }

    /// Column view: transpose(i).test(j) iff j R i.
    RelationMatrix transposed() const {
        RelationMatrix t(size());
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                if (test(i, j)) t.set(j, i);
        return t;
    }

private:
    std::vector<Bitset> rows_;
};

} // namespace hst
