#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "wcg/errors.hpp"

namespace wcg {

using Vertex = int;

/// A subset of {0, ..., universe-1}, stored as a packed bitset.
///
/// Ordering (operator<=>) compares the sorted member lists lexicographically,
/// so {0,2} < {1} and {0} < {0,1}. Sets over different universes compare by
/// universe first.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
        : VertexSet(universe) {
        for (Vertex v : members) insert(v);
    }

    template <typename Range>
    static VertexSet from_range(std::size_t universe, const Range& members) {
        VertexSet s(universe);
        for (auto v : members) s.insert(static_cast<Vertex>(v));
        return s;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v) s.set_bit(v);
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept {
        if (v < 0 || static_cast<std::size_t>(v) >= universe_) return false;
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(Vertex v) {
        check(v);
        set_bit(static_cast<std::size_t>(v));
    }

    void erase(Vertex v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    /// Smallest member, or -1 when empty.
    Vertex first() const noexcept { return next(0); }

    /// Smallest member >= from, or -1.
    Vertex next(Vertex from) const noexcept {
        if (from < 0) from = 0;
        std::size_t i = static_cast<std::size_t>(from);
        if (i >= universe_) return -1;
        std::size_t w = i >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (word != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(word));
            if (++w == words_.size()) return -1;
            word = words_[w];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                fn(static_cast<Vertex>(w * 64 + std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    bool intersects(const VertexSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement within the universe.
    VertexSet complement() const { return full(universe_) - *this; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
        Vertex x = a.first(), y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y) return x <=> y;
            x = a.next(x + 1);
            y = b.next(y + 1);
        }
        if (x < 0 && y < 0) return std::strong_ordering::equal;
        return x < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    /// "{0,2,5}"
    std::string to_string() const {
        std::string s = "{";
        bool first_member = true;
        for_each([&](Vertex v) {
            if (!first_member) s += ',';
            s += std::to_string(v);
            first_member = false;
        });
        return s + "}";
    }

private:
    void set_bit(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }

    void check(Vertex v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= universe_)
            throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                             std::to_string(universe_) + ")");
    }

    void same_universe(const VertexSet& o) const {
        if (o.universe_ != universe_)
            throw InputError("vertex sets over different universes (" + std::to_string(universe_) +
                             " vs " + std::to_string(o.universe_) + ")");
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace wcg
