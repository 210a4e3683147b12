#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace locdim {

// Fixed-universe bitset over indices 0..universe-1. Carries vertex sets,
// per-vertex edge-coverage masks, and anything else keyed by small dense ids.
class BitSet {
public:
    BitSet() = default;
    explicit BitSet(int universe)
        : universe_(universe), words_(static_cast<size_t>((universe + 63) / 64), 0) {}

    static BitSet of(int universe, std::initializer_list<int> members) {
        BitSet s(universe);
        for (int m : members) s.add(m);
        return s;
    }

    static BitSet full(int universe) {
        BitSet s(universe);
        for (int i = 0; i < universe; ++i) s.add(i);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int i) const {
        check_index(i);
        return (words_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1u;
    }

    void add(int i) {
        check_index(i);
        words_[static_cast<size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }

    void remove(int i) {
        check_index(i);
        words_[static_cast<size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const BitSet& o) const {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const BitSet& o) const {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    BitSet& operator|=(const BitSet& o) {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    BitSet& operator&=(const BitSet& o) {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }

    // Members of this set not in o.
    BitSet minus(const BitSet& o) const {
        check_same(o);
        BitSet r(*this);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }

    bool operator==(const BitSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<size_t>(size()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    int first() const {
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<int>(w * 64) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= universe_) throw std::out_of_range("BitSet index out of range");
    }
    void check_same(const BitSet& o) const {
        if (universe_ != o.universe_) throw std::logic_error("BitSet universe mismatch");
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

using VertexSet = BitSet;

}  // namespace locdim
