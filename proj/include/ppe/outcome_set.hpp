#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace ppe {

// Set of outcomes of one game, indexed by the tree's dense outcome index.
// All sets derived from the same tree share the same universe size, so the
// bitwise operators below never have to reconcile widths.
class OutcomeSet {
public:
    OutcomeSet() = default;

    explicit OutcomeSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static OutcomeSet all(int universe) {
        OutcomeSet s(universe);
        for (int i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    int universe() const { return universe_; }

    void insert(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void erase(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool contains(int i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int n = 0;
        for (auto w : words_) n += popcount(w);
        return n;
    }

    OutcomeSet& operator&=(const OutcomeSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    OutcomeSet& operator|=(const OutcomeSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    // set difference
    OutcomeSet& operator-=(const OutcomeSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend OutcomeSet operator&(OutcomeSet a, const OutcomeSet& b) { return a &= b; }
    friend OutcomeSet operator|(OutcomeSet a, const OutcomeSet& b) { return a |= b; }
    friend OutcomeSet operator-(OutcomeSet a, const OutcomeSet& b) { return a -= b; }

    bool operator==(const OutcomeSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }
    bool operator!=(const OutcomeSet& o) const { return !(*this == o); }

    bool is_subset_of(const OutcomeSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Visits members in ascending index order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = lowest_bit(bits);
                f(static_cast<int>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

private:
    static int popcount(std::uint64_t w) {
        int n = 0;
        while (w) {
            w &= w - 1;
            ++n;
        }
        return n;
    }

    static int lowest_bit(std::uint64_t w) {
        int b = 0;
        while (!(w & 1)) {
            w >>= 1;
            ++b;
        }
        return b;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct OutcomeSetHash {
    std::size_t operator()(const OutcomeSet& s) const { return s.hash(); }
};

} // namespace ppe
