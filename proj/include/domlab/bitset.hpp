#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace domlab {

// Fixed-capacity dynamic bitset. Vertex sets throughout the library are stored
// as one of these, packed into 64-bit words.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int bits)
        : bits_(bits), words_(static_cast<std::size_t>((bits + 63) / 64), 0) {}

    static Bitset of(int bits, std::initializer_list<int> members) {
        Bitset s(bits);
        for (int v : members) s.set(v);
        return s;
    }

    static Bitset full(int bits) {
        Bitset s(bits);
        for (int i = 0; i < bits; ++i) s.set(i);
        return s;
    }

    int capacity() const { return bits_; }

    void set(int i) {
        assert(i >= 0 && i < bits_);
        words_[static_cast<std::size_t>(i) >> 6] |= (std::uint64_t{1} << (i & 63));
    }

    void reset(int i) {
        assert(i >= 0 && i < bits_);
        words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool test(int i) const {
        assert(i >= 0 && i < bits_);
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // set difference: this \ o
    Bitset& subtract(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset& o) const = default;

    bool intersects(const Bitset& o) const {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // lowest set bit, or -1
    int first() const { return next(-1); }

    // lowest set bit strictly above `after`, or -1
    int next(int after) const {
        int start = after + 1;
        if (start >= bits_) return -1;
        std::size_t wi = static_cast<std::size_t>(start) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64) + std::countr_zero(w);
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace domlab
