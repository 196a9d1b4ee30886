#ifndef DCOC_VERTEX_SET_HPP
#define DCOC_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dcoc {

// Fixed-capacity set over vertices 0..n-1 backed by 64-bit words.
// Membership is O(1); union/intersection/difference are word-parallel.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int capacity)
        : n_(capacity), words_((static_cast<size_t>(capacity) + 63) / 64, 0) {
        assert(capacity >= 0);
    }

    static VertexSet full(int capacity) {
        VertexSet v(capacity);
        for (auto& w : v.words_) w = ~uint64_t{0};
        v.trim();
        return v;
    }

    static VertexSet of(int capacity, std::initializer_list<int> verts) {
        VertexSet v(capacity);
        for (int x : verts) v.set(x);
        return v;
    }

    template <class Container>
    static VertexSet from(int capacity, const Container& verts) {
        VertexSet v(capacity);
        for (int x : verts) v.set(x);
        return v;
    }

    int capacity() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[static_cast<size_t>(v) >> 6] |= uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const {
        assert(n_ == other.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        assert(n_ == other.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    int count_and(const VertexSet& other) const {
        assert(n_ == other.n_);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    // complement within 0..n-1
    VertexSet operator~() const {
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // lowest member, or -1 when empty
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    const std::vector<uint64_t>& words() const { return words_; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    // canonical word-lexicographic order, used wherever triples are sorted
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        return a.words_ < b.words_;
    }

private:
    void trim() {
        if (n_ & 63) words_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
        if (n_ == 0 && !words_.empty()) words_.back() = 0;
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace dcoc

#endif
