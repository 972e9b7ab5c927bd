#ifndef STRONGPROD_BITSET_HPP
#define STRONGPROD_BITSET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace strongprod {

// Fixed-capacity set of small non-negative integers backed by `Words`
// 64-bit words. With Words == 1 every operation compiles down to a single
// machine word, which is the common case for graphs with at most 64 vertices.
template <std::size_t Words>
class bit_set {
public:
    static constexpr std::size_t words = Words;
    static constexpr int capacity = static_cast<int>(64 * Words);

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        iterator() = default;
        iterator(const bit_set* s, int pos) : set_(s), pos_(pos) {}

        int operator*() const { return pos_; }
        iterator& operator++()
        {
            pos_ = set_->next(pos_ + 1);
            return *this;
        }
        iterator operator++(int)
        {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const iterator& o) const { return pos_ == o.pos_; }

    private:
        const bit_set* set_ = nullptr;
        int pos_ = capacity;
    };

    constexpr bit_set() = default;
    bit_set(std::initializer_list<int> members)
    {
        for (int v : members)
            insert(v);
    }

    // {0, ..., n-1}
    static bit_set prefix(int n)
    {
        bit_set s;
        for (std::size_t w = 0; w < Words && n > 0; ++w, n -= 64)
            s.w_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    static bit_set singleton(int v)
    {
        bit_set s;
        s.insert(v);
        return s;
    }

    template <class Range>
    static bit_set from_range(const Range& r)
    {
        bit_set s;
        for (int v : r)
            s.insert(v);
        return s;
    }

    void insert(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }

    int size() const
    {
        int c = 0;
        for (auto w : w_)
            c += std::popcount(w);
        return c;
    }
    bool empty() const
    {
        for (auto w : w_)
            if (w)
                return false;
        return true;
    }
    bool any() const { return !empty(); }

    // Smallest member >= from, or capacity.
    int next(int from) const
    {
        if (from >= capacity)
            return capacity;
        std::size_t wi = static_cast<std::size_t>(from >> 6);
        std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur)
                return static_cast<int>(wi * 64) + std::countr_zero(cur);
            if (++wi == Words)
                return capacity;
            cur = w_[wi];
        }
    }
    int first() const { return next(0); }
    // Largest member, or -1.
    int last() const
    {
        for (std::size_t wi = Words; wi-- > 0;)
            if (w_[wi])
                return static_cast<int>(wi * 64) + 63 - std::countl_zero(w_[wi]);
        return -1;
    }

    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, capacity); }

    std::vector<int> to_vector() const { return std::vector<int>(begin(), end()); }

    bool intersects(const bit_set& o) const
    {
        for (std::size_t i = 0; i < Words; ++i)
            if (w_[i] & o.w_[i])
                return true;
        return false;
    }
    bool is_subset_of(const bit_set& o) const
    {
        for (std::size_t i = 0; i < Words; ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }

    bit_set& operator|=(const bit_set& o)
    {
        for (std::size_t i = 0; i < Words; ++i)
            w_[i] |= o.w_[i];
        return *this;
    }
    bit_set& operator&=(const bit_set& o)
    {
        for (std::size_t i = 0; i < Words; ++i)
            w_[i] &= o.w_[i];
        return *this;
    }
    bit_set& operator-=(const bit_set& o)
    {
        for (std::size_t i = 0; i < Words; ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }
    bit_set& operator^=(const bit_set& o)
    {
        for (std::size_t i = 0; i < Words; ++i)
            w_[i] ^= o.w_[i];
        return *this;
    }
    friend bit_set operator|(bit_set a, const bit_set& b) { return a |= b; }
    friend bit_set operator&(bit_set a, const bit_set& b) { return a &= b; }
    friend bit_set operator-(bit_set a, const bit_set& b) { return a -= b; }
    friend bit_set operator^(bit_set a, const bit_set& b) { return a ^= b; }

    friend bool operator==(const bit_set&, const bit_set&) = default;

    // Lexicographic order on the ascending member sequences.
    friend bool lex_less(const bit_set& a, const bit_set& b)
    {
        auto ia = a.begin(), ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
            if (*ia != *ib)
                return *ia < *ib;
        return ia == a.end() && ib != b.end();
    }

    std::uint64_t word(std::size_t i) const { return w_[i]; }

private:
    std::array<std::uint64_t, Words> w_{};
};

// Smallest word count able to hold `n` members.
constexpr std::size_t words_for(int n) { return n <= 64 ? 1 : static_cast<std::size_t>((n + 63) / 64); }

} // namespace strongprod

#endif // STRONGPROD_BITSET_HPP
