#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pgdual {

/// Dynamic bitset sized at construction. Element ids are bit indices.
/// Trailing bits past size() are kept zero, so whole-word comparison is valid.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits), words_(word_count(nbits), 0) {}

    static Bitset all(int nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    static Bitset of(int nbits, std::initializer_list<int> ids) {
        Bitset b(nbits);
        for (int i : ids) b.set(i);
        return b;
    }

    int size() const { return nbits_; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    bool is_singleton() const { return count() == 1; }

    /// Index of the lowest set bit, or -1 when empty.
    int first() const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] != 0) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
        }
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                f(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> ids() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    Bitset& operator&=(const Bitset& other) {
        assert(nbits_ == other.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }

    Bitset& operator|=(const Bitset& other) {
        assert(nbits_ == other.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) {
        a &= b;
        return a;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) {
        a |= b;
        return a;
    }

    /// True when every bit of `other` is set here too.
    bool contains_all(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if ((other.words_[k] & ~words_[k]) != 0) return false;
        }
        return true;
    }

    bool intersects(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if ((words_[k] & other.words_[k]) != 0) return true;
        }
        return false;
    }

    bool operator==(const Bitset& other) const {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }

    bool operator!=(const Bitset& other) const { return !(*this == other); }

    /// Lexicographic order on the ascending id sequences, so {0,1,7} < {0,2,3}
    /// and a proper prefix sorts first.
    bool lex_less(const Bitset& other) const {
        auto a = ids();
        auto b = other.ids();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }

private:
    static std::size_t word_count(int nbits) {
        return (static_cast<std::size_t>(nbits) + 63) / 64;
    }

    void trim() {
        int tail = nbits_ & 63;
        if (tail != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << tail) - 1;
        }
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace pgdual
