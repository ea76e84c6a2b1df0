#pragma once

// Fixed-width dynamic bitset used as the carrier of complex-algebra elements.

#include <cstdint>
#include <cstddef>
#include <vector>
#include <functional>

namespace pea {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits, bool fill = false)
        : nbits_(nbits), words_((nbits + 63) / 64, fill ? ~0ull : 0ull) {
        trim();
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= (1ull << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
    void assign(std::size_t i, bool v) { if (v) set(i); else reset(i); }

    void clear() { for (auto& w : words_) w = 0; }
    void fill() { for (auto& w : words_) w = ~0ull; trim(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool none() const {
        for (auto w : words_) if (w) return false;
        return true;
    }
    bool any() const { return !none(); }
    bool all() const {
        Bitset t(nbits_, true);
        return *this == t;
    }

    Bitset& operator|=(const Bitset& o) { bin(o, [](uint64_t& a, uint64_t b) { a |= b; }); return *this; }
    Bitset& operator&=(const Bitset& o) { bin(o, [](uint64_t& a, uint64_t b) { a &= b; }); return *this; }
    Bitset& operator^=(const Bitset& o) { bin(o, [](uint64_t& a, uint64_t b) { a ^= b; }); return *this; }
    Bitset& subtract(const Bitset& o) { bin(o, [](uint64_t& a, uint64_t b) { a &= ~b; }); return *this; }

    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator^(Bitset a, const Bitset& b) { a ^= b; return a; }
    Bitset operator~() const {
        Bitset r(*this);
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    // first set bit, or size() if none
    std::size_t find_first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return (k << 6) + static_cast<std::size_t>(__builtin_ctzll(words_[k]));
        return nbits_;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            uint64_t w = words_[k];
            while (w) {
                uint64_t lsb = w & (~w + 1);
                f((k << 6) + static_cast<std::size_t>(__builtin_ctzll(lsb)));
                w ^= lsb;
            }
        }
    }

    std::vector<uint32_t> to_vector() const {
        std::vector<uint32_t> v;
        v.reserve(count());
        for_each([&](std::size_t i) { v.push_back(static_cast<uint32_t>(i)); });
        return v;
    }

    uint64_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    template <typename Op>
    void bin(const Bitset& o, Op op) {
        for (std::size_t k = 0; k < words_.size(); ++k) op(words_[k], o.words_[k]);
    }
    void trim() {
        if (nbits_ & 63) words_.back() &= (1ull << (nbits_ & 63)) - 1;
        if (nbits_ == 0) words_.clear();
    }

    std::size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace pea
