#pragma once

// Packed bit vectors over F2.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tc3 {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : words_((n + 63) / 64, 0), size_(n) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool v = true) {
        auto m = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= m;
        else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    // parity of |a & b|
    bool dot(const BitVec& o) const {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
        return std::popcount(acc) & 1;
    }
    // lowest set index or size() when zero
    std::size_t lowest() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return size_;
    }
    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

// Rank by Gaussian elimination; rows are consumed.
std::size_t f2_rank(std::vector<BitVec> rows);

}  // namespace tc3
