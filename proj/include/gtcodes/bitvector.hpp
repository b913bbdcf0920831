#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gtcodes/error.hpp>

namespace gtcodes {

/// Fixed-length binary vector stored 64 bits per word.
///
/// Values are conceptually immutable once filled in; the boolean operations
/// below run word-parallel, so OR/AND/covers over length-L vectors cost
/// O(L/64).
class BitVector {
  public:
    BitVector() = default;

    /// All-zero vector of the given length.
    explicit BitVector(std::size_t n)
        : size_(n), words_((n + 63) / 64, 0) { }

    /// Parses a string of '0'/'1' characters.
    static BitVector from_string(std::string_view s);

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i, bool v) {
        if (v)
            words_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;

    std::string to_string() const;

    BitVector& operator|=(const BitVector& o);
    BitVector& operator&=(const BitVector& o);

    /// Overwrites this vector with x | y (no allocation when sizes match).
    void assign_or(const BitVector& x, const BitVector& y);
    /// Overwrites this vector with x & y.
    void assign_and(const BitVector& x, const BitVector& y);
    /// Overwrites this vector with a copy of x.
    void assign(const BitVector& x);
    void clear();

    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t i) const { return words_[i]; }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

  private:
    friend bool any_and_not(const BitVector&, const BitVector&);
    friend bool any_and(const BitVector&, const BitVector&);
    friend BitVector inhibit(const BitVector&, const BitVector&);

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Componentwise disjunction; lengths must match.
BitVector operator|(const BitVector& x, const BitVector& y);
/// Componentwise conjunction; lengths must match.
BitVector operator&(const BitVector& x, const BitVector& y);

/// Componentwise inhibition: bit n is 1 iff x_n = 1 and y_n = 0.
BitVector inhibit(const BitVector& x, const BitVector& y);

/// True iff some component has x_n = 1 and y_n = 0, i.e. inhibit(x, y) != 0,
/// without materializing the result. Early-exits on the first such word.
bool any_and_not(const BitVector& x, const BitVector& y);

/// True iff x and y share a 1 component.
bool any_and(const BitVector& x, const BitVector& y);

/// True iff x covers y, i.e. x | y == x.
inline bool covers(const BitVector& x, const BitVector& y) {
    if (x.size() != y.size())
        throw DimensionError("covers: length mismatch");
    return !any_and_not(y, x);
}

std::size_t hash_value(const BitVector& v);

} // namespace gtcodes
