#include <gtcodes/bitvector.hpp>

#include <bit>

namespace gtcodes {

namespace {

void check_same_size(const BitVector& x, const BitVector& y, const char* op) {
    if (x.size() != y.size())
        throw DimensionError(std::string(op) + ": length mismatch (" +
                             std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()) + ")");
}

} // namespace

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw FormatError("illegal character '" + std::string(1, s[i]) +
                              "' in binary vector");
    }
    return v;
}

bool BitVector::any() const {
    for (std::uint64_t w : words_)
        if (w)
            return true;
    return false;
}

std::size_t BitVector::count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

BitVector& BitVector::operator|=(const BitVector& o) {
    check_same_size(*this, o, "or");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= o.words_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
    check_same_size(*this, o, "and");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= o.words_[i];
    return *this;
}

void BitVector::assign_or(const BitVector& x, const BitVector& y) {
    check_same_size(x, y, "or");
    size_ = x.size_;
    words_.resize(x.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] = x.words_[i] | y.words_[i];
}

void BitVector::assign_and(const BitVector& x, const BitVector& y) {
    check_same_size(x, y, "and");
    size_ = x.size_;
    words_.resize(x.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] = x.words_[i] & y.words_[i];
}

void BitVector::assign(const BitVector& x) {
    size_ = x.size_;
    words_ = x.words_;
}

void BitVector::clear() {
    for (auto& w : words_)
        w = 0;
}

BitVector operator|(const BitVector& x, const BitVector& y) {
    BitVector r;
    r.assign_or(x, y);
    return r;
}

BitVector operator&(const BitVector& x, const BitVector& y) {
    BitVector r;
    r.assign_and(x, y);
    return r;
}

BitVector inhibit(const BitVector& x, const BitVector& y) {
    check_same_size(x, y, "inhibit");
    BitVector r(x.size());
    for (std::size_t i = 0; i < r.word_count(); ++i)
        r.words_[i] = x.word(i) & ~y.word(i);
    return r;
}

bool any_and_not(const BitVector& x, const BitVector& y) {
    check_same_size(x, y, "inhibit");
    for (std::size_t i = 0; i < x.words_.size(); ++i)
        if (x.words_[i] & ~y.words_[i])
            return true;
    return false;
}

bool any_and(const BitVector& x, const BitVector& y) {
    check_same_size(x, y, "and");
    for (std::size_t i = 0; i < x.words_.size(); ++i)
        if (x.words_[i] & y.words_[i])
            return true;
    return false;
}

std::size_t hash_value(const BitVector& v) {
    // FNV-1a over the words; adequate for the result-map oracles.
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < v.word_count(); ++i) {
        h ^= v.word(i);
        h *= 1099511628211ull;
    }
    h ^= v.size();
    h *= 1099511628211ull;
    return static_cast<std::size_t>(h);
}

} // namespace gtcodes
