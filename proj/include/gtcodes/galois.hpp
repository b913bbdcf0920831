#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gtcodes/error.hpp>

namespace gtcodes {

/// Finite field GF(q) for a prime power q = p^m, 2 <= q <= 2^16.
///
/// Elements are canonical integers 0..q-1 encoding polynomial residues in
/// base p (digit i is the coefficient of x^i). The reduction modulus is the
/// lexicographically smallest monic irreducible of degree m over GF(p),
/// "smallest" meaning the smallest canonical integer of its non-leading
/// coefficients; for GF(4), GF(8), GF(16) this gives the usual x^2+x+1,
/// x^3+x+1, x^4+x+1. Multiplication uses log/antilog tables over the
/// smallest generator, so all arithmetic is O(1) after construction.
class Field {
  public:
    explicit Field(std::uint32_t q);

    std::uint32_t order() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }

    /// Modulus coefficients c_0..c_m with c_m = 1 (prime fields return x - 0,
    /// i.e. {0, 1}, and never reduce by it).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    /// Smallest canonical integer generating the multiplicative group.
    std::uint32_t generator() const { return generator_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// Horner evaluation of sum_i coeffs[i] * x^i.
    std::uint32_t eval_poly(std::span<const std::uint32_t> coeffs,
                            std::uint32_t x) const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.q_ == b.q_ && a.modulus_ == b.modulus_;
    }

  private:
    void check(std::uint32_t a) const {
        if (a >= q_)
            throw DomainError("element value out of field range");
    }

    std::uint32_t q_, p_, m_;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_; // exp_[i] = g^i, i in 0..q-2
    std::vector<std::uint32_t> log_; // log_[exp_[i]] = i
};

/// Element of a specific field; arithmetic checks that operands agree.
class FieldElement {
  public:
    FieldElement(const Field& field, std::uint32_t value)
        : field_(&field), value_(value) {
        if (value >= field.order())
            throw DomainError("element value out of field range");
    }

    std::uint32_t value() const { return value_; }
    const Field& field() const { return *field_; }

    FieldElement inv() const { return {*field_, field_->inv(value_)}; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        return {a.same(b), a.field_->add(a.value_, b.value_)};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        return {a.same(b), a.field_->sub(a.value_, b.value_)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        return {a.same(b), a.field_->mul(a.value_, b.value_)};
    }
    friend FieldElement operator-(FieldElement a) {
        return {*a.field_, a.field_->neg(a.value_)};
    }
    friend bool operator==(FieldElement a, FieldElement b) {
        return a.same(b), a.value_ == b.value_;
    }

  private:
    const Field& same(const FieldElement& other) const {
        if (!(*field_ == *other.field_))
            throw DomainError("elements belong to different fields");
        return *field_;
    }

    const Field* field_;
    std::uint32_t value_;
};

/// Factors q as p^m; returns false when q is not a prime power >= 2.
bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m);

} // namespace gtcodes
