#include <gtcodes/galois.hpp>

namespace gtcodes {

namespace {

using Poly = std::vector<std::uint32_t>; // coefficient i of x^i, mod p

std::uint32_t poly_degree(const Poly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i])
            return static_cast<std::uint32_t>(i);
    return 0;
}

// Remainder of a mod b over GF(p); b must be monic with positive degree.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    const std::uint32_t db = poly_degree(b);
    for (std::size_t i = a.size(); i-- > db;) {
        if (!a[i])
            continue;
        std::uint32_t factor = a[i];
        for (std::uint32_t j = 0; j <= db; ++j) {
            std::uint64_t sub = std::uint64_t(factor) * b[j];
            a[i - db + j] =
                static_cast<std::uint32_t>((a[i - db + j] + p * sub - sub) % p);
        }
    }
    a.resize(db);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    return r;
}

bool poly_is_zero(const Poly& a) {
    for (auto c : a)
        if (c)
            return false;
    return true;
}

// Decodes the canonical integer of a degree < m residue into digits base p.
Poly decode(std::uint32_t value, std::uint32_t p, std::uint32_t m) {
    Poly a(m, 0);
    for (std::uint32_t i = 0; i < m && value; ++i) {
        a[i] = value % p;
        value /= p;
    }
    return a;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        v = v * p + a[i];
    return v;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool irreducible(const Poly& candidate, std::uint32_t p, std::uint32_t m) {
    for (std::uint32_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            Poly divisor = decode(static_cast<std::uint32_t>(enc), p, d);
            divisor.resize(d + 1);
            divisor[d] = 1;
            if (poly_is_zero(poly_mod(candidate, divisor, p)))
                return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t f = 2; std::uint64_t(f) * f <= n; ++f) {
        if (n % f == 0) {
            fs.push_back(f);
            while (n % f == 0)
                n /= f;
        }
    }
    if (n > 1)
        fs.push_back(n);
    return fs;
}

} // namespace

bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m) {
    if (q < 2)
        return false;
    std::uint32_t base = q;
    for (std::uint32_t f = 2; std::uint64_t(f) * f <= q; ++f) {
        if (q % f == 0) {
            base = f;
            break;
        }
    }
    std::uint32_t v = q;
    m = 0;
    while (v % base == 0) {
        v /= base;
        ++m;
    }
    if (v != 1)
        return false;
    p = base;
    return true;
}

Field::Field(std::uint32_t q) : q_(q) {
    if (q > 65536)
        throw DomainError("field order above 2^16 is unsupported");
    if (!prime_power(q, p_, m_))
        throw DomainError(std::to_string(q) + " is not a prime power");

    if (m_ == 1) {
        modulus_ = {0, 1};
    } else {
        // Smallest non-leading coefficient block that yields an irreducible.
        for (std::uint32_t enc = 0;; ++enc) {
            if (enc >= q_)
                throw DomainError("no irreducible modulus found"); // unreachable
            Poly cand = decode(enc, p_, m_);
            cand.resize(m_ + 1);
            cand[m_] = 1;
            if (irreducible(cand, p_, m_)) {
                modulus_ = cand;
                break;
            }
        }
    }

    // Multiplication table bootstrap: polynomial products reduced by the
    // modulus, used only while searching the generator and filling exp/log.
    auto slow_mul = [this](std::uint32_t a, std::uint32_t b) {
        if (a == 0 || b == 0)
            return 0u;
        if (m_ == 1)
            return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
        Poly prod = poly_mul(decode(a, p_, m_), decode(b, p_, m_), p_);
        return encode(poly_mod(prod, modulus_, p_), p_);
    };

    auto order_is_full = [&](std::uint32_t g) {
        for (std::uint32_t f : prime_factors(q_ - 1)) {
            std::uint64_t e = (q_ - 1) / f;
            std::uint32_t acc = 1, base = g;
            while (e) {
                if (e & 1)
                    acc = slow_mul(acc, base);
                base = slow_mul(base, base);
                e >>= 1;
            }
            if (acc == 1)
                return false;
        }
        return true;
    };

    generator_ = 1;
    if (q_ > 2)
        for (generator_ = 2; !order_is_full(generator_); ++generator_) { }

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = v;
        log_[v] = i;
        v = slow_mul(v, generator_);
    }
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    check(a), check(b);
    if (m_ == 1)
        return (a + b) % p_;
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

std::uint32_t Field::neg(std::uint32_t a) const {
    check(a);
    if (m_ == 1)
        return a ? p_ - a : 0;
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t d = a % p_;
        r += (d ? p_ - d : 0) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    check(a), check(b);
    if (a == 0 || b == 0)
        return 0;
    std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
    return exp_[e % (q_ - 1)];
}

std::uint32_t Field::inv(std::uint32_t a) const {
    check(a);
    if (a == 0)
        throw DomainError("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    check(a);
    if (a == 0)
        return e == 0 ? 1 : 0;
    return exp_[static_cast<std::uint32_t>(std::uint64_t(log_[a]) * (e % (q_ - 1)) % (q_ - 1))];
}

std::uint32_t Field::eval_poly(std::span<const std::uint32_t> coeffs,
                               std::uint32_t x) const {
    check(x);
    std::uint32_t r = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        r = add(mul(r, x), coeffs[i]);
    return r;
}

} // namespace gtcodes
