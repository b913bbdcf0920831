#include "doctest.h"

#include <gtcodes/exec.hpp>
#include <gtcodes/galois.hpp>

using namespace gtcodes;

namespace {

// Test-side polynomial arithmetic: multiplies two residues digit by digit and
// reduces by the modulus, without touching the field's tables.
std::uint32_t slow_mul(const Field& f, std::uint32_t a, std::uint32_t b) {
    const std::uint32_t p = f.characteristic(), m = f.degree();
    std::vector<std::uint32_t> da(m, 0), db(m, 0), prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i, a /= p, b /= p) {
        da[i] = a % p;
        db[i] = b % p;
    }
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& mod = f.modulus();
    for (std::uint32_t i = 2 * m; i-- > m;) {
        std::uint32_t factor = prod[i];
        if (!factor)
            continue;
        for (std::uint32_t j = 0; j <= m; ++j) {
            std::uint32_t& slot = prod[i - m + j];
            slot = (slot + p * factor - factor * mod[j] % p) % p;
        }
    }
    std::uint32_t r = 0;
    for (std::uint32_t i = m; i-- > 0;)
        r = r * p + prod[i];
    return r;
}

std::uint32_t square_multiply(const Field& f, std::uint32_t a,
                              std::uint64_t e) {
    std::uint32_t acc = 1;
    while (e) {
        if (e & 1)
            acc = f.mul(acc, a);
        a = f.mul(a, a);
        e >>= 1;
    }
    return acc;
}

} // namespace

TEST_CASE("prime fields behave like modular arithmetic") {
    Field f(5);
    CHECK(f.characteristic() == 5);
    CHECK(f.degree() == 1);
    CHECK(f.add(3, 4) == 2);
    CHECK(f.mul(3, 4) == 2);
    CHECK(f.sub(1, 3) == 3);
    CHECK(f.neg(2) == 3);
    CHECK(f.inv(1) == 1);
    CHECK(f.mul(f.inv(3), 3) == 1);
}

TEST_CASE("GF(4) uses x^2+x+1 and alpha * alpha = alpha + 1") {
    Field f(4);
    CHECK(f.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    // alpha is the class of x, canonical value 2; alpha + 1 has value 3.
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.add(2, 1) == 3);
    CHECK(f.add(2, 2) == 0);
}

TEST_CASE("default moduli are the standard small choices") {
    CHECK(Field(8).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(Field(16).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(Field(9).modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("non prime powers and oversized orders are rejected") {
    CHECK_THROWS_AS(Field(6), DomainError);
    CHECK_THROWS_AS(Field(12), DomainError);
    CHECK_THROWS_AS(Field(1), DomainError);
    CHECK_THROWS_AS(Field(0), DomainError);
    CHECK_THROWS_AS(Field(65537), DomainError);
    CHECK_THROWS_AS(Field(100000), DomainError);
    CHECK_NOTHROW(Field(65536));

    std::uint32_t p = 0, m = 0;
    CHECK(prime_power(49, p, m));
    CHECK(p == 7);
    CHECK(m == 2);
    CHECK_FALSE(prime_power(10, p, m));
}

TEST_CASE("table multiplication matches polynomial multiplication") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 27u}) {
        Field f(q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                CHECK(f.mul(a, b) == slow_mul(f, a, b));
    }
}

TEST_CASE("field axioms hold") {
    SUBCASE("exhaustively for q <= 16") {
        for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
            Field f(q);
            for (std::uint32_t a = 0; a < q; ++a) {
                for (std::uint32_t b = 0; b < q; ++b) {
                    CHECK(f.add(a, b) == f.add(b, a));
                    CHECK(f.mul(a, b) == f.mul(b, a));
                    for (std::uint32_t c = 0; c < q; ++c) {
                        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                        CHECK(f.mul(a, f.add(b, c)) ==
                              f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                if (a)
                    CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.add(a, f.neg(a)) == 0);
            }
        }
    }
    SUBCASE("randomized for larger q") {
        exec::SplitMix64 rng(3);
        for (std::uint32_t q : {25u, 32u, 64u, 81u, 121u, 128u, 243u, 256u,
                                1024u, 65536u}) {
            Field f(q);
            for (int trial = 0; trial < 200; ++trial) {
                auto a = static_cast<std::uint32_t>(rng.bounded(q));
                auto b = static_cast<std::uint32_t>(rng.bounded(q));
                auto c = static_cast<std::uint32_t>(rng.bounded(q));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) ==
                      f.add(f.mul(a, b), f.mul(a, c)));
                if (a)
                    CHECK(f.mul(a, f.inv(a)) == 1);
            }
        }
    }
}

TEST_CASE("a^q = a for every element, q <= 256") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u,
                            49u, 64u, 81u, 128u, 243u, 256u}) {
        Field f(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(square_multiply(f, a, q) == a);
            CHECK(f.pow(a, q) == a);
        }
    }
}

TEST_CASE("every nonzero element has full-order generator behaviour") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 64u}) {
        Field f(q);
        for (std::uint32_t g = 1; g < q; ++g)
            CHECK(square_multiply(f, g, q - 1) == 1);
    }
}

TEST_CASE("inverse of zero is rejected") {
    Field f(7);
    CHECK_THROWS_AS(f.inv(0), DomainError);
    CHECK_THROWS_AS(f.add(7, 1), DomainError);
}

TEST_CASE("polynomial evaluation") {
    Field f(5);
    std::vector<std::uint32_t> constant{3};
    std::vector<std::uint32_t> ident{0, 1};
    std::vector<std::uint32_t> poly{1, 2, 3};
    for (std::uint32_t x = 0; x < 5; ++x) {
        CHECK(f.eval_poly(constant, x) == 3);
        CHECK(f.eval_poly(ident, x) == x);
    }
    // 1 + 2*2 + 3*4 = 17 = 2 (mod 5)
    CHECK(f.eval_poly(poly, 2) == 2);
    CHECK(f.eval_poly({}, 3) == 0);
}

TEST_CASE("field elements reject mixed-field arithmetic") {
    Field f5(5), f7(7), f5b(5);
    FieldElement a(f5, 3), b(f7, 3), c(f5b, 4);
    CHECK_THROWS_AS(a + b, DomainError);
    CHECK((a + c).value() == 2); // same mathematical field, distinct objects
    CHECK((a * c).value() == 2);
    CHECK((-a).value() == 2);
    CHECK(a.inv().value() == 2);
    CHECK_THROWS_AS(FieldElement(f5, 5), DomainError);
}
