#include "doctest.h"

#include <set>

#include <gtcodes/construct.hpp>
#include <gtcodes/models.hpp>

#include "testutil.hpp"

using namespace gtcodes;

namespace {

DefectiveSet ds(std::uint32_t t, IndexSet members) {
    return DefectiveSet::make(t, std::move(members));
}

// Independent antichain counter: filters all <= s element subsets of the part
// universe, with parts and subset tests done on bitmasks.
std::uint64_t brute_antichain_count(std::uint32_t t, std::uint32_t s,
                                    std::uint32_t l) {
    std::vector<std::uint32_t> parts;
    for (std::uint32_t mask = 1; mask < (1u << t); ++mask)
        if (static_cast<std::uint32_t>(__builtin_popcount(mask)) <= l)
            parts.push_back(mask);
    std::uint64_t count = 1; // the empty complex
    // Subsets of the universe by rank vector; s is tiny here, so recurse.
    auto rec = [&](auto&& self, std::size_t start,
                   std::vector<std::uint32_t>& chosen) -> void {
        if (chosen.size() == s)
            return;
        for (std::size_t i = start; i < parts.size(); ++i) {
            bool ok = true;
            for (std::uint32_t m : chosen) {
                std::uint32_t meet = m & parts[i];
                if (meet == m || meet == parts[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen.push_back(parts[i]);
                ++count;
                self(self, i + 1, chosen);
                chosen.pop_back();
            }
        }
    };
    std::vector<std::uint32_t> chosen;
    rec(rec, 0, chosen);
    return count;
}

} // namespace

TEST_CASE("instance types validate their invariants") {
    CHECK_THROWS_AS(DefectiveSet::make(4, {4}), DomainError);
    CHECK_THROWS_AS(DefectiveSet::make(4, {1, 1}), DomainError);
    CHECK(ds(4, {2, 0}).members == IndexSet{0, 2});

    CHECK_THROWS_AS(Complex::make(4, {{}}), DomainError);
    CHECK_THROWS_AS(Complex::make(4, {{0}, {0, 1}}), DomainError);
    CHECK_THROWS_AS(Complex::make(4, {{0, 1}, {0, 1}}), DomainError);
    Complex c = Complex::make(4, {{2, 3}, {0, 1}});
    CHECK(c.parts == std::vector<IndexSet>{{0, 1}, {2, 3}});

    CHECK_THROWS_AS(InhibitorInstance::make(4, {}, {1}), DomainError);
    CHECK_THROWS_AS(InhibitorInstance::make(4, {1}, {1}), DomainError);
    CHECK(InhibitorInstance::make(4, {1}, {2}).inhibitors == IndexSet{2});
}

TEST_CASE("disjunct model results") {
    BinaryCode eq8 = builtin_eq8();
    CHECK(result_disjunct(eq8, ds(12, {})) == BitVector(9));
    for (std::uint32_t u = 0; u < 12; ++u)
        CHECK(result_disjunct(eq8, ds(12, {u})) == eq8.column(u));

    std::string expect = test::or_chars(test::column_chars(test::kEq8Text, 0),
                                        test::column_chars(test::kEq8Text, 1));
    CHECK(result_disjunct(eq8, ds(12, {0, 1})) ==
          BitVector::from_string(expect));

    CHECK_THROWS_AS(result_disjunct(eq8, ds(11, {0})), DimensionError);
}

TEST_CASE("superset model results") {
    BinaryCode eq8 = builtin_eq8();

    SUBCASE("singleton complexes reduce to the disjunct model") {
        exec::SplitMix64 rng(41);
        for (int trial = 0; trial < 50; ++trial) {
            BinaryCode code = test::random_code(rng, 12, 9);
            IndexSet p;
            std::vector<IndexSet> parts;
            for (std::uint32_t u = 0; u < 9; ++u)
                if (rng.bounded(3) == 0) {
                    p.push_back(u);
                    parts.push_back({u});
                }
            CHECK(result_superset(code, Complex::make(9, parts)) ==
                  result_disjunct(code, ds(9, p)));
        }
    }
    SUBCASE("empty complex gives the zero vector") {
        CHECK(result_superset(eq8, Complex::make(12, {})) == BitVector(9));
    }
    SUBCASE("a pair part is seen exactly by the pool containing it") {
        BinaryCode weights =
            parse_code("6 4\n1100\n1010\n1001\n0110\n0101\n0011\n");
        BitVector r = result_superset(weights, Complex::make(4, {{0, 1}}));
        BitVector expect(6);
        expect.set(0, true);
        CHECK(r == expect);
    }
}

TEST_CASE("inhibitor model results") {
    BinaryCode eq8 = builtin_eq8();

    SUBCASE("no inhibitors reduces to the disjunct model") {
        exec::SplitMix64 rng(43);
        for (int trial = 0; trial < 50; ++trial) {
            BinaryCode code = test::random_code(rng, 10, 8);
            IndexSet p;
            for (std::uint32_t u = 0; u < 8; ++u)
                if (rng.bounded(3) == 0)
                    p.push_back(u);
            if (p.empty())
                p.push_back(0);
            CHECK(result_inhibitor(code, InhibitorInstance::make(8, p, {})) ==
                  result_disjunct(code, ds(8, p)));
        }
    }
    SUBCASE("a covering inhibitor blanks the result") {
        BinaryCode code = parse_code("3 2\n11\n01\n00\n");
        // column 2 covers column 1
        CHECK(result_inhibitor(code, InhibitorInstance::make(2, {0}, {1})) ==
              BitVector(3));
    }
    SUBCASE("worked example: p = {3}, I = {5} on the 9x12 code") {
        auto inst = parse_inhibitor_instance("3|5", 12);
        CHECK(result_inhibitor(eq8, inst) ==
              inhibit(eq8.column(2), eq8.column(4)));
        CHECK(result_inhibitor(eq8, inst).to_string() == "011000000");
    }
    SUBCASE("the two disjunction routes agree") {
        exec::SplitMix64 rng(47);
        for (int trial = 0; trial < 80; ++trial) {
            BinaryCode code = test::random_code(rng, 14, 9);
            IndexSet p, inh;
            for (std::uint32_t u = 1; u < 9; ++u) {
                auto roll = rng.bounded(4);
                if (roll == 0)
                    p.push_back(u);
                else if (roll == 1)
                    inh.push_back(u);
            }
            if (p.empty())
                p.push_back(0); // column 0 is never an inhibitor here
            auto inst = InhibitorInstance::make(9, p, inh);
            BitVector via_parts(14);
            BitVector blocker = disjunction_over(code, inst.inhibitors);
            for (std::uint32_t u : p)
                via_parts |= inhibit(code.column(u), blocker);
            CHECK(result_inhibitor(code, inst) == via_parts);
        }
    }
    SUBCASE("defectives growing monotonically grow the result") {
        exec::SplitMix64 rng(53);
        for (int trial = 0; trial < 50; ++trial) {
            BinaryCode code = test::random_code(rng, 12, 10);
            IndexSet small, big;
            for (std::uint32_t u = 0; u < 10; ++u) {
                if (rng.bounded(4) == 0) {
                    small.push_back(u);
                    big.push_back(u);
                } else if (rng.bounded(3) == 0) {
                    big.push_back(u);
                }
            }
            CHECK(covers(result_disjunct(code, ds(10, big)),
                         result_disjunct(code, ds(10, small))));
        }
    }
}

TEST_CASE("defective set enumeration") {
    DefectiveSetEnumerator en(3, 1);
    std::vector<IndexSet> seen;
    while (auto p = en.next())
        seen.push_back(p->members);
    CHECK(seen == std::vector<IndexSet>{{}, {0}, {1}, {2}});

    std::uint64_t count = 0;
    DefectiveSetEnumerator big(12, 2);
    while (big.next())
        ++count;
    CHECK(count == 79); // 1 + 12 + 66

    CHECK_THROWS_AS(DefectiveSetEnumerator(4, 4), DomainError);
    CHECK_THROWS_AS(DefectiveSetEnumerator(4, 0), DomainError);
}

TEST_CASE("complex enumeration") {
    SUBCASE("singleton parts") {
        ComplexEnumerator en(3, 1, 1);
        std::vector<std::string> seen;
        while (auto c = en.next())
            seen.push_back(format_complex(*c));
        CHECK(seen == std::vector<std::string>{"", "1", "2", "3"});
    }
    SUBCASE("every emitted complex is a valid antichain, none repeats") {
        ComplexEnumerator en(4, 2, 2);
        std::set<std::string> seen;
        std::uint64_t count = 0;
        while (auto c = en.next()) {
            ++count;
            CHECK(seen.insert(format_complex(*c)).second);
            CHECK_NOTHROW(Complex::make(c->population, c->parts));
        }
        CHECK(count == brute_antichain_count(4, 2, 2));
        CHECK(count == 44);
        CHECK(seen.count("1;1,2") == 0);
    }
    SUBCASE("larger instance agrees with the brute counter") {
        std::uint64_t count = 0;
        ComplexEnumerator en(5, 2, 2);
        while (en.next())
            ++count;
        CHECK(count == brute_antichain_count(5, 2, 2));
    }
    CHECK_THROWS_AS(ComplexEnumerator(3, 2, 2), DomainError);
    CHECK_THROWS_AS(ComplexEnumerator(3, 0, 1), DomainError);
    CHECK_THROWS_AS(ComplexEnumerator(4000, 2, 2), TooLargeError);
}

TEST_CASE("defective/inhibitor pair enumeration") {
    SUBCASE("t=12, s=1, iota=1 has 144 pairs") {
        PiEnumerator en(12, 1, 1);
        std::uint64_t count = 0;
        while (auto inst = en.next()) {
            ++count;
            CHECK(inst->defectives.size() == 1);
            CHECK(inst->inhibitors.size() <= 1);
        }
        CHECK(count == 144);
    }
    SUBCASE("pairs are disjoint and distinct") {
        PiEnumerator en(6, 2, 2);
        std::set<std::string> seen;
        while (auto inst = en.next()) {
            CHECK(seen.insert(format_inhibitor_instance(*inst)).second);
            for (std::uint32_t u : inst->defectives)
                for (std::uint32_t v : inst->inhibitors)
                    CHECK(u != v);
        }
    }
    SUBCASE("iota = 0 yields exactly the nonempty defective sets") {
        PiEnumerator en(5, 2, 0);
        std::uint64_t count = 0;
        while (auto inst = en.next()) {
            CHECK(inst->inhibitors.empty());
            ++count;
        }
        CHECK(count == 5 + 10);
    }
    SUBCASE("the stream is demand-driven even for huge populations") {
        PiEnumerator en(100000, 2, 2);
        auto first = en.next();
        REQUIRE(first.has_value());
        CHECK(first->defectives == IndexSet{0});
        CHECK(first->inhibitors.empty());
        auto second = en.next();
        CHECK(second->inhibitors == IndexSet{1});
    }
    CHECK_THROWS_AS(PiEnumerator(4, 3, 2), DomainError);
    CHECK_THROWS_AS(PiEnumerator(4, 0, 1), DomainError);
}

TEST_CASE("instance text round-trips") {
    CHECK(format_defective_set(parse_defective_set("1,5,7", 8)) == "1,5,7");
    CHECK(format_defective_set(parse_defective_set("", 8)) == "");
    CHECK(format_complex(parse_complex("1,2;3", 5)) == "1,2;3");
    CHECK(format_complex(parse_complex("", 5)) == "");
    CHECK(format_inhibitor_instance(parse_inhibitor_instance("3|5", 12)) ==
          "3|5");
    CHECK(format_inhibitor_instance(parse_inhibitor_instance("2,4|", 6)) ==
          "2,4|");

    CHECK_THROWS_AS(parse_defective_set("0", 4), FormatError);
    CHECK_THROWS_AS(parse_defective_set("5", 4), FormatError);
    CHECK_THROWS_AS(parse_defective_set("1,1", 4), FormatError);
    CHECK_THROWS_AS(parse_defective_set("a", 4), FormatError);
    CHECK_THROWS_AS(parse_inhibitor_instance("1,2", 4), FormatError);
    CHECK_THROWS_AS(parse_inhibitor_instance("1|2|3", 4), FormatError);
    CHECK_THROWS_AS(parse_complex("1;1,2", 4), DomainError);
}
