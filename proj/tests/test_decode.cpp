#include "doctest.h"

#include <algorithm>

#include <gtcodes/construct.hpp>
#include <gtcodes/decode.hpp>
#include <gtcodes/models.hpp>

#include "testutil.hpp"

using namespace gtcodes;

TEST_CASE("disjunct decoding") {
    BinaryCode eq8 = builtin_eq8();

    SUBCASE("zero result decodes to the empty set") {
        CHECK(decode_disjunct(eq8, BitVector(9), 2).members.empty());
    }
    SUBCASE("identity codes decode by reading the result") {
        BinaryCode id4 = identity_code(4);
        auto p = decode_disjunct(id4, BitVector::from_string("0110"), 2);
        CHECK(p.members == IndexSet{1, 2});
    }
    SUBCASE("exhaustive round-trip over all 79 hidden sets") {
        DefectiveSetEnumerator en(12, 2);
        while (auto p = en.next())
            CHECK(decode_disjunct(eq8, result_disjunct(eq8, *p), 2) == *p);
    }
    SUBCASE("growing results never shrink the decoded set") {
        exec::SplitMix64 rng(81);
        for (int trial = 0; trial < 60; ++trial) {
            BinaryCode code = test::random_code(rng, 9, 7);
            BitVector r1 = test::random_bits(rng, 9, 4);
            BitVector r2 = r1 | test::random_bits(rng, 9, 4);
            IndexSet d1 = decode_disjunct(code, r1, 2).members;
            IndexSet d2 = decode_disjunct(code, r2, 2).members;
            for (std::uint32_t u : d1)
                CHECK(std::find(d2.begin(), d2.end(), u) != d2.end());
        }
    }
    CHECK_THROWS_AS(decode_disjunct(eq8, BitVector(8), 2), DimensionError);
}

TEST_CASE("superset decoding") {
    BinaryCode slim = dedupe_rows(concatenate(builtin_c4(),
                                              trivial_code(4, 2, 2)));

    SUBCASE("zero result decodes to the empty complex") {
        CHECK(decode_superset(slim, BitVector(14), 2, 2).parts.empty());
    }
    SUBCASE("a hidden pair decodes to the pair, not its singletons") {
        BinaryCode weights = trivial_code(4, 2, 2);
        Complex hidden = Complex::make(4, {{0, 1}});
        Complex out = decode_superset(weights,
                                      result_superset(weights, hidden), 2, 2);
        CHECK(out == hidden);
    }
    SUBCASE("exhaustive round-trip over every complex on the 14x8 code") {
        ComplexEnumerator en(8, 2, 2);
        std::uint64_t count = 0;
        while (auto p = en.next()) {
            ++count;
            CHECK(decode_superset(slim, result_superset(slim, *p), 2, 2) ==
                  *p);
        }
        CHECK(count == 611);
    }
    SUBCASE("output is an antichain even for arbitrary results") {
        exec::SplitMix64 rng(83);
        for (int trial = 0; trial < 60; ++trial) {
            BinaryCode code = test::random_code(rng, 10, 8);
            BitVector r = test::random_bits(rng, 10, 1 + rng.bounded(15));
            Complex out = decode_superset(code, r, 2, 3);
            CHECK_NOTHROW(Complex::make(out.population, out.parts));
        }
    }
    SUBCASE("l = 1 decoding equals disjunct decoding") {
        exec::SplitMix64 rng(89);
        for (int trial = 0; trial < 60; ++trial) {
            BinaryCode code = test::random_code(rng, 10, 8);
            BitVector r = test::random_bits(rng, 10, 1 + rng.bounded(15));
            Complex out = decode_superset(code, r, 3, 1);
            DefectiveSet direct = decode_disjunct(code, r, 3);
            std::vector<IndexSet> expect;
            for (std::uint32_t u : direct.members)
                expect.push_back({u});
            CHECK(out.parts == expect);
        }
    }
}

TEST_CASE("inhibitor decoding") {
    BinaryCode eq8 = builtin_eq8();

    SUBCASE("no inhibitor budget equals disjunct decoding") {
        exec::SplitMix64 rng(91);
        for (int trial = 0; trial < 40; ++trial) {
            BinaryCode code = test::random_code(rng, 10, 8);
            BitVector r = test::random_bits(rng, 10, 1 + rng.bounded(15));
            CHECK(decode_inhibitor(code, r, 2, 0) ==
                  decode_disjunct(code, r, 2));
        }
    }
    SUBCASE("worked example: p = {3}, I = {5}") {
        auto inst = parse_inhibitor_instance("3|5", 12);
        BitVector r = result_inhibitor(eq8, inst);
        CHECK(r.to_string() == "011000000");
        CHECK(format_defective_set(decode_inhibitor(eq8, r, 1, 1)) == "3");
    }
    SUBCASE("exhaustive round-trip over all 144 instances") {
        PiEnumerator en(12, 1, 1);
        while (auto inst = en.next()) {
            auto decoded = decode_inhibitor(
                eq8, result_inhibitor(eq8, *inst), 1, 1);
            CHECK(decoded.members == inst->defectives);
        }
    }
    SUBCASE("identity code round-trips with two defectives") {
        BinaryCode id6 = identity_code(6);
        PiEnumerator en(6, 2, 1);
        while (auto inst = en.next()) {
            auto decoded = decode_inhibitor(
                id6, result_inhibitor(id6, *inst), 2, 1);
            CHECK(decoded.members == inst->defectives);
        }
    }
    SUBCASE("pruned and unpruned searches agree on valid instances") {
        exec::SplitMix64 rng(97);
        BinaryCode id8 = identity_code(8);
        for (int trial = 0; trial < 300; ++trial) {
            const BinaryCode& code = trial % 2 ? eq8 : id8;
            auto t = static_cast<std::uint32_t>(code.num_cols());
            std::uint32_t s = trial % 2 ? 1 : 2;
            std::uint32_t iota = trial % 2 ? 1 : 2;
            IndexSet p, inh;
            std::size_t p_target = 1 + rng.bounded(s);
            std::size_t i_target = rng.bounded(iota + 1);
            while (p.size() < p_target) {
                auto v = static_cast<std::uint32_t>(rng.bounded(t));
                if (std::find(p.begin(), p.end(), v) == p.end())
                    p.push_back(v);
            }
            while (inh.size() < i_target) {
                auto v = static_cast<std::uint32_t>(rng.bounded(t));
                if (std::find(p.begin(), p.end(), v) == p.end() &&
                    std::find(inh.begin(), inh.end(), v) == inh.end())
                    inh.push_back(v);
            }
            auto inst = InhibitorInstance::make(t, p, inh);
            BitVector r = result_inhibitor(code, inst);
            auto pruned = decode_inhibitor(code, r, s, iota);
            auto unpruned = decode_inhibitor_unpruned(code, r, s, iota);
            CHECK(pruned == unpruned);
            CHECK(pruned.members == inst.defectives);
        }
    }
    SUBCASE("pruning never adds members, whatever the result vector") {
        exec::SplitMix64 rng(101);
        for (int trial = 0; trial < 60; ++trial) {
            BinaryCode code = test::random_code(rng, 9, 7);
            BitVector r = test::random_bits(rng, 9, 1 + rng.bounded(15));
            IndexSet pruned = decode_inhibitor(code, r, 2, 1).members;
            IndexSet unpruned =
                decode_inhibitor_unpruned(code, r, 2, 1).members;
            for (std::uint32_t u : pruned)
                CHECK(std::find(unpruned.begin(), unpruned.end(), u) !=
                      unpruned.end());
        }
    }
}
