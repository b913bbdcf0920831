#pragma once

#include <cstdint>
#include <string>

#include <gtcodes/bitcode.hpp>
#include <gtcodes/qary.hpp>

namespace gtcodes {

/// Outcome of a property check. When the property fails, `witness` holds the
/// violating sets as space-separated key={value} tokens (1-based, in the
/// instance text formats) and can be re-validated against the definition with
/// a single pass over the rows; `checked` is then the 1-based position of the
/// witness in enumeration order, otherwise the total number of cases checked.
/// Exhaustive reports are deterministic regardless of the worker count: the
/// witness is always the first violation in enumeration order.
struct VerifyReport {
    enum class Mode { exhaustive, randomized };

    std::string property;
    bool holds = false;
    std::uint64_t checked = 0;
    Mode mode = Mode::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::string witness;

    std::string verdict_line() const;
};

/// Superimposed s-code check: no codeword is covered by the disjunction of
/// any other <= s columns. All pairs (p, u), |p| <= s, u outside p, are
/// scanned by size then lexicographically. Requires 0 < s < t.
VerifyReport is_superimposed(const BinaryCode& code, std::uint32_t s);

/// Superimposed (s,l)-code check: every disjoint pair (S, L) with |S| = s,
/// |L| = l has a row that is all-ones on L and all-zero on S (full sizes
/// suffice: smaller pairs extend to full ones). L runs in the outer loop;
/// for each L the conjunction is fixed and every S disjunction is tested with
/// one masked word scan. Requires s >= 1, l >= 1, s + l <= t.
VerifyReport is_superimposed_sl(const BinaryCode& code, std::uint32_t s,
                                std::uint32_t l);

/// Inhibitory (s,iota)-code check: a superimposed (s+iota)-code.
VerifyReport is_inhibitory_code(const BinaryCode& code, std::uint32_t s,
                                std::uint32_t iota);

/// q-ary separating (s,l)-code check: for every disjoint (S, L) some row's
/// symbol sets on S and on L do not intersect.
VerifyReport is_separating(const QaryCode& code, std::uint32_t s,
                           std::uint32_t l);

/// Minimum pairwise Hamming distance over all column pairs; t >= 2.
std::uint32_t min_distance(const QaryCode& code);

/// MDS check: t = q^k and min_distance = n - k + 1.
VerifyReport is_mds(const QaryCode& code, std::uint32_t k);

/// True iff an MDS code with parameters (q, k, n) is guaranteed to be a
/// q-ary separating (s,l)-code: n >= s*l*(k-1) + 1 and q^k >= s + l.
bool mds_implies_separating(std::uint64_t q, std::uint32_t k, std::uint64_t n,
                            std::uint32_t s, std::uint32_t l);

/// Brute-force design oracles: build the full instance -> result map and
/// verify injectivity (for the inhibitor model, injectivity of the defective
/// part only). Instances are capped; oversize inputs raise TooLargeError.
VerifyReport oracle_disjunct_design(const BinaryCode& code, std::uint32_t s);
VerifyReport oracle_superset_design(const BinaryCode& code, std::uint32_t s,
                                    std::uint32_t l);
VerifyReport oracle_inhibitory_design(const BinaryCode& code, std::uint32_t s,
                                      std::uint32_t iota);

/// Randomized relaxation of the (s,l) check: samples `trials` disjoint
/// (S, L) pairs from per-trial streams derived from (seed, trial index) and
/// reports the lowest-index violation, independent of the worker count.
VerifyReport spot_check_sl(const BinaryCode& code, std::uint32_t s,
                           std::uint32_t l, std::uint64_t trials,
                           std::uint64_t seed);

} // namespace gtcodes
