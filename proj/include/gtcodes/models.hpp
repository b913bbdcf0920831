#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gtcodes/bitcode.hpp>

namespace gtcodes {

using ResultVector = BitVector;
using IndexSet = std::vector<std::uint32_t>; // sorted ascending, distinct, 0-based

/// Defective subset p of a population [t]. Members are sorted and distinct.
struct DefectiveSet {
    std::uint32_t population;
    IndexSet members;

    static DefectiveSet make(std::uint32_t population, IndexSet members);

    friend bool operator==(const DefectiveSet&, const DefectiveSet&) = default;
};

/// Defective superset: an antichain of nonempty parts of [t]. Canonical form
/// sorts each part ascending and the parts lexicographically; construction
/// rejects any pair of parts where one contains the other.
struct Complex {
    std::uint32_t population;
    std::vector<IndexSet> parts;

    static Complex make(std::uint32_t population, std::vector<IndexSet> parts);

    friend bool operator==(const Complex&, const Complex&) = default;
};

/// Disjoint pair (defectives, inhibitors); defectives must be nonempty.
struct InhibitorInstance {
    std::uint32_t population;
    IndexSet defectives;
    IndexSet inhibitors;

    static InhibitorInstance make(std::uint32_t population, IndexSet defectives,
                                  IndexSet inhibitors);

    friend bool operator==(const InhibitorInstance&,
                           const InhibitorInstance&) = default;
};

/// Test results of the disjunct model: the disjunction of the defective
/// codewords; all-zero for the empty set.
ResultVector result_disjunct(const BinaryCode& code, const DefectiveSet& p);

/// Test results of the superset model: test n is positive iff pool G_n
/// contains some part entirely. The empty complex yields the zero vector.
ResultVector result_superset(const BinaryCode& code, const Complex& p);

/// Test results of the inhibitor model: the defective disjunction with every
/// component touched by an inhibitor forced to zero.
ResultVector result_inhibitor(const BinaryCode& code,
                              const InhibitorInstance& inst);

/// All subsets of [t] with 0 <= |p| <= s, by size then lexicographically.
/// Requires 0 < s < t.
class DefectiveSetEnumerator {
  public:
    DefectiveSetEnumerator(std::uint32_t t, std::uint32_t s);
    std::optional<DefectiveSet> next();

  private:
    std::uint32_t t_, s_, size_ = 0;
    bool done_ = false, fresh_ = true;
    IndexSet current_;
};

/// All antichains of at most s nonempty parts of size at most l, including
/// the empty complex. Parts are drawn from the part universe in ascending
/// lexicographic order, complexes by part count then by universe positions.
/// Requires s >= 1, l >= 1, s + l <= t; the part universe C(t,<=l) must stay
/// within the enumeration guard.
class ComplexEnumerator {
  public:
    ComplexEnumerator(std::uint32_t t, std::uint32_t s, std::uint32_t l);
    std::optional<Complex> next();

  private:
    bool antichain_at(const std::vector<std::uint32_t>& picks) const;

    std::uint32_t t_, s_, count_ = 0;
    bool done_ = false, fresh_ = true;
    std::vector<IndexSet> universe_;
    std::vector<std::uint32_t> picks_;
};

/// All pairs (p, I) with 1 <= |p| <= s, 0 <= |I| <= iota, p and I disjoint;
/// p runs by size then lexicographically, then I likewise over [t] \ p.
/// Requires s >= 1, iota >= 0, s + iota <= t.
class PiEnumerator {
  public:
    PiEnumerator(std::uint32_t t, std::uint32_t s, std::uint32_t iota);
    std::optional<InhibitorInstance> next();

  private:
    bool advance_inhibitors();
    void reset_inhibitors();

    std::uint32_t t_, s_, iota_;
    std::uint32_t p_size_ = 1, i_size_ = 0;
    bool done_ = false, fresh_ = true;
    IndexSet p_, complement_;
    std::vector<std::uint32_t> i_picks_; // indices into complement_
};

/// Text forms used by the CLI (1-based): "1,5,7" for sets (empty string for
/// the empty set), parts joined by ';' for complexes, "p|I" for inhibitor
/// instances, and plain 0/1 characters for result vectors.
std::string format_index_set(const IndexSet& set);
IndexSet parse_index_set(std::string_view text, std::uint32_t population);

std::string format_defective_set(const DefectiveSet& p);
DefectiveSet parse_defective_set(std::string_view text, std::uint32_t population);

std::string format_complex(const Complex& p);
Complex parse_complex(std::string_view text, std::uint32_t population);

std::string format_inhibitor_instance(const InhibitorInstance& inst);
InhibitorInstance parse_inhibitor_instance(std::string_view text,
                                           std::uint32_t population);

} // namespace gtcodes
