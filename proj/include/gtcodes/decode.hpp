#pragma once

#include <cstdint>

#include <gtcodes/models.hpp>

namespace gtcodes {

/// Cover decoder for the disjunct model: a sample is defective iff the
/// result vector covers its codeword. Exact whenever the code is a
/// superimposed s-code and r came from at most s defectives; no attempt is
/// made to detect invalid result vectors.
DefectiveSet decode_disjunct(const BinaryCode& code, const ResultVector& r,
                             std::uint32_t s);

/// Classification decoder for the superset model: a part P with |P| <= l is
/// "present" iff r covers its conjunction, and it is reported iff every
/// nonempty proper subset is absent. Parts are classified by increasing size
/// and memoized, so the subset filter is table lookups. The output is always
/// an antichain. Exact for superimposed (s,l)-codes and valid r.
Complex decode_superset(const BinaryCode& code, const ResultVector& r,
                        std::uint32_t s, std::uint32_t l);

/// Acceptability decoder for the inhibitor model: a sample u is defective iff
/// some candidate inhibitor set I' (|I'| <= iota, u outside) makes
/// x(u) \ V(I') covered by r. Candidates are restricted to columns whose
/// codeword is disjoint from r, which loses nothing for valid result vectors.
/// Exact for inhibitory (s,iota)-codes.
DefectiveSet decode_inhibitor(const BinaryCode& code, const ResultVector& r,
                              std::uint32_t s, std::uint32_t iota);

/// Reference route for decode_inhibitor that searches all candidate subsets
/// instead of the pruned ones. Kept for cross-checking the pruned search.
DefectiveSet decode_inhibitor_unpruned(const BinaryCode& code,
                                       const ResultVector& r, std::uint32_t s,
                                       std::uint32_t iota);

} // namespace gtcodes
