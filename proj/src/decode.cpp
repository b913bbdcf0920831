#include <gtcodes/decode.hpp>

#include <algorithm>
#include <set>

#include <gtcodes/combin.hpp>

namespace gtcodes {

namespace {

void check_result(const BinaryCode& code, const ResultVector& r) {
    if (r.size() != code.num_rows())
        throw DimensionError("result vector length does not match row count");
}

// True iff r covers x \ blocked, scanned word by word.
bool covered_once_blocked(const BitVector& x, const BitVector& blocked,
                          const BitVector& r) {
    for (std::size_t i = 0; i < x.word_count(); ++i)
        if (x.word(i) & ~blocked.word(i) & ~r.word(i))
            return false;
    return true;
}

} // namespace

DefectiveSet decode_disjunct(const BinaryCode& code, const ResultVector& r,
                             std::uint32_t s) {
    check_result(code, r);
    if (s < 1 || s >= code.num_cols())
        throw DomainError("need 0 < s < t");
    IndexSet members;
    for (std::uint32_t u = 0; u < code.num_cols(); ++u)
        if (covers(r, code.column(u)))
            members.push_back(u);
    return DefectiveSet{static_cast<std::uint32_t>(code.num_cols()),
                        std::move(members)};
}

Complex decode_superset(const BinaryCode& code, const ResultVector& r,
                        std::uint32_t s, std::uint32_t l) {
    check_result(code, r);
    const std::uint32_t t = static_cast<std::uint32_t>(code.num_cols());
    if (s < 1 || l < 1 || std::uint64_t(s) + l > t)
        throw DomainError("need s >= 1, l >= 1, s + l <= t");
    if (l > 20)
        throw TooLargeError("part size bound above 20 is unsupported");

    // Parts whose conjunction is covered by r, classified by increasing size
    // so the proper-subset filter below is pure lookup.
    std::set<IndexSet> covered_parts;
    std::vector<IndexSet> minimal;
    BitVector conj(code.num_rows());
    IndexSet sub;
    for (std::uint32_t size = 1; size <= l; ++size) {
        auto part = first_combination(size);
        do {
            conj.assign(code.column(part[0]));
            for (std::uint32_t i = 1; i < size; ++i)
                conj &= code.column(part[i]);
            if (!covers(r, conj))
                continue;
            covered_parts.insert(IndexSet(part.begin(), part.end()));
            bool minimal_part = true;
            for (std::uint32_t mask = 1;
                 minimal_part && mask + 1 < (1u << size); ++mask) {
                sub.clear();
                for (std::uint32_t i = 0; i < size; ++i)
                    if (mask & (1u << i))
                        sub.push_back(part[i]);
                if (covered_parts.count(sub))
                    minimal_part = false;
            }
            if (minimal_part)
                minimal.push_back(IndexSet(part.begin(), part.end()));
        } while (next_combination(part, t));
    }
    return Complex::make(t, std::move(minimal));
}

namespace {

DefectiveSet decode_inhibitor_impl(const BinaryCode& code,
                                   const ResultVector& r, std::uint32_t s,
                                   std::uint32_t iota, bool prune) {
    check_result(code, r);
    const std::uint32_t t = static_cast<std::uint32_t>(code.num_cols());
    if (s < 1 || std::uint64_t(s) + iota > t)
        throw DomainError("need s >= 1, iota >= 0, s + iota <= t");

    // Candidate inhibitor columns. Pruned: only codewords disjoint from r
    // can belong to a useful I', since inhibitors force zeros where r is 1.
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t v = 0; v < t; ++v)
        if (!prune || !any_and(code.column(v), r))
            candidates.push_back(v);

    IndexSet members;
    BitVector blocked(code.num_rows());
    std::vector<std::uint32_t> others;
    for (std::uint32_t u = 0; u < t; ++u) {
        others.clear();
        for (std::uint32_t v : candidates)
            if (v != u)
                others.push_back(v);

        bool acceptable = false;
        auto max_size = std::min<std::uint32_t>(
            iota, static_cast<std::uint32_t>(others.size()));
        for (std::uint32_t size = 0; size <= max_size && !acceptable;
             ++size) {
            auto picks = first_combination(size);
            do {
                blocked.clear();
                for (std::uint32_t i : picks)
                    blocked |= code.column(others[i]);
                if (covered_once_blocked(code.column(u), blocked, r)) {
                    acceptable = true;
                    break;
                }
            } while (next_combination(picks, static_cast<std::uint32_t>(
                                                 others.size())));
        }
        if (acceptable)
            members.push_back(u);
    }
    return DefectiveSet{t, std::move(members)};
}

} // namespace

DefectiveSet decode_inhibitor(const BinaryCode& code, const ResultVector& r,
                              std::uint32_t s, std::uint32_t iota) {
    return decode_inhibitor_impl(code, r, s, iota, true);
}

DefectiveSet decode_inhibitor_unpruned(const BinaryCode& code,
                                       const ResultVector& r, std::uint32_t s,
                                       std::uint32_t iota) {
    return decode_inhibitor_impl(code, r, s, iota, false);
}

} // namespace gtcodes
