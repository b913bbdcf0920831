#include <gtcodes/verify.hpp>

#include <algorithm>
#include <optional>
#include <unordered_map>

#include <gtcodes/combin.hpp>
#include <gtcodes/exec.hpp>
#include <gtcodes/models.hpp>

namespace gtcodes {

namespace {

// Oracle instance guards (result maps must fit in memory).
constexpr std::uint32_t kOracleMaxColumns = 24;
constexpr std::uint64_t kOracleMaxInstances = 1000000;

std::string brace(const std::string& payload) { return "{" + payload + "}"; }

std::string set_token(const char* key, const IndexSet& set) {
    return std::string(key) + "=" + brace(format_index_set(set));
}

struct Violation {
    std::uint64_t rank; // 0-based position in enumeration order
    std::string witness;
};

VerifyReport exhaustive_report(std::string property, std::uint64_t total,
                               const std::optional<Violation>& v) {
    VerifyReport r;
    r.property = std::move(property);
    r.mode = VerifyReport::Mode::exhaustive;
    r.holds = !v.has_value();
    r.checked = v ? v->rank + 1 : total;
    if (v)
        r.witness = v->witness;
    return r;
}

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const { return hash_value(v); }
};

} // namespace

std::string VerifyReport::verdict_line() const {
    std::string line = holds ? "HOLDS " : "FAILS ";
    line += property;
    line += mode == Mode::exhaustive
                ? " mode=exhaustive"
                : " mode=randomized(seed=" + std::to_string(seed) +
                      ",trials=" + std::to_string(trials) + ")";
    line += " checked=" + std::to_string(checked);
    if (!holds)
        line += " witness: " + witness;
    return line;
}

VerifyReport is_superimposed(const BinaryCode& code, std::uint32_t s) {
    const std::uint32_t t = static_cast<std::uint32_t>(code.num_cols());
    if (s < 1 || s >= t)
        throw DomainError("need 0 < s < t");

    // Sets of size 0..s, by size then lexicographically.
    std::vector<std::uint64_t> sets_per_size(s + 1), pairs_before(s + 2, 0);
    std::uint64_t total_sets = 0, total_pairs = 0;
    for (std::uint32_t k = 0; k <= s; ++k) {
        sets_per_size[k] = binomial(t, k);
        total_sets += sets_per_size[k];
        pairs_before[k + 1] = pairs_before[k] + sets_per_size[k] * (t - k);
        total_pairs += sets_per_size[k] * (t - k);
    }
    if (total_pairs >= kCountCap)
        throw TooLargeError("too many (p, u) pairs to scan exhaustively");

    auto body = [&](std::uint64_t lo,
                    std::uint64_t hi) -> std::optional<Violation> {
        // Locate the set size and combination at global set rank lo.
        std::uint32_t k = 0;
        std::uint64_t local = lo;
        while (local >= sets_per_size[k]) {
            local -= sets_per_size[k];
            ++k;
        }
        auto p = unrank_combination(local, t, k);
        BitVector disj(code.num_rows());

        for (std::uint64_t rank = lo; rank < hi; ++rank) {
            disj.clear();
            for (std::uint32_t u : p)
                disj |= code.column(u);
            std::uint32_t skip = 0, outside = 0;
            for (std::uint32_t u = 0; u < t; ++u) {
                if (skip < p.size() && p[skip] == u) {
                    ++skip;
                    continue;
                }
                if (!any_and_not(code.column(u), disj)) {
                    IndexSet hit{u};
                    return Violation{
                        pairs_before[k] + local * (t - k) + outside,
                        set_token("p", p) + " " + set_token("u", hit)};
                }
                ++outside;
            }
            if (!next_combination(p, t)) {
                ++k;
                local = 0;
                if (rank + 1 < hi)
                    p = first_combination(k);
            } else {
                ++local;
            }
        }
        return std::nullopt;
    };

    auto v = exec::first_hit<Violation>(total_sets, body);
    return exhaustive_report("superimposed(s=" + std::to_string(s) + ")",
                             total_pairs, v);
}

namespace {

// Walks all s-subsets of `candidates` in lexicographic order, keeping a stack
// of prefix disjunctions, and reports the first subset whose disjunction
// leaves no row where `conj` is 1 and the disjunction is 0.
class SubsetDisjunctionScan {
  public:
    SubsetDisjunctionScan(const BinaryCode& code,
                          const std::vector<std::uint32_t>& candidates,
                          std::uint32_t s)
        : code_(code), cand_(candidates), s_(s), chosen_(s),
          stack_(s + 1, BitVector(code.num_rows())) { }

    // Returns the 0-based rank of the first violating subset, or nullopt.
    std::optional<std::uint64_t> run(const BitVector& conj,
                                     IndexSet& violating) {
        conj_ = &conj;
        violating_ = &violating;
        rank_ = 0;
        return descend(0, 0) ? std::optional(rank_) : std::nullopt;
    }

  private:
    bool descend(std::size_t start, std::uint32_t depth) {
        if (depth == s_) {
            if (!any_and_not(*conj_, stack_[depth])) {
                violating_->assign(chosen_.begin(), chosen_.end());
                return true;
            }
            ++rank_;
            return false;
        }
        for (std::size_t i = start; i + (s_ - depth) <= cand_.size(); ++i) {
            chosen_[depth] = cand_[i];
            stack_[depth + 1].assign_or(stack_[depth],
                                        code_.column(cand_[i]));
            if (descend(i + 1, depth + 1))
                return true;
        }
        return false;
    }

    const BinaryCode& code_;
    const std::vector<std::uint32_t>& cand_;
    std::uint32_t s_;
    std::vector<std::uint32_t> chosen_;
    std::vector<BitVector> stack_;
    const BitVector* conj_ = nullptr;
    IndexSet* violating_ = nullptr;
    std::uint64_t rank_ = 0;
};

std::vector<std::uint32_t> complement_of(const std::vector<std::uint32_t>& set,
                                         std::uint32_t t) {
    std::vector<std::uint32_t> comp;
    comp.reserve(t - set.size());
    std::size_t k = 0;
    for (std::uint32_t v = 0; v < t; ++v) {
        if (k < set.size() && set[k] == v)
            ++k;
        else
            comp.push_back(v);
    }
    return comp;
}

void check_sl_bounds(std::size_t t, std::uint32_t s, std::uint32_t l) {
    if (s < 1 || l < 1 || std::uint64_t(s) + l > t)
        throw DomainError("need s >= 1, l >= 1, s + l <= t");
}

} // namespace

VerifyReport is_superimposed_sl(const BinaryCode& code, std::uint32_t s,
                                std::uint32_t l) {
    const std::uint32_t t = static_cast<std::uint32_t>(code.num_cols());
    check_sl_bounds(t, s, l);

    const std::uint64_t l_total = binomial(t, l);
    const std::uint64_t s_per_l = binomial(t - l, s);
    if (l_total >= kCountCap || s_per_l >= kCountCap ||
        l_total > kCountCap / s_per_l)
        throw TooLargeError("too many (S, L) pairs to scan exhaustively");
    const std::uint64_t total_pairs = l_total * s_per_l;

    auto body = [&](std::uint64_t lo,
                    std::uint64_t hi) -> std::optional<Violation> {
        auto L = unrank_combination(lo, t, l);
        BitVector conj(code.num_rows());
        IndexSet violating;
        for (std::uint64_t rank = lo; rank < hi; ++rank) {
            conj.assign(code.column(L[0]));
            for (std::uint32_t i = 1; i < l; ++i)
                conj &= code.column(L[i]);
            auto comp = complement_of(L, t);
            SubsetDisjunctionScan scan(code, comp, s);
            if (auto s_rank = scan.run(conj, violating))
                return Violation{rank * s_per_l + *s_rank,
                                 set_token("S", violating) + " " +
                                     set_token("L", L)};
            if (rank + 1 < hi)
                next_combination(L, t);
        }
        return std::nullopt;
    };

    auto v = exec::first_hit<Violation>(l_total, body);
    return exhaustive_report("superimposed-sl(s=" + std::to_string(s) +
                                 ",l=" + std::to_string(l) + ")",
                             total_pairs, v);
}

VerifyReport is_inhibitory_code(const BinaryCode& code, std::uint32_t s,
                                std::uint32_t iota) {
    if (s < 1 || std::uint64_t(s) + iota > code.num_cols())
        throw DomainError("need s >= 1, iota >= 0, s + iota <= t");
    VerifyReport r = is_superimposed(code, s + iota);
    r.property = "inhibitory(s=" + std::to_string(s) +
                 ",i=" + std::to_string(iota) + ")";
    return r;
}

VerifyReport is_separating(const QaryCode& code, std::uint32_t s,
                           std::uint32_t l) {
    const std::uint32_t t = static_cast<std::uint32_t>(code.num_cols());
    check_sl_bounds(t, s, l);

    const std::uint64_t l_total = binomial(t, l);
    const std::uint64_t s_per_l = binomial(t - l, s);
    if (l_total >= kCountCap || s_per_l >= kCountCap ||
        l_total > kCountCap / s_per_l)
        throw TooLargeError("too many (S, L) pairs to scan exhaustively");

    auto separated = [&](const std::vector<std::uint32_t>& L,
                         const std::vector<std::uint32_t>& S) {
        for (std::size_t n = 0; n < code.num_rows(); ++n) {
            bool meet = false;
            for (std::uint32_t u : L) {
                std::uint32_t sym = code.get(n, u);
                for (std::uint32_t v : S)
                    if (code.get(n, v) == sym) {
                        meet = true;
                        break;
                    }
                if (meet)
                    break;
            }
            if (!meet)
                return true;
        }
        return false;
    };

    auto body = [&](std::uint64_t lo,
                    std::uint64_t hi) -> std::optional<Violation> {
        auto L = unrank_combination(lo, t, l);
        std::vector<std::uint32_t> s_cols(s);
        for (std::uint64_t rank = lo; rank < hi; ++rank) {
            auto comp = complement_of(L, t);
            auto S = first_combination(s);
            std::uint64_t s_rank = 0;
            do {
                for (std::uint32_t i = 0; i < s; ++i)
                    s_cols[i] = comp[S[i]];
                if (!separated(L, s_cols))
                    return Violation{rank * s_per_l + s_rank,
                                     set_token("S", s_cols) + " " +
                                         set_token("L", L)};
                ++s_rank;
            } while (next_combination(S, static_cast<std::uint32_t>(comp.size())));
            if (rank + 1 < hi)
                next_combination(L, t);
        }
        return std::nullopt;
    };

    auto v = exec::first_hit<Violation>(l_total, body);
    return exhaustive_report("separating(s=" + std::to_string(s) +
                                 ",l=" + std::to_string(l) + ")",
                             l_total * s_per_l, v);
}

namespace {

struct ClosestPair {
    std::uint32_t d;
    std::uint32_t u, v;
};

ClosestPair closest_columns(const QaryCode& code) {
    if (code.num_cols() < 2)
        throw DomainError("minimum distance needs at least two columns");
    ClosestPair best{static_cast<std::uint32_t>(code.num_rows()) + 1, 0, 0};
    for (std::size_t u = 0; u + 1 < code.num_cols(); ++u) {
        for (std::size_t v = u + 1; v < code.num_cols(); ++v) {
            std::uint32_t d = 0;
            for (std::size_t n = 0; n < code.num_rows() && d < best.d; ++n)
                d += code.get(n, u) != code.get(n, v);
            if (d < best.d)
                best = {d, static_cast<std::uint32_t>(u),
                        static_cast<std::uint32_t>(v)};
        }
    }
    return best;
}

std::uint64_t pow_capped(std::uint64_t q, std::uint32_t k) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (r > kCountCap / q)
            return kCountCap;
        r *= q;
    }
    return r;
}

} // namespace

std::uint32_t min_distance(const QaryCode& code) {
    return closest_columns(code).d;
}

VerifyReport is_mds(const QaryCode& code, std::uint32_t k) {
    if (k < 1)
        throw DomainError("need k >= 1");
    VerifyReport r;
    r.property = "mds(k=" + std::to_string(k) + ")";
    r.mode = VerifyReport::Mode::exhaustive;
    r.checked = binomial(code.num_cols(), 2);

    std::uint64_t expected_t = pow_capped(code.alphabet_size(), k);
    if (code.num_cols() != expected_t) {
        r.holds = false;
        r.witness = "t={" + std::to_string(code.num_cols()) + "} q^k={" +
                    std::to_string(expected_t) + "}";
        return r;
    }
    ClosestPair best = closest_columns(code);
    std::uint32_t want = static_cast<std::uint32_t>(code.num_rows()) - k + 1;
    if (best.d != want) {
        r.holds = false;
        r.witness = "u={" + std::to_string(best.u + 1) + "} v={" +
                    std::to_string(best.v + 1) + "} d={" +
                    std::to_string(best.d) + "} expected={" +
                    std::to_string(want) + "}";
        return r;
    }
    r.holds = true;
    return r;
}

bool mds_implies_separating(std::uint64_t q, std::uint32_t k, std::uint64_t n,
                            std::uint32_t s, std::uint32_t l) {
    return n >= std::uint64_t(s) * l * (k - 1) + 1 &&
           pow_capped(q, k) >= std::uint64_t(s) + l;
}

namespace {

void check_oracle_guard(const BinaryCode& code, std::uint64_t instances) {
    if (code.num_cols() > kOracleMaxColumns)
        throw TooLargeError("design oracle limited to t <= " +
                            std::to_string(kOracleMaxColumns) + " columns");
    if (instances > kOracleMaxInstances)
        throw TooLargeError("design oracle limited to " +
                            std::to_string(kOracleMaxInstances) +
                            " instances");
}

} // namespace

VerifyReport oracle_disjunct_design(const BinaryCode& code, std::uint32_t s) {
    const std::uint32_t t = static_cast<std::uint32_t>(code.num_cols());
    std::uint64_t instances = 0;
    for (std::uint32_t k = 0; k <= s; ++k)
        instances += binomial(t, k);
    check_oracle_guard(code, instances);

    std::unordered_map<BitVector, DefectiveSet, BitVectorHash> seen;
    seen.reserve(instances);
    DefectiveSetEnumerator en(t, s);
    std::uint64_t rank = 0;
    std::optional<Violation> v;
    while (auto p = en.next()) {
        auto [it, fresh] = seen.try_emplace(result_disjunct(code, *p), *p);
        if (!fresh) {
            v = Violation{rank, set_token("p1", it->second.members) + " " +
                                    set_token("p2", p->members)};
            break;
        }
        ++rank;
    }
    return exhaustive_report("design-disjunct(s=" + std::to_string(s) + ")",
                             instances, v);
}

VerifyReport oracle_superset_design(const BinaryCode& code, std::uint32_t s,
                                    std::uint32_t l) {
    const std::uint32_t t = static_cast<std::uint32_t>(code.num_cols());
    check_oracle_guard(code, 0);

    std::unordered_map<BitVector, Complex, BitVectorHash> seen;
    ComplexEnumerator en(t, s, l);
    std::uint64_t rank = 0;
    std::optional<Violation> v;
    while (auto p = en.next()) {
        if (rank >= kOracleMaxInstances)
            throw TooLargeError("design oracle limited to " +
                                std::to_string(kOracleMaxInstances) +
                                " instances");
        auto [it, fresh] = seen.try_emplace(result_superset(code, *p), *p);
        if (!fresh) {
            v = Violation{rank, "c1={" + format_complex(it->second) +
                                    "} c2={" + format_complex(*p) + "}"};
            break;
        }
        ++rank;
    }
    return exhaustive_report("design-superset(s=" + std::to_string(s) +
                                 ",l=" + std::to_string(l) + ")",
                             rank, v);
}

VerifyReport oracle_inhibitory_design(const BinaryCode& code, std::uint32_t s,
                                      std::uint32_t iota) {
    const std::uint32_t t = static_cast<std::uint32_t>(code.num_cols());
    std::uint64_t instances = 0;
    for (std::uint32_t k = 1; k <= s; ++k) {
        std::uint64_t with_i = 0;
        for (std::uint32_t j = 0; j <= iota; ++j)
            with_i += binomial(t - k, j);
        instances += binomial(t, k) * with_i;
    }
    check_oracle_guard(code, instances);

    std::unordered_map<BitVector, InhibitorInstance, BitVectorHash> seen;
    seen.reserve(instances);
    PiEnumerator en(t, s, iota);
    std::uint64_t rank = 0;
    std::optional<Violation> v;
    while (auto inst = en.next()) {
        auto [it, fresh] = seen.try_emplace(result_inhibitor(code, *inst),
                                            *inst);
        if (!fresh && it->second.defectives != inst->defectives) {
            v = Violation{
                rank,
                "a={" + format_inhibitor_instance(it->second) + "} b={" +
                    format_inhibitor_instance(*inst) + "}"};
            break;
        }
        ++rank;
    }
    return exhaustive_report("design-inhibitor(s=" + std::to_string(s) +
                                 ",i=" + std::to_string(iota) + ")",
                             instances, v);
}

VerifyReport spot_check_sl(const BinaryCode& code, std::uint32_t s,
                           std::uint32_t l, std::uint64_t trials,
                           std::uint64_t seed) {
    const std::uint32_t t = static_cast<std::uint32_t>(code.num_cols());
    check_sl_bounds(t, s, l);
    if (trials < 1)
        throw DomainError("need at least one trial");

    auto body = [&](std::uint64_t lo,
                    std::uint64_t hi) -> std::optional<Violation> {
        std::vector<std::uint32_t> S(s), L(l);
        BitVector conj(code.num_rows()), disj(code.num_rows());
        for (std::uint64_t trial = lo; trial < hi; ++trial) {
            exec::SplitMix64 rng(exec::mix_seed(seed, trial));
            // Rejection-sample S, then L disjoint from it.
            for (std::uint32_t i = 0; i < s;) {
                auto v = static_cast<std::uint32_t>(rng.bounded(t));
                if (std::find(S.begin(), S.begin() + i, v) == S.begin() + i)
                    S[i++] = v;
            }
            for (std::uint32_t i = 0; i < l;) {
                auto v = static_cast<std::uint32_t>(rng.bounded(t));
                if (std::find(S.begin(), S.end(), v) == S.end() &&
                    std::find(L.begin(), L.begin() + i, v) == L.begin() + i)
                    L[i++] = v;
            }
            conj.assign(code.column(L[0]));
            for (std::uint32_t i = 1; i < l; ++i)
                conj &= code.column(L[i]);
            disj.clear();
            for (std::uint32_t u : S)
                disj |= code.column(u);
            if (!any_and_not(conj, disj)) {
                IndexSet sw(S.begin(), S.end()), lw(L.begin(), L.end());
                std::sort(sw.begin(), sw.end());
                std::sort(lw.begin(), lw.end());
                return Violation{trial, set_token("S", sw) + " " +
                                            set_token("L", lw)};
            }
        }
        return std::nullopt;
    };

    auto v = exec::first_hit<Violation>(trials, body);
    VerifyReport r = exhaustive_report(
        "spot-sl(s=" + std::to_string(s) + ",l=" + std::to_string(l) + ")",
        trials, v);
    r.mode = VerifyReport::Mode::randomized;
    r.seed = seed;
    r.trials = trials;
    return r;
}

} // namespace gtcodes
