#include <gtcodes/models.hpp>

#include <algorithm>
#include <charconv>

#include <gtcodes/combin.hpp>

namespace gtcodes {

namespace {

void validate_index_set(IndexSet& set, std::uint32_t population,
                        const char* what) {
    std::sort(set.begin(), set.end());
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] >= population)
            throw DomainError(std::string(what) + ": index out of range");
        if (i && set[i] == set[i - 1])
            throw DomainError(std::string(what) + ": duplicate index");
    }
}

// a subseteq b for sorted vectors.
bool is_subset(const IndexSet& a, const IndexSet& b) {
    std::size_t j = 0;
    for (std::uint32_t v : a) {
        while (j < b.size() && b[j] < v)
            ++j;
        if (j == b.size() || b[j] != v)
            return false;
        ++j;
    }
    return true;
}

bool intersects(const IndexSet& a, const IndexSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return true;
        a[i] < b[j] ? ++i : ++j;
    }
    return false;
}

void check_population(const BinaryCode& code, std::uint32_t population) {
    if (population != code.num_cols())
        throw DimensionError("instance population does not match code size");
}

} // namespace

DefectiveSet DefectiveSet::make(std::uint32_t population, IndexSet members) {
    if (population < 1)
        throw DomainError("population must be positive");
    validate_index_set(members, population, "defective set");
    return {population, std::move(members)};
}

Complex Complex::make(std::uint32_t population, std::vector<IndexSet> parts) {
    if (population < 1)
        throw DomainError("population must be positive");
    for (auto& part : parts) {
        if (part.empty())
            throw DomainError("complex part must be nonempty");
        validate_index_set(part, population, "complex part");
    }
    std::sort(parts.begin(), parts.end());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (i != j && is_subset(parts[i], parts[j]))
                throw DomainError("complex parts must form an antichain");
    return {population, std::move(parts)};
}

InhibitorInstance InhibitorInstance::make(std::uint32_t population,
                                          IndexSet defectives,
                                          IndexSet inhibitors) {
    if (population < 1)
        throw DomainError("population must be positive");
    validate_index_set(defectives, population, "defective set");
    validate_index_set(inhibitors, population, "inhibitor set");
    if (defectives.empty())
        throw DomainError("defective set must be nonempty");
    if (intersects(defectives, inhibitors))
        throw DomainError("defectives and inhibitors must be disjoint");
    return {population, std::move(defectives), std::move(inhibitors)};
}

ResultVector result_disjunct(const BinaryCode& code, const DefectiveSet& p) {
    check_population(code, p.population);
    return disjunction_over(code, p.members);
}

ResultVector result_superset(const BinaryCode& code, const Complex& p) {
    check_population(code, p.population);
    ResultVector r(code.num_rows());
    for (const auto& part : p.parts)
        r |= conjunction_over(code, part);
    return r;
}

ResultVector result_inhibitor(const BinaryCode& code,
                              const InhibitorInstance& inst) {
    check_population(code, inst.population);
    return inhibit(disjunction_over(code, inst.defectives),
                   disjunction_over(code, inst.inhibitors));
}

DefectiveSetEnumerator::DefectiveSetEnumerator(std::uint32_t t, std::uint32_t s)
    : t_(t), s_(s) {
    if (s < 1 || s >= t)
        throw DomainError("need 0 < s < t");
}

std::optional<DefectiveSet> DefectiveSetEnumerator::next() {
    if (done_)
        return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        return DefectiveSet{t_, {}};
    }
    if (!next_combination(current_, t_)) {
        if (++size_ > s_) {
            done_ = true;
            return std::nullopt;
        }
        current_ = first_combination(size_);
    }
    return DefectiveSet{t_, current_};
}

ComplexEnumerator::ComplexEnumerator(std::uint32_t t, std::uint32_t s,
                                     std::uint32_t l)
    : t_(t), s_(s) {
    if (s < 1 || l < 1 || s + l > t)
        throw DomainError("need s >= 1, l >= 1, s + l <= t");
    std::uint64_t universe_size = 0;
    for (std::uint32_t k = 1; k <= l; ++k)
        universe_size += binomial(t, k);
    if (universe_size > (std::uint64_t(1) << 22))
        throw TooLargeError("part universe too large to enumerate");

    universe_.reserve(universe_size);
    IndexSet part;
    // Depth-first generation yields the parts in lexicographic order.
    auto gen = [&](auto&& self, std::uint32_t start) -> void {
        for (std::uint32_t v = start; v < t_; ++v) {
            part.push_back(v);
            universe_.push_back(part);
            if (part.size() < l)
                self(self, v + 1);
            part.pop_back();
        }
    };
    gen(gen, 0);
}

bool ComplexEnumerator::antichain_at(
    const std::vector<std::uint32_t>& picks) const {
    for (std::size_t i = 0; i < picks.size(); ++i)
        for (std::size_t j = 0; j < picks.size(); ++j)
            if (i != j &&
                is_subset(universe_[picks[i]], universe_[picks[j]]))
                return false;
    return true;
}

std::optional<Complex> ComplexEnumerator::next() {
    if (done_)
        return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        return Complex{t_, {}};
    }
    for (;;) {
        bool advanced = next_combination(picks_, static_cast<std::uint32_t>(
                                                     universe_.size()));
        if (!advanced) {
            if (++count_ > s_ || count_ > universe_.size()) {
                done_ = true;
                return std::nullopt;
            }
            picks_ = first_combination(count_);
        }
        if (antichain_at(picks_)) {
            std::vector<IndexSet> parts;
            parts.reserve(picks_.size());
            for (std::uint32_t i : picks_)
                parts.push_back(universe_[i]);
            return Complex{t_, std::move(parts)};
        }
    }
}

PiEnumerator::PiEnumerator(std::uint32_t t, std::uint32_t s, std::uint32_t iota)
    : t_(t), s_(s), iota_(iota) {
    if (s < 1 || s + iota > t)
        throw DomainError("need s >= 1, iota >= 0, s + iota <= t");
}

void PiEnumerator::reset_inhibitors() {
    complement_.clear();
    std::size_t k = 0;
    for (std::uint32_t v = 0; v < t_; ++v) {
        if (k < p_.size() && p_[k] == v)
            ++k;
        else
            complement_.push_back(v);
    }
    i_size_ = 0;
    i_picks_.clear();
}

std::optional<InhibitorInstance> PiEnumerator::next() {
    if (done_)
        return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        p_ = first_combination(1);
        reset_inhibitors();
    } else if (!advance_inhibitors()) {
        if (!next_combination(p_, t_)) {
            if (++p_size_ > s_) {
                done_ = true;
                return std::nullopt;
            }
            p_ = first_combination(p_size_);
        }
        reset_inhibitors();
    }
    IndexSet inhibitors;
    inhibitors.reserve(i_picks_.size());
    for (std::uint32_t i : i_picks_)
        inhibitors.push_back(complement_[i]);
    return InhibitorInstance{t_, p_, std::move(inhibitors)};
}

bool PiEnumerator::advance_inhibitors() {
    if (next_combination(i_picks_, static_cast<std::uint32_t>(
                                       complement_.size())))
        return true;
    if (i_size_ + 1 > iota_ || i_size_ + 1 > complement_.size())
        return false;
    i_picks_ = first_combination(++i_size_);
    return true;
}

std::string format_index_set(const IndexSet& set) {
    std::string out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i)
            out.push_back(',');
        out += std::to_string(set[i] + 1);
    }
    return out;
}

IndexSet parse_index_set(std::string_view text, std::uint32_t population) {
    IndexSet set;
    if (text.empty())
        return set;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string_view token = text.substr(
            pos, comma == std::string_view::npos ? text.size() - pos
                                                 : comma - pos);
        std::uint32_t value = 0;
        auto [ptr, ec] =
            std::from_chars(token.begin(), token.end(), value);
        if (ec != std::errc() || ptr != token.end() || value < 1 ||
            value > population)
            throw FormatError("bad index '" + std::string(token) + "'");
        set.push_back(value - 1);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    std::sort(set.begin(), set.end());
    for (std::size_t i = 1; i < set.size(); ++i)
        if (set[i] == set[i - 1])
            throw FormatError("duplicate index in set");
    return set;
}

std::string format_defective_set(const DefectiveSet& p) {
    return format_index_set(p.members);
}

DefectiveSet parse_defective_set(std::string_view text,
                                 std::uint32_t population) {
    return DefectiveSet::make(population, parse_index_set(text, population));
}

std::string format_complex(const Complex& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i)
            out.push_back(';');
        out += format_index_set(p.parts[i]);
    }
    return out;
}

Complex parse_complex(std::string_view text, std::uint32_t population) {
    std::vector<IndexSet> parts;
    if (!text.empty()) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto semi = text.find(';', pos);
            std::string_view token = text.substr(
                pos, semi == std::string_view::npos ? text.size() - pos
                                                    : semi - pos);
            parts.push_back(parse_index_set(token, population));
            if (semi == std::string_view::npos)
                break;
            pos = semi + 1;
        }
    }
    return Complex::make(population, std::move(parts));
}

std::string format_inhibitor_instance(const InhibitorInstance& inst) {
    return format_index_set(inst.defectives) + "|" +
           format_index_set(inst.inhibitors);
}

InhibitorInstance parse_inhibitor_instance(std::string_view text,
                                           std::uint32_t population) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw FormatError("inhibitor instance must have the form \"p|I\"");
    if (text.find('|', bar + 1) != std::string_view::npos)
        throw FormatError("inhibitor instance has more than one '|'");
    return InhibitorInstance::make(
        population, parse_index_set(text.substr(0, bar), population),
        parse_index_set(text.substr(bar + 1), population));
}

} // namespace gtcodes
