#include <gtcodes/construct.hpp>

#include <string>
#include <unordered_set>

#include <gtcodes/combin.hpp>
#include <gtcodes/galois.hpp>

namespace gtcodes {

namespace {

constexpr std::uint64_t kMaxRows = std::uint64_t(1) << 22;
constexpr std::uint64_t kMaxCols = std::uint64_t(1) << 20;

BinaryCode rows_of_weight(std::uint32_t t, std::uint32_t w, std::uint64_t n) {
    BinaryCode code(n, t);
    auto support = first_combination(w);
    std::size_t r = 0;
    do {
        for (std::uint32_t u : support)
            code.set(r, u, true);
        ++r;
    } while (next_combination(support, t));
    return code;
}

} // namespace

BinaryCode trivial_code(std::uint32_t t, std::uint32_t s, std::uint32_t l) {
    if (s < 1 || l < 1 || s + l > t)
        throw DomainError("need s >= 1, l >= 1, s + l <= t");
    std::uint64_t by_ones = binomial(t, l);
    std::uint64_t by_zeros = binomial(t, s);
    std::uint64_t n = by_ones <= by_zeros ? by_ones : by_zeros;
    if (n >= kMaxRows)
        throw TooLargeError("trivial code would have too many rows");
    if (by_ones <= by_zeros)
        return rows_of_weight(t, l, n);
    return rows_of_weight(t, t - s, n);
}

BinaryCode identity_code(std::uint32_t t) {
    if (t < 2)
        throw DomainError("identity code needs t >= 2");
    BinaryCode code(t, t);
    for (std::uint32_t u = 0; u < t; ++u)
        code.set(u, u, true);
    return code;
}

ReedSolomonCode reed_solomon(std::uint32_t q, std::uint32_t lambda) {
    if (lambda < 1 || lambda > q - 1)
        throw DomainError("need 1 <= lambda <= q - 1");
    Field field(q);

    std::uint64_t t = 1;
    for (std::uint32_t i = 0; i <= lambda; ++i) {
        t *= q;
        if (t > kMaxCols)
            throw TooLargeError("Reed-Solomon code would have too many columns");
    }
    std::uint32_t n = q + 1;

    QaryCode code(n, t, q);
    std::vector<std::uint32_t> coeffs(lambda + 1);
    for (std::uint64_t j = 0; j < t; ++j) {
        // Coefficient tuple (c_0,...,c_lambda) with c_0 most significant.
        std::uint64_t rem = j;
        for (std::uint32_t i = lambda + 1; i-- > 0;) {
            coeffs[i] = static_cast<std::uint32_t>(rem % q);
            rem /= q;
        }
        for (std::uint32_t x = 0; x < q; ++x)
            code.set(x, j, field.eval_poly(coeffs, x) + 1);
        code.set(q, j, coeffs[lambda] + 1);
    }
    return {std::move(code),
            MdsParams{q, lambda + 1, n, n - (lambda + 1) + 1}};
}

BinaryCode concatenate(const QaryCode& external, const BinaryCode& internal) {
    if (internal.num_cols() != external.alphabet_size())
        throw DimensionError(
            "internal code size must equal the external alphabet size");
    std::uint64_t n =
        std::uint64_t(external.num_rows()) * internal.num_rows();
    if (n >= kMaxRows)
        throw TooLargeError("concatenation would have too many rows");

    std::vector<BitVector> columns(external.num_cols(), BitVector(n));
    for (std::size_t u = 0; u < external.num_cols(); ++u) {
        for (std::size_t block = 0; block < external.num_rows(); ++block) {
            const BitVector& word = internal.column(external.get(block, u) - 1);
            std::size_t base = block * internal.num_rows();
            for (std::size_t i = 0; i < internal.num_rows(); ++i)
                if (word.get(i))
                    columns[u].set(base + i, true);
        }
    }
    return BinaryCode::from_columns(n, std::move(columns));
}

BinaryCode dedupe_rows(const BinaryCode& code) {
    std::unordered_set<std::string> seen;
    std::vector<std::uint32_t> keep;
    for (std::size_t n = 0; n < code.num_rows(); ++n)
        if (seen.insert(code.row(n).to_string()).second)
            keep.push_back(static_cast<std::uint32_t>(n));
    if (keep.size() == code.num_rows())
        return code;
    return select_rows(code, keep);
}

BinaryCode rs_concatenation(std::uint32_t s, std::uint32_t l,
                            std::uint32_t lambda, std::uint32_t q,
                            const BinaryCode& internal) {
    if (s < 1 || l < 1 || lambda < 1)
        throw DomainError("need s, l, lambda >= 1");
    std::uint64_t needed = std::uint64_t(s) * l * lambda;
    if (q < needed)
        throw DomainError("need q >= s*l*lambda");
    if (internal.num_cols() != q)
        throw DimensionError("internal code size must equal q");
    ReedSolomonCode rs = reed_solomon(q, lambda);
    return concatenate(take_rows(rs.code, needed + 1), internal);
}

BinaryCode builtin_eq8() {
    static constexpr const char* rows[] = {
        "001111000000",
        "001000111000",
        "001000000111",
        "010100100100",
        "010010010010",
        "010001001001",
        "100100001010",
        "100010100001",
        "100001010100",
    };
    BinaryCode code(9, 12);
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 12; ++c)
            if (rows[r][c] == '1')
                code.set(r, c, true);
    return code;
}

QaryCode builtin_c4() {
    static constexpr std::uint32_t rows[3][8] = {
        {4, 2, 3, 1, 2, 4, 1, 3},
        {2, 4, 1, 3, 2, 4, 1, 3},
        {1, 1, 2, 2, 3, 3, 4, 4},
    };
    QaryCode code(3, 8, 4);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 8; ++c)
            code.set(r, c, rows[r][c]);
    return code;
}

std::variant<BinaryCode, QaryCode> builtin(std::string_view name) {
    if (name == "eq8")
        return builtin_eq8();
    if (name == "c4")
        return builtin_c4();
    throw DomainError("unknown builtin '" + std::string(name) +
                      "' (expected \"eq8\" or \"c4\")");
}

} // namespace gtcodes
