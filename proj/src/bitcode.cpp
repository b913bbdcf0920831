#include <gtcodes/bitcode.hpp>

#include <charconv>

namespace gtcodes {

BinaryCode::BinaryCode(std::size_t num_rows, std::size_t num_cols)
    : num_rows_(num_rows), columns_(num_cols, BitVector(num_rows)) {
    if (num_rows < 1 || num_cols < 1)
        throw DomainError("binary code needs at least one row and one column");
}

BinaryCode BinaryCode::from_columns(std::size_t num_rows,
                                    std::vector<BitVector> columns) {
    BinaryCode code(num_rows, columns.size());
    for (const auto& c : columns)
        if (c.size() != num_rows)
            throw DimensionError("column length does not match row count");
    code.columns_ = std::move(columns);
    return code;
}

BitVector BinaryCode::row(std::size_t n) const {
    BitVector r(num_cols());
    for (std::size_t u = 0; u < num_cols(); ++u)
        if (columns_[u].get(n))
            r.set(u, true);
    return r;
}

BitVector disjunction_over(const BinaryCode& code,
                           std::span<const std::uint32_t> columns) {
    BitVector r(code.num_rows());
    for (std::uint32_t u : columns) {
        if (u >= code.num_cols())
            throw DomainError("column index out of range");
        r |= code.column(u);
    }
    return r;
}

BitVector conjunction_over(const BinaryCode& code,
                           std::span<const std::uint32_t> columns) {
    if (columns.empty())
        throw DomainError("conjunction over an empty column set is undefined");
    if (columns[0] >= code.num_cols())
        throw DomainError("column index out of range");
    BitVector r = code.column(columns[0]);
    for (std::size_t i = 1; i < columns.size(); ++i) {
        if (columns[i] >= code.num_cols())
            throw DomainError("column index out of range");
        r &= code.column(columns[i]);
    }
    return r;
}

BinaryCode restrict_columns(const BinaryCode& code,
                            std::span<const std::uint32_t> keep) {
    if (keep.empty())
        throw DomainError("restrict_columns: empty selection");
    std::vector<bool> seen(code.num_cols(), false);
    std::vector<BitVector> cols;
    cols.reserve(keep.size());
    for (std::uint32_t u : keep) {
        if (u >= code.num_cols())
            throw DomainError("restrict_columns: column index out of range");
        if (seen[u])
            throw DomainError("restrict_columns: duplicate column index");
        seen[u] = true;
        cols.push_back(code.column(u));
    }
    return BinaryCode::from_columns(code.num_rows(), std::move(cols));
}

BinaryCode select_rows(const BinaryCode& code,
                       std::span<const std::uint32_t> keep) {
    if (keep.empty())
        throw DomainError("select_rows: empty selection");
    std::vector<BitVector> cols(code.num_cols(), BitVector(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= code.num_rows())
            throw DomainError("select_rows: row index out of range");
        for (std::size_t u = 0; u < code.num_cols(); ++u)
            if (code.get(keep[i], u))
                cols[u].set(i, true);
    }
    return BinaryCode::from_columns(keep.size(), std::move(cols));
}

namespace {

// Splits off the next line; returns false at end of input.
bool next_line(std::string_view& text, std::string_view& line) {
    if (text.empty())
        return false;
    auto pos = text.find('\n');
    if (pos == std::string_view::npos) {
        line = text;
        text = {};
    } else {
        line = text.substr(0, pos);
        text.remove_prefix(pos + 1);
    }
    return true;
}

std::size_t parse_size(std::string_view token, std::size_t line_no,
                       const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
    if (ec != std::errc() || ptr != token.end())
        throw FormatError(std::string("bad ") + what + " '" +
                              std::string(token) + "'",
                          line_no);
    return value;
}

} // namespace

BinaryCode parse_code(std::string_view text) {
    std::string_view line;
    if (!next_line(text, line))
        throw FormatError("empty input", 1);
    auto sp = line.find(' ');
    if (sp == std::string_view::npos)
        throw FormatError("header must be \"N t\"", 1);
    std::size_t n = parse_size(line.substr(0, sp), 1, "row count");
    std::size_t t = parse_size(line.substr(sp + 1), 1, "column count");
    if (n < 1 || t < 1)
        throw FormatError("dimensions must be positive", 1);

    BinaryCode code(n, t);
    for (std::size_t r = 0; r < n; ++r) {
        if (!next_line(text, line))
            throw FormatError("unexpected end of input, expected " +
                                  std::to_string(n) + " rows",
                              r + 2);
        if (line.size() != t)
            throw FormatError("row has " + std::to_string(line.size()) +
                                  " characters, expected " + std::to_string(t),
                              r + 2);
        for (std::size_t c = 0; c < t; ++c) {
            if (line[c] == '1')
                code.set(r, c, true);
            else if (line[c] != '0')
                throw FormatError("illegal character '" +
                                      std::string(1, line[c]) + "'",
                                  r + 2);
        }
    }
    while (next_line(text, line))
        if (!line.empty())
            throw FormatError("trailing content after last row", n + 2);
    return code;
}

std::string serialize_code(const BinaryCode& code) {
    std::string out = std::to_string(code.num_rows()) + " " +
                      std::to_string(code.num_cols()) + "\n";
    out.reserve(out.size() + code.num_rows() * (code.num_cols() + 1));
    for (std::size_t r = 0; r < code.num_rows(); ++r) {
        for (std::size_t c = 0; c < code.num_cols(); ++c)
            out.push_back(code.get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

} // namespace gtcodes
