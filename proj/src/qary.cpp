#include <gtcodes/qary.hpp>

#include <charconv>

namespace gtcodes {

QaryCode::QaryCode(std::size_t num_rows, std::size_t num_cols, std::uint32_t q)
    : num_rows_(num_rows), num_cols_(num_cols), q_(q),
      entries_(num_rows * num_cols, 1) {
    if (num_rows < 1 || num_cols < 1)
        throw DomainError("q-ary code needs at least one row and one column");
    if (q < 2)
        throw DomainError("alphabet size must be at least 2");
}

void QaryCode::set(std::size_t row, std::size_t col, std::uint32_t symbol) {
    if (symbol < 1 || symbol > q_)
        throw DomainError("symbol out of alphabet range");
    entries_[row * num_cols_ + col] = symbol;
}

QaryCode take_rows(const QaryCode& code, std::size_t count) {
    if (count < 1 || count > code.num_rows())
        throw DomainError("row count out of range");
    QaryCode out(count, code.num_cols(), code.alphabet_size());
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < code.num_cols(); ++c)
            out.set(r, c, code.get(r, c));
    return out;
}

namespace {

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

std::vector<std::uint64_t> parse_numbers(std::string_view line,
                                         std::size_t line_no) {
    std::vector<std::uint64_t> values;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ')
            ++pos;
        if (pos == line.size())
            break;
        auto end = line.find(' ', pos);
        if (end == std::string_view::npos)
            end = line.size();
        std::uint64_t v = 0;
        auto token = line.substr(pos, end - pos);
        auto [ptr, ec] = std::from_chars(token.begin(), token.end(), v);
        if (ec != std::errc() || ptr != token.end())
            throw FormatError("bad number '" + std::string(token) + "'",
                              line_no);
        values.push_back(v);
        pos = end;
    }
    return values;
}

} // namespace

QaryCode parse_qary_code(std::string_view text) {
    std::string_view line;
    if (!next_line(text, line))
        throw FormatError("empty input", 1);
    auto header = parse_numbers(line, 1);
    if (header.size() != 3)
        throw FormatError("header must be \"N t q\"", 1);
    const std::uint64_t n = header[0], t = header[1], q = header[2];
    if (n < 1 || t < 1 || q < 2 || q > 65536)
        throw FormatError("bad dimensions", 1);

    QaryCode code(n, t, static_cast<std::uint32_t>(q));
    for (std::size_t r = 0; r < n; ++r) {
        if (!next_line(text, line))
            throw FormatError("unexpected end of input, expected " +
                                  std::to_string(n) + " rows",
                              r + 2);
        auto row = parse_numbers(line, r + 2);
        if (row.size() != t)
            throw FormatError("row has " + std::to_string(row.size()) +
                                  " symbols, expected " + std::to_string(t),
                              r + 2);
        for (std::size_t c = 0; c < t; ++c) {
            if (row[c] < 1 || row[c] > q)
                throw FormatError("symbol " + std::to_string(row[c]) +
                                      " outside 1.." + std::to_string(q),
                                  r + 2);
            code.set(r, c, static_cast<std::uint32_t>(row[c]));
        }
    }
    while (next_line(text, line))
        if (!line.empty())
            throw FormatError("trailing content after last row", n + 2);
    return code;
}

std::string serialize_qary_code(const QaryCode& code) {
    std::string out = std::to_string(code.num_rows()) + " " +
                      std::to_string(code.num_cols()) + " " +
                      std::to_string(code.alphabet_size()) + "\n";
    for (std::size_t r = 0; r < code.num_rows(); ++r) {
        for (std::size_t c = 0; c < code.num_cols(); ++c) {
            if (c)
                out.push_back(' ');
            out += std::to_string(code.get(r, c));
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace gtcodes
