#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gtcodes/bitvector.hpp>

namespace gtcodes {

/// Binary N x t incidence matrix. Row n encodes the pool G_n (samples tested
/// together in test n); column u is the codeword of sample u.
///
/// Columns are the primary representation: every decoder and checker works on
/// codewords, so they are stored as length-N bit vectors and rows are
/// materialized on demand. Indices are 0-based throughout the C++ API; the
/// text format and the CLI are 1-based.
class BinaryCode {
  public:
    BinaryCode(std::size_t num_rows, std::size_t num_cols);

    static BinaryCode from_columns(std::size_t num_rows,
                                   std::vector<BitVector> columns);

    std::size_t num_rows() const { return num_rows_; }
    std::size_t num_cols() const { return columns_.size(); }

    const BitVector& column(std::size_t u) const { return columns_[u]; }
    BitVector row(std::size_t n) const;

    bool get(std::size_t row, std::size_t col) const {
        return columns_[col].get(row);
    }
    void set(std::size_t row, std::size_t col, bool v) {
        columns_[col].set(row, v);
    }

    friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
        return a.num_rows_ == b.num_rows_ && a.columns_ == b.columns_;
    }

  private:
    std::size_t num_rows_;
    std::vector<BitVector> columns_;
};

/// Disjunction of the selected columns; the empty selection yields the
/// all-zero vector.
BitVector disjunction_over(const BinaryCode& code,
                           std::span<const std::uint32_t> columns);

/// Conjunction of the selected columns. The selection must be nonempty:
/// an empty conjunction has no defined value here and is rejected.
BitVector conjunction_over(const BinaryCode& code,
                           std::span<const std::uint32_t> columns);

/// New code keeping the given columns in the given order (0-based, distinct).
BinaryCode restrict_columns(const BinaryCode& code,
                            std::span<const std::uint32_t> keep);

/// New code keeping the given rows in the given order (0-based, distinct).
BinaryCode select_rows(const BinaryCode& code,
                       std::span<const std::uint32_t> keep);

/// Text format: line 1 is "N t", then N lines of exactly t characters from
/// {0,1}. Serialization ends with a newline; parsing accepts a missing final
/// newline.
BinaryCode parse_code(std::string_view text);
std::string serialize_code(const BinaryCode& code);

} // namespace gtcodes
