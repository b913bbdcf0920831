#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gtcodes/error.hpp>

namespace gtcodes {

/// N x t matrix over the symbol alphabet {1,...,q}, stored row-major.
class QaryCode {
  public:
    QaryCode(std::size_t num_rows, std::size_t num_cols, std::uint32_t q);

    std::size_t num_rows() const { return num_rows_; }
    std::size_t num_cols() const { return num_cols_; }
    std::uint32_t alphabet_size() const { return q_; }

    std::uint32_t get(std::size_t row, std::size_t col) const {
        return entries_[row * num_cols_ + col];
    }
    void set(std::size_t row, std::size_t col, std::uint32_t symbol);

    friend bool operator==(const QaryCode&, const QaryCode&) = default;

  private:
    std::size_t num_rows_, num_cols_;
    std::uint32_t q_;
    std::vector<std::uint32_t> entries_;
};

/// Prefix of the rows, in order.
QaryCode take_rows(const QaryCode& code, std::size_t count);

/// Text format: line 1 is "N t q", then N lines of t space-separated symbols
/// in 1..q.
QaryCode parse_qary_code(std::string_view text);
std::string serialize_qary_code(const QaryCode& code);

/// Parameters of a maximum-distance-separable code: t = q^k and d = n-k+1.
struct MdsParams {
    std::uint32_t q;
    std::uint32_t k;
    std::uint32_t n;
    std::uint32_t d;

    friend bool operator==(const MdsParams&, const MdsParams&) = default;
};

} // namespace gtcodes
