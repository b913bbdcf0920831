#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include <gtcodes/bitcode.hpp>
#include <gtcodes/qary.hpp>

namespace gtcodes {

/// Superimposed (s,l)-code of size t and length min{C(t,s), C(t,l)}: rows are
/// either all weight-l vectors or all vectors with exactly s zeros, whichever
/// family is smaller (weight-l wins ties). Rows are ordered lexicographically
/// by their support.
BinaryCode trivial_code(std::uint32_t t, std::uint32_t s, std::uint32_t l);

/// The t x t identity matrix, t >= 2.
BinaryCode identity_code(std::uint32_t t);

struct ReedSolomonCode {
    QaryCode code;
    MdsParams params;
};

/// Extended Reed-Solomon code over GF(q): one column per polynomial of degree
/// at most lambda (coefficient tuples (c_0,...,c_lambda) in lexicographic
/// canonical-integer order, c_0 most significant), rows 1..q evaluating at the
/// field elements 0..q-1 plus a final leading-coefficient row. Symbols are
/// shifted to {1,...,q}. Parameters (q, lambda+1, q+1), distance q-lambda+1.
ReedSolomonCode reed_solomon(std::uint32_t q, std::uint32_t lambda);

/// Code concatenation: every symbol theta of the external q-ary code is
/// replaced by the theta-th codeword of the internal binary code, which must
/// have exactly q columns. Output: (N_ext * N_int) x t_ext.
BinaryCode concatenate(const QaryCode& external, const BinaryCode& internal);

/// Keeps the first occurrence of every distinct row, preserving order.
BinaryCode dedupe_rows(const BinaryCode& code);

/// Reed-Solomon concatenation pipeline: builds reed_solomon(q, lambda), keeps
/// its first s*l*lambda + 1 rows, and concatenates with the given internal
/// (s,l)-code of size q. Output size t = q^(lambda+1), length
/// N_int * (s*l*lambda + 1). Requires q >= s*l*lambda.
BinaryCode rs_concatenation(std::uint32_t s, std::uint32_t l,
                            std::uint32_t lambda, std::uint32_t q,
                            const BinaryCode& internal);

/// The two matrices used in the worked examples: "eq8" is the 9 x 12 binary
/// superimposed 2-code, "c4" the 3 x 8 quaternary separating (2,2)-code.
std::variant<BinaryCode, QaryCode> builtin(std::string_view name);

BinaryCode builtin_eq8();
QaryCode builtin_c4();

} // namespace gtcodes
