#pragma once

#include <cstddef>
#include <vector>

#include "pqga/matrix.hpp"

namespace pqga {

// Classical gate-index word sequence. words[0] is applied first, so the
// realized operator is gates[words[l-1]] * ... * gates[words[0]].
// Word 0 is the idle (identity) gate.
struct Program {
    std::vector<int> words;

    int length() const { return static_cast<int>(words.size()); }
    bool empty() const { return words.empty(); }
};

// Amplitude vector over the composite program (x) data space.
//
// Layout, fixed once: the program register is the high-order factor and the
// data register the low-order one. The program index is a k-digit base-M
// number whose least significant digit is the slot executed next; global
// index = program_index * data_dim + data_index.
struct StateVector {
    int slots;     // k
    int word_dim;  // M
    int data_dim;  // N
    std::vector<cxd> amps; // length M^k * N

    std::size_t program_dim() const;
    std::size_t size() const { return amps.size(); }
    double norm() const;
};

// M^k with overflow check; desk-scale guard.
std::size_t checked_pow(int base, int exp);

// Basis index of the padded program |0;...;0;P_l;...;P_1>. Idle padding
// occupies the leading (high-order) slots. Throws ProgramTooLong,
// IndexOutOfRange.
std::size_t encode_program(const Program& p, int slots, int word_dim);

// Inverse of encode_program; strips the leading idle padding, so the last
// word of a nonempty result is never idle. Throws IndexOutOfRange.
Program decode_program(std::size_t index, int slots, int word_dim);

// |program_index> (x) data, data normalized within 1e-10.
// Throws IndexOutOfRange, NotNormalized, Error (data_dim < 1).
StateVector make_product_state(std::size_t program_index, const std::vector<cxd>& data,
                               int slots, int word_dim);

struct SchmidtResult {
    bool product;                  // second singular value <= eps
    std::vector<cxd> program_part; // leading left factor, unit norm
    std::vector<cxd> data_part;    // leading right factor, unit norm
    double leading_singular;
    double second_singular;
};

// Schmidt test across an explicit left_dim x right_dim cut. The factor phase
// convention fixes the first nonzero program amplitude to be real positive,
// with the compensating phase folded into the data factor, so
// leading_singular * (program_part (x) data_part) reproduces the input.
SchmidtResult schmidt_split(const std::vector<cxd>& amps, std::size_t left_dim,
                            int right_dim, Tolerance tol);

// Schmidt test across the program/data cut of a state.
SchmidtResult schmidt_check(const StateVector& state, Tolerance tol);

double vector_norm(const std::vector<cxd>& v);
cxd inner_product(const std::vector<cxd>& a, const std::vector<cxd>& b);

// Largest entrywise magnitude of a - b; vectors must have equal length.
double max_abs_diff(const std::vector<cxd>& a, const std::vector<cxd>& b);

} // namespace pqga
