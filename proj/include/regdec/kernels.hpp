#pragma once

// Hot loops shared by the algebra modules. Every kernel has a plain serial
// reference in `serial::` and an OpenMP version in `parallel::` with the same
// signature and bit-identical results; the library calls the parallel one.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "regdec/field.hpp"
#include "regdec/group.hpp"

namespace regdec::kernels {

using Code = Field::Code;
using Triple = std::array<std::size_t, 3>;

namespace serial {

/// Determinant of an n x n row-major matrix by elimination.
Code determinant(const Field& f, std::vector<Code> a, std::size_t n);

/// Row-major n x n product.
std::vector<Code> multiply(const Field& f, std::span<const Code> a, std::span<const Code> b, std::size_t n);

/// First (s,t,u) in lexicographic order breaking
///   table[s, t+u] * table[t, u] == table[s+t, u] * table[s, t].
std::optional<Triple> cocycle_violation(const Field& f, const FinAbGroup& g, std::span<const Code> table);

/// Same identity restricted to the listed triples; returns the first failing
/// entry in list order.
std::optional<Triple> cocycle_violation_in(const Field& f, const FinAbGroup& g, std::span<const Code> table,
                                           std::span<const Triple> triples);

/// Rows of an n x n matrix whose entries are all one.
std::vector<std::size_t> unit_rows(std::span<const Code> m, std::size_t n);

/// Indices w with m[w, x] == m[x, w] for every x.
std::vector<std::size_t> symmetric_indices(std::span<const Code> m, std::size_t n);

}  // namespace serial

namespace parallel {

Code determinant(const Field& f, std::vector<Code> a, std::size_t n);
std::vector<Code> multiply(const Field& f, std::span<const Code> a, std::span<const Code> b, std::size_t n);
std::optional<Triple> cocycle_violation(const Field& f, const FinAbGroup& g, std::span<const Code> table);
std::optional<Triple> cocycle_violation_in(const Field& f, const FinAbGroup& g, std::span<const Code> table,
                                           std::span<const Triple> triples);
std::vector<std::size_t> unit_rows(std::span<const Code> m, std::size_t n);
std::vector<std::size_t> symmetric_indices(std::span<const Code> m, std::size_t n);

}  // namespace parallel

/// Rank of a rows x cols matrix (serial only; used for small spanning checks).
std::size_t rank(const Field& f, std::vector<Code> a, std::size_t rows, std::size_t cols);

}  // namespace regdec::kernels
