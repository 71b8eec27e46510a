#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "regdec/bicharacter.hpp"
#include "regdec/field.hpp"
#include "regdec/group.hpp"

namespace regdec {

/// Dense m x m matrix over a finite field, row-major.
class SquareMatrix {
 public:
  using Code = Field::Code;

  static constexpr std::size_t kMaxDim = 4096;

  SquareMatrix(FieldRef field, std::size_t dim, std::vector<Code> entries);
  static SquareMatrix identity(FieldRef field, std::size_t dim);
  static SquareMatrix scalar(const FieldElement& c, std::size_t dim);

  const FieldRef& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  Code at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  FieldElement element(std::size_t i, std::size_t j) const { return {field_, at(i, j)}; }
  const std::vector<Code>& codes() const { return a_; }

  SquareMatrix operator*(const SquareMatrix& o) const;
  SquareMatrix scaled(const FieldElement& c) const;
  SquareMatrix pow(std::uint64_t e) const;
  bool operator==(const SquareMatrix& o) const;

  /// Row i of the result is row perm[i] of this matrix.
  SquareMatrix permute_rows(const std::vector<std::size_t>& perm) const;

 private:
  void check_same(const SquareMatrix& o) const;

  FieldRef field_;
  std::size_t dim_;
  std::vector<Code> a_;
};

/// The matrix (beta(g,h))_{g,h} with rows and columns in canonical order.
struct DecompMatrix {
  SquareMatrix matrix;
  FinAbGroup ordering;
};

DecompMatrix decomposition_matrix(const Bicharacter& beta);

/// Gaussian elimination. For dim <= 5 the result is cross-checked against
/// the permutation expansion.
FieldElement determinant(const SquareMatrix& m);

/// sum over permutations of sign * prod a_{i, s(i)}. dim <= 8.
FieldElement determinant_by_permutations(const SquareMatrix& m);

std::size_t rank(const SquareMatrix& m);

/// (x_i^{j-1})_{i,j}
SquareMatrix vandermonde(const std::vector<FieldElement>& nodes);

/// Vandermonde on the nodes 1, xi, ..., xi^{n-1}: entry (a, c) = xi^{ac}.
SquareMatrix power_vandermonde(const FieldElement& xi, std::uint32_t n);

SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b);

/// Row permutation of n^2 rows indexed (i, j) sending row (i, j) to the
/// contents of row (j, i).
SquareMatrix perm_sigma(const SquareMatrix& m, std::uint32_t n);

/// (xi^{jk - il})_{(i,j),(k,l)} built entry by entry.
SquareMatrix commutation_matrix(const FieldElement& xi, std::uint32_t n);

/// D(xi, xi^{-1}) = P_sigma (V(xi) kron V(xi^{-1})). Throws ParameterError
/// unless xi^n = 1, and ConsistencyError if the factorized matrix differs
/// from commutation_matrix(xi, n).
SquareMatrix build_D(const FieldElement& xi, std::uint32_t n);

/// M^2 == |G| I. For a bicharacter M^2 has entry |G| at (g,h) when g - h
/// lies in the radical and 0 elsewhere, so this needs a trivial radical
/// unless p divides |G|.
bool square_identity(const DecompMatrix& m);

struct PauliGenerators {
  SquareMatrix x;  // diag(xi^{n-1}, ..., xi, 1)
  SquareMatrix y;  // e_{n,1} + sum_i e_{i,i+1}
};

/// Throws ParameterError unless xi has order exactly n, ConsistencyError
/// if XY != xi YX or the X^i Y^j do not span M_n.
PauliGenerators pauli_generators(std::uint32_t n, const FieldElement& xi);

struct DeterminantComparison {
  FieldElement det_decomposition;
  FieldElement det_d;
  bool equal;
};

/// det of the decomposition matrix of znxzn_bicharacter(n, e, f, xi)
/// against det D(xi, xi^{-1}).
DeterminantComparison decomposition_vs_d(std::uint32_t n, const FieldElement& e, const FieldElement& f,
                                const FieldElement& xi);

/// det D(xi, xi^{-1}) against two closed forms:
///   printed: xi^{(n-1)^2 (n - n^2) / 2} prod_{i=1}^{n-1} (1 - xi^i)
///   oracle:  (det V(xi) det V(xi^{-1}))^n
struct DetDReport {
  std::uint32_t n;
  std::uint64_t xi_order;
  FieldElement det_d;
  FieldElement printed;
  FieldElement oracle;
  bool printed_agrees_up_to_sign;
  bool oracle_agrees_up_to_sign;
  /// 1 - xi^i = 0 for some 1 <= i <= n - 1. det D is then 0 (checked).
  bool degenerate;
};
DetDReport det_d_report(std::uint32_t n, const FieldElement& xi);

/// CSV with a header row of group elements, one line per row element;
/// every cell is a quoted field-element string.
void write_csv(std::ostream& os, const DecompMatrix& m);

}  // namespace regdec
