#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "regdec/field.hpp"
#include "regdec/group.hpp"

namespace regdec {

/// First violated law found by a validation pass. `law` is a short stable
/// tag (e.g. "antisymmetry", "cocycle-identity"), `witness` names the
/// offending arguments.
struct LawViolation {
  std::string law;
  std::string witness;
};

struct ValidationReport {
  std::optional<LawViolation> violation;
  bool exhaustive = true;     // false when some law was only sampled
  std::uint64_t checks = 0;   // number of identities evaluated

  bool valid() const { return !violation.has_value(); }
};

/// A bicharacter beta: G x G -> K*, stored by its values on pairs of cyclic
/// generators: table(i, j) = beta(a_i, a_j). Values on arbitrary elements
/// follow from bilinearity.
///
/// Construction only checks shape and that entries are nonzero; use
/// validate() for the bicharacter laws.
class Bicharacter {
 public:
  using Code = Field::Code;

  Bicharacter(FinAbGroup group, FieldRef field, std::vector<Code> gen_table);

  const FinAbGroup& group() const { return group_; }
  const FieldRef& field() const { return field_; }
  Code table(std::size_t i, std::size_t j) const { return table_[i * group_.rank() + j]; }
  const std::vector<Code>& gen_table() const { return table_; }

  FieldElement eval(const GroupElement& g, const GroupElement& h) const;
  Code eval_index(std::size_t g, std::size_t h) const;

  /// Full |G| x |G| value table in canonical element order.
  std::vector<Code> value_matrix() const;

  ValidationReport validate() const;

  /// Largest subgroup pairing trivially with everything.
  Subgroup radical() const;

  bool is_alternating() const;

  bool operator==(const Bicharacter& o) const;

 private:
  // chi_g(a_j) = beta(g, a_j)
  std::vector<Code> row_character(std::size_t g) const;

  FinAbGroup group_;
  FieldRef field_;
  std::vector<Code> table_;
};

/// Outcome of the column-equality minimality test.
struct MinimalityCertificate {
  bool minimal = true;
  /// Two distinct elements whose columns coincide, when not minimal.
  std::optional<std::pair<GroupElement, GroupElement>> equal_columns;
  std::size_t radical_order = 1;
};

/// No two columns of the value matrix coincide. Cross-checked against the
/// radical being trivial; throws ConsistencyError if the two disagree.
MinimalityCertificate check_minimal(const Bicharacter& beta);

struct QuotientBicharacter {
  QuotientPresentation presentation;
  Bicharacter bicharacter;
};

/// The induced bicharacter on G / H. H must be exactly the radical of beta;
/// anything else is rejected with a witness.
QuotientBicharacter quotient_by_radical(const Bicharacter& beta, const Subgroup& h);

/// Sum over g of beta(g, a).
FieldElement character_sum(const Bicharacter& beta, const GroupElement& a);

/// Bicharacter on Z_n x Z_n with f = beta((1,0),(1,0)), e = beta((0,1),(0,1))
/// and xi = beta((0,1),(1,0)); on elements it is f^{ik} e^{jl} xi^{jk-il}.
/// Requires e^2 = f^2 = 1, xi^n = 1, and e = f = 1 for odd n.
Bicharacter znxzn_bicharacter(std::uint32_t n, const FieldElement& e, const FieldElement& f, const FieldElement& xi);

/// ((i,j),(k,l)) -> (-1)^{ik+jl} zeta^{jk-il} on Z_{2t} x Z_{2t}, zeta a
/// primitive t-th root of unity in the smallest extension of GF(p) holding
/// one. t must be an odd prime different from p.
Bicharacter sign_root_bicharacter(std::uint32_t p, std::uint32_t t);

/// Uniform over alternating bicharacters on g with values in field: each
/// beta(a_i, a_j), i < j, is a random root of unity of order dividing
/// gcd(n_i, n_j, |K*|).
Bicharacter random_alternating_bicharacter(const FinAbGroup& g, const FieldRef& field, std::mt19937_64& rng);

}  // namespace regdec
