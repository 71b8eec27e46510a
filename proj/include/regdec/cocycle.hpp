#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "regdec/bicharacter.hpp"
#include "regdec/field.hpp"
#include "regdec/group.hpp"

namespace regdec {

/// A function alpha: G x G -> K* stored as a full |G| x |G| table in
/// canonical element order. Whether it is a normalized 2-cocycle is
/// decided by validate(); the constructor only checks shape.
class Cocycle2 {
 public:
  using Code = Field::Code;

  /// Groups up to this order are validated over every triple; larger ones
  /// are checked on kSampledTriples seeded random triples.
  static constexpr std::size_t kExhaustiveLimit = 256;
  static constexpr std::size_t kSampledTriples = 100000;

  Cocycle2(FinAbGroup group, FieldRef field, std::vector<Code> table);

  const FinAbGroup& group() const { return group_; }
  const FieldRef& field() const { return field_; }
  const std::vector<Code>& table() const { return table_; }
  Code value_index(std::size_t g, std::size_t h) const { return table_[g * group_.size() + h]; }
  FieldElement value(const GroupElement& g, const GroupElement& h) const;

  /// Normalization, then the identity
  ///   alpha(s, t+u) alpha(t, u) = alpha(s+t, u) alpha(s, t).
  ValidationReport validate() const;

  bool is_symmetric() const;

  bool operator==(const Cocycle2& o) const;

 private:
  FinAbGroup group_;
  FieldRef field_;
  std::vector<Code> table_;
};

/// beta(g,h) = alpha(g,h) / alpha(h,g). Rejects an invalid alpha.
Bicharacter induced_bicharacter(const Cocycle2& alpha);

/// A normalized cocycle inducing an alternating beta:
///   alpha(g, h) = prod_{i > j} beta(a_i, a_j)^{g_i h_j}.
Cocycle2 scheunert_cocycle(const Bicharacter& beta);

/// Product over factors of the carry cocycle: lambda_s when the s-th
/// coordinates overflow (g_s + h_s >= n_s), else 1. Symmetric.
/// Throws on a zero lambda.
Cocycle2 carry_cocycle(const FinAbGroup& g, const std::vector<FieldElement>& lambdas);

/// Ways the lambdas miss the "distinct and different from 1" hypothesis
/// used to force a noncommutative twist. Empty when they meet it.
std::vector<std::string> carry_cocycle_flags(const std::vector<FieldElement>& lambdas);

/// (g, h) -> (-1)^{g_2 h_1} on canonical residues. Rank must be >= 2.
Cocycle2 sign_cocycle(const FinAbGroup& g, const FieldRef& field);

/// Pointwise product.
Cocycle2 operator*(const Cocycle2& a, const Cocycle2& b);

/// The sign-times-carry construction on Z_p^3: for p = 3 the sign cocycle
/// times the carry cocycle with lambda = -1 on the third factor only, for
/// p > 3 the sign cocycle times the carry cocycle with lambda = (2, 3, 4).
struct CubedSignCarry {
  Cocycle2 cocycle;
  /// {s : alpha(s, x) = alpha(x, s) for all x}, as element indices.
  std::vector<std::size_t> commuting_set;
  GroupElement member_witness;                          // a_3
  std::pair<GroupElement, GroupElement> asymmetric_pair;  // expected alpha(x,y) != alpha(y,x)
  bool member_witness_commutes;
  bool pair_is_asymmetric;
};
CubedSignCarry cubed_sign_carry_cocycle(std::uint32_t p, const FieldRef& field);

}  // namespace regdec
