#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "regdec/bicharacter.hpp"

namespace regdec {

/// x_i^{(g)}. Letters are ordered by index, then by grade in canonical order.
struct GradedLetter {
  std::uint32_t var = 1;
  GroupElement grade;

  bool operator==(const GradedLetter&) const = default;
  auto operator<=>(const GradedLetter&) const = default;
};

using GradedWord = std::vector<GradedLetter>;

/// Sum of the grades; the empty word has degree 0.
GroupElement homogeneous_degree(const GradedWord& w, const FinAbGroup& g);

/// scalar * word with word sorted. scalar is zero exactly when the word
/// vanishes in B, and the word is then empty.
struct NormalForm {
  FieldElement scalar;
  GradedWord word;

  bool is_zero() const { return scalar.is_zero(); }
};

/// Sorts the letters using x^{(g)} y^{(h)} = beta(g,h) y^{(h)} x^{(g)}: every
/// pair standing in the wrong order with grades (left g, right h)
/// contributes beta(g, h). A repeated letter of grade g with beta(g,g) = -1
/// makes the word zero.
NormalForm normalize(const GradedWord& w, const Bicharacter& beta);

/// "x1^(0,1)*x2^(1,0)"; the empty word is "1".
GradedWord parse_word(std::string_view text, const FinAbGroup& g);
std::string word_to_string(const GradedWord& w);

/// Element of B: normal-form words with nonzero coefficients.
class GradedPoly {
 public:
  using Code = Field::Code;

  explicit GradedPoly(FieldRef field) : field_(std::move(field)) {}
  static GradedPoly one(FieldRef field);
  static GradedPoly monomial(const GradedWord& w, const Bicharacter& beta);

  const FieldRef& field() const { return field_; }
  const std::map<GradedWord, Code>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GradedPoly operator+(const GradedPoly& o) const;
  GradedPoly scaled(const FieldElement& c) const;
  bool operator==(const GradedPoly& o) const;

  std::string to_string() const;

 private:
  friend GradedPoly mul(const GradedPoly& u, const GradedPoly& v, const Bicharacter& beta);
  void add_term(const GradedWord& w, Code c);

  FieldRef field_;
  std::map<GradedWord, Code> terms_;
};

/// Concatenate, then normalize; extended bilinearly.
GradedPoly mul(const GradedPoly& u, const GradedPoly& v, const Bicharacter& beta);

struct RegularityWitness {
  GradedWord word;  // x_1^{(g_1)} ... x_n^{(g_n)}
  NormalForm normal_form;
};

/// A word with the given grades and distinct indices; its normal form is
/// nonzero (ConsistencyError otherwise).
RegularityWitness regularity_witness(const Bicharacter& beta, const std::vector<GroupElement>& grades);

}  // namespace regdec
