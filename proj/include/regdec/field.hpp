#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace regdec {

class Field;
using FieldRef = std::shared_ptr<const Field>;

/// GF(p^k) for an odd prime p, realised as GF(p)[x]/(m(x)) with m monic
/// irreducible of degree k.
///
/// Elements are packed into a `Code`: the coefficient of x^i is the i-th
/// base-p digit. Zero is code 0 and one is code 1. Fields with at most
/// kTableLimit elements carry discrete log/exp tables; larger fields fall
/// back to polynomial multiplication.
class Field {
 public:
  using Code = std::uint32_t;

  static constexpr std::uint64_t kTableLimit = 1u << 20;

  /// Smallest monic irreducible modulus of degree k, ordered by code
  /// (c_{k-1} most significant, then down to c_0).
  static FieldRef make(std::uint32_t p, unsigned k);

  /// Field with an explicit modulus (k+1 coefficients, c_0 first, monic).
  static FieldRef with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t size() const { return q_; }
  std::uint64_t unit_group_order() const { return q_ - 1; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool has_tables() const { return !log_.empty(); }

  static constexpr Code zero() { return 0; }
  static constexpr Code one() { return 1; }
  Code from_int(std::int64_t v) const;
  Code from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Code a) const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  /// Throws ParameterError on zero.
  Code inv(Code a) const;
  /// Square-and-multiply; negative exponents go through inv.
  Code pow(Code a, std::int64_t e) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Code a) const;

  /// "coeffs=[c0,...] mod (m0,...,mk) over GF(p)"
  std::string to_string(Code a) const;
  std::string describe() const;

  bool same_as(const Field& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);
  Code poly_mul(Code a, Code b) const;
  Code poly_pow(Code a, std::uint64_t e) const;
  void build_tables();

  std::uint32_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> digit_weight_;
  std::vector<std::uint32_t> exp_;  // 2(q-1) entries so log sums need no reduction
  std::vector<std::uint32_t> log_;
};

/// Checks irreducibility of a monic polynomial over GF(p) with the gcd test
/// against x^{p^i} - x for i <= deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

/// A field element bound to its field.
class FieldElement {
 public:
  using Code = Field::Code;

  FieldElement(FieldRef field, Code code) : field_(std::move(field)), code_(code) {}

  static FieldElement from_int(FieldRef field, std::int64_t v) {
    auto c = field->from_int(v);
    return {std::move(field), c};
  }

  const FieldRef& field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(code_)}; }
  FieldElement inv() const { return {field_, field_->inv(code_)}; }
  FieldElement pow(std::int64_t e) const { return {field_, field_->pow(code_, e)}; }
  std::uint64_t order() const { return field_->order(code_); }

  bool operator==(const FieldElement& o) const;
  std::string to_string() const { return field_->to_string(code_); }

 private:
  void check_same(const FieldElement& o) const;

  FieldRef field_;
  Code code_;
};

/// Smallest GF(p^k) with t | p^k - 1, together with an element of exact
/// multiplicative order t. Sampling is seeded, so the result is reproducible.
std::pair<FieldRef, FieldElement> root_of_unity(std::uint32_t p, std::uint64_t t);

/// A deterministic element of exact order t in an existing field. Throws
/// ParameterError when t does not divide |K*|.
FieldElement element_of_order(const FieldRef& field, std::uint64_t t);

}  // namespace regdec
