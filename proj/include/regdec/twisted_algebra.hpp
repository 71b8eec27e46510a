#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "regdec/cocycle.hpp"

namespace regdec {

class TwistedGroupAlgebra;

/// Sparse element sum_g c_g x_g of a twisted group algebra. Zero
/// coefficients are never stored.
class AlgebraElement {
 public:
  using Code = Field::Code;

  const std::map<std::size_t, Code>& terms() const { return terms_; }
  FieldElement coefficient(const GroupElement& g) const;
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement scaled(const FieldElement& c) const;
  bool operator==(const AlgebraElement& o) const;

  /// [(element, coefficient), ...] in canonical group order.
  std::string to_string() const;

 private:
  friend class TwistedGroupAlgebra;
  AlgebraElement(std::shared_ptr<const Cocycle2> alpha, std::map<std::size_t, Code> terms);
  void check_same(const AlgebraElement& o) const;

  std::shared_ptr<const Cocycle2> alpha_;
  std::map<std::size_t, Code> terms_;
};

/// K^alpha G: basis {x_g}, x_g x_h = alpha(g, h) x_{g+h}.
class TwistedGroupAlgebra {
 public:
  /// Rejects alpha unless it is a valid normalized cocycle.
  explicit TwistedGroupAlgebra(Cocycle2 alpha);

  const Cocycle2& cocycle() const { return *alpha_; }
  const FinAbGroup& group() const { return alpha_->group(); }
  const FieldRef& field() const { return alpha_->field(); }

  AlgebraElement zero() const { return {alpha_, {}}; }
  AlgebraElement basis(const GroupElement& g) const;
  AlgebraElement unit() const { return basis(group().zero()); }
  AlgebraElement element(const std::vector<std::pair<GroupElement, FieldElement>>& terms) const;

  AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) const;
  /// alpha(g, -g)^{-1} x_{-g}
  AlgebraElement basis_inverse(const GroupElement& g) const;

  /// {w : alpha(g, w) = alpha(w, g) for all g}; the x_w span the centre.
  std::vector<GroupElement> center_basis() const;

  struct Minimality {
    bool minimal;
    bool columns_distinct;
    std::size_t center_dimension;
    std::size_t radical_order;
  };
  /// Evaluates the three equivalent criteria (distinct columns of the
  /// decomposition matrix, one-dimensional centre, trivial radical) and
  /// throws ConsistencyError unless they agree.
  Minimality minimality() const;
  bool is_minimal() const { return minimality().minimal; }

 private:
  std::shared_ptr<const Cocycle2> alpha_;
};

}  // namespace regdec
