#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace regdec {

/// Element of a product of cyclic groups, one residue per factor.
struct GroupElement {
  std::vector<std::uint32_t> coords;

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

/// Z_{n1} x ... x Z_{nr} in additive notation. Elements are enumerated in
/// lexicographic coordinate order (last coordinate fastest), zero first; an
/// element's position in that enumeration is its index.
///
/// The trivial group is the single factor Z_1. Every other factor order is
/// at least 2.
class FinAbGroup {
 public:
  static constexpr std::size_t kMaxOrder = 65536;

  explicit FinAbGroup(std::vector<std::uint32_t> orders);
  static FinAbGroup trivial() { return FinAbGroup({1}); }

  std::size_t rank() const { return orders_.size(); }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::size_t size() const { return size_; }
  bool is_trivial() const { return size_ == 1; }

  GroupElement zero() const { return GroupElement{std::vector<std::uint32_t>(rank(), 0)}; }
  /// i-th cyclic generator a_i.
  GroupElement basis(std::size_t i) const;
  GroupElement make(std::vector<std::int64_t> coords) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement times(std::int64_t m, const GroupElement& a) const;
  bool contains(const GroupElement& a) const;

  std::size_t index(const GroupElement& a) const;
  GroupElement element(std::size_t index) const;
  /// Decodes into a caller buffer of length rank(); no allocation.
  void decode(std::size_t index, std::span<std::uint32_t> out) const;
  std::vector<GroupElement> elements() const;

  std::size_t add_index(std::size_t a, std::size_t b) const;
  std::size_t neg_index(std::size_t a) const;

  /// "Z_{n1} x Z_{n2} x ..."
  std::string to_string() const;
  static std::string element_to_string(const GroupElement& a);

  bool operator==(const FinAbGroup& o) const { return orders_ == o.orders_; }

 private:
  void require(const GroupElement& a) const;

  std::vector<std::uint32_t> orders_;
  std::vector<std::size_t> strides_;
  std::size_t size_;
};

/// A subgroup, stored as its parent, generators and the sorted set of
/// element indices.
class Subgroup {
 public:
  /// Closure of the generators.
  static Subgroup generate(const FinAbGroup& parent, const std::vector<GroupElement>& gens);
  /// Checks that the given element set is closed; throws ParameterError
  /// with a witness otherwise.
  static Subgroup from_elements(const FinAbGroup& parent, std::vector<std::size_t> indices);

  const FinAbGroup& parent() const { return parent_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains_index(std::size_t i) const { return in_[i]; }
  bool contains(const GroupElement& a) const { return in_[parent_.index(a)]; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_.size(); }

  bool operator==(const Subgroup& o) const { return parent_ == o.parent_ && members_ == o.members_; }

 private:
  Subgroup(FinAbGroup parent, std::vector<GroupElement> gens, std::vector<std::size_t> members);

  FinAbGroup parent_;
  std::vector<GroupElement> generators_;
  std::vector<std::size_t> members_;
  std::vector<bool> in_;
};

/// Smith normal form D = P A Q of an integer matrix, with the column
/// transform Q kept.
struct SmithForm {
  std::vector<std::int64_t> diagonal;       // min(rows, cols) entries, non-negative
  std::vector<std::vector<std::int64_t>> q;  // cols x cols, unimodular
};
SmithForm smith_normal_form(std::vector<std::vector<std::int64_t>> a, std::size_t cols);

/// G/H as a coordinate group, with the projection G -> G/H.
class QuotientPresentation {
 public:
  QuotientPresentation(const FinAbGroup& parent, const Subgroup& sub);

  const FinAbGroup& parent() const { return parent_; }
  const Subgroup& subgroup() const { return sub_; }
  const FinAbGroup& quotient() const { return quotient_; }

  GroupElement project(const GroupElement& a) const;
  std::size_t project_index(std::size_t parent_index) const { return proj_[parent_index]; }
  /// Smallest-index parent element in the coset.
  GroupElement lift(const GroupElement& q) const;
  const std::vector<std::size_t>& coset_representatives() const { return reps_; }

 private:
  FinAbGroup parent_;
  Subgroup sub_;
  FinAbGroup quotient_;
  std::vector<std::vector<std::int64_t>> columns_;  // one column of Q per kept factor
  std::vector<std::size_t> proj_;
  std::vector<std::size_t> reps_;
};

/// Convenience wrapper for the quotient operation.
inline QuotientPresentation quotient(const FinAbGroup& g, const Subgroup& h) { return {g, h}; }

/// Every abelian group of order n, once each, as invariant factors
/// d_1 | d_2 | ... (all > 1), in lexicographic order. Order 1 gives {Z_1}.
std::vector<FinAbGroup> abelian_groups_of_order(std::uint32_t n);

}  // namespace regdec
