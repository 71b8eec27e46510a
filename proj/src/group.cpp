#include "regdec/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

#include "regdec/error.hpp"
#include "regdec/numtheory.hpp"

namespace regdec {

FinAbGroup::FinAbGroup(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw ParameterError("a group needs at least one cyclic factor");
  const bool trivial = orders_.size() == 1 && orders_[0] == 1;
  size_ = 1;
  for (auto n : orders_) {
    if (n < 2 && !trivial) throw ParameterError("cyclic factor orders must be at least 2");
    size_ *= n;
    if (size_ > kMaxOrder)
      throw ParameterError("group order exceeds the limit of " + std::to_string(kMaxOrder));
  }
  strides_.assign(orders_.size(), 1);
  for (std::size_t i = orders_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * orders_[i];
}

void FinAbGroup::require(const GroupElement& a) const {
  if (!contains(a))
    throw ParameterError("element " + element_to_string(a) + " does not belong to " + to_string());
}

bool FinAbGroup::contains(const GroupElement& a) const {
  if (a.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (a.coords[i] >= orders_[i]) return false;
  return true;
}

GroupElement FinAbGroup::basis(std::size_t i) const {
  if (i >= rank()) throw ParameterError("basis index out of range");
  auto e = zero();
  e.coords[i] = 1 % orders_[i];
  return e;
}

GroupElement FinAbGroup::make(std::vector<std::int64_t> coords) const {
  if (coords.size() != rank()) throw ParameterError("coordinate count does not match " + to_string());
  GroupElement e{std::vector<std::uint32_t>(rank())};
  for (std::size_t i = 0; i < rank(); ++i) e.coords[i] = static_cast<std::uint32_t>(nt::mod(coords[i], orders_[i]));
  return e;
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
  require(a);
  require(b);
  GroupElement r{std::vector<std::uint32_t>(rank())};
  for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = (a.coords[i] + b.coords[i]) % orders_[i];
  return r;
}

GroupElement FinAbGroup::neg(const GroupElement& a) const {
  require(a);
  GroupElement r{std::vector<std::uint32_t>(rank())};
  for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = (orders_[i] - a.coords[i]) % orders_[i];
  return r;
}

GroupElement FinAbGroup::sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

GroupElement FinAbGroup::times(std::int64_t m, const GroupElement& a) const {
  require(a);
  GroupElement r{std::vector<std::uint32_t>(rank())};
  for (std::size_t i = 0; i < rank(); ++i)
    r.coords[i] = static_cast<std::uint32_t>(nt::mod(m % orders_[i] * a.coords[i], orders_[i]));
  return r;
}

std::size_t FinAbGroup::index(const GroupElement& a) const {
  require(a);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx += a.coords[i] * strides_[i];
  return idx;
}

void FinAbGroup::decode(std::size_t index, std::span<std::uint32_t> out) const {
  for (std::size_t i = 0; i < rank(); ++i) out[i] = static_cast<std::uint32_t>(index / strides_[i] % orders_[i]);
}

GroupElement FinAbGroup::element(std::size_t index) const {
  if (index >= size_) throw ParameterError("element index out of range");
  GroupElement e{std::vector<std::uint32_t>(rank())};
  decode(index, e.coords);
  return e;
}

std::vector<GroupElement> FinAbGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

std::size_t FinAbGroup::add_index(std::size_t a, std::size_t b) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    auto ca = a / strides_[i] % orders_[i];
    auto cb = b / strides_[i] % orders_[i];
    r += (ca + cb) % orders_[i] * strides_[i];
  }
  return r;
}

std::size_t FinAbGroup::neg_index(std::size_t a) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    auto ca = a / strides_[i] % orders_[i];
    r += (orders_[i] - ca) % orders_[i] * strides_[i];
  }
  return r;
}

std::string FinAbGroup::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rank(); ++i) os << (i ? " x " : "") << "Z_" << orders_[i];
  return os.str();
}

std::string FinAbGroup::element_to_string(const GroupElement& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) os << (i ? "," : "") << a.coords[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(FinAbGroup parent, std::vector<GroupElement> gens, std::vector<std::size_t> members)
    : parent_(std::move(parent)), generators_(std::move(gens)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  in_.assign(parent_.size(), false);
  for (auto m : members_) in_[m] = true;
}

Subgroup Subgroup::generate(const FinAbGroup& parent, const std::vector<GroupElement>& gens) {
  std::vector<std::size_t> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(parent.index(g));
  std::vector<bool> seen(parent.size(), false);
  std::vector<std::size_t> members{0};
  seen[0] = true;
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    auto x = frontier.front();
    frontier.pop_front();
    for (auto g : gen_idx) {
      auto y = parent.add_index(x, g);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  return Subgroup(parent, gens, std::move(members));
}

Subgroup Subgroup::from_elements(const FinAbGroup& parent, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (auto i : indices)
    if (i >= parent.size()) throw ParameterError("subgroup element index out of range");
  if (indices.empty() || indices.front() != 0)
    throw ParameterError("subset is not a subgroup: it does not contain zero");
  // Greedy generating set, then compare the closure with the given set.
  std::vector<GroupElement> gens;
  std::vector<bool> span(parent.size(), false);
  span[0] = true;
  std::vector<std::size_t> span_members{0};
  for (auto i : indices) {
    if (span[i]) continue;
    gens.push_back(parent.element(i));
    auto sg = generate(parent, gens);
    span.assign(parent.size(), false);
    for (auto m : sg.members()) span[m] = true;
    span_members = sg.members();
    for (auto m : span_members)
      if (!std::binary_search(indices.begin(), indices.end(), m))
        throw ParameterError("subset is not a subgroup: " +
                             FinAbGroup::element_to_string(parent.element(m)) +
                             " lies in the generated closure but not in the subset");
  }
  if (span_members.size() != indices.size()) throw ConsistencyError("subgroup closure mismatch");
  return Subgroup(parent, std::move(gens), std::move(indices));
}

// ------------------------------------------------------------- Smith form

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("integer overflow in Smith normal form");
  return r;
}

// row_dst -= f * row_src
void row_axpy(Mat& a, std::size_t dst, std::size_t src, std::int64_t f) {
  for (std::size_t j = 0; j < a[dst].size(); ++j) a[dst][j] = checked_sub(a[dst][j], checked_mul(f, a[src][j]));
}

// col_dst -= f * col_src, mirrored into q
void col_axpy(Mat& a, Mat& q, std::size_t dst, std::size_t src, std::int64_t f) {
  for (auto& row : a) row[dst] = checked_sub(row[dst], checked_mul(f, row[src]));
  for (auto& row : q) row[dst] = checked_sub(row[dst], checked_mul(f, row[src]));
}

}  // namespace

SmithForm smith_normal_form(Mat a, std::size_t cols) {
  const std::size_t rows = a.size();
  for (auto& r : a)
    if (r.size() != cols) throw ParameterError("ragged relation matrix");
  Mat q(cols, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) q[i][i] = 1;

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;  // trailing block is zero
      std::swap(a[t], a[pr]);
      if (pc != t) {
        for (auto& row : a) std::swap(row[t], row[pc]);
        for (auto& row : q) std::swap(row[t], row[pc]);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        row_axpy(a, i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        col_axpy(a, q, j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any offending row into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = 0; c < cols; ++c) a[t][c] += a[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  SmithForm out;
  out.diagonal.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (a[t][t] < 0) {
      a[t][t] = -a[t][t];
      for (auto& row : q) row[t] = -row[t];
    }
    out.diagonal[t] = a[t][t];
  }
  out.q = std::move(q);
  return out;
}

// ---------------------------------------------------------------- Quotient

namespace {

FinAbGroup quotient_group_from(const std::vector<std::int64_t>& orders) {
  std::vector<std::uint32_t> o;
  for (auto d : orders) o.push_back(static_cast<std::uint32_t>(d));
  return o.empty() ? FinAbGroup::trivial() : FinAbGroup(std::move(o));
}

}  // namespace

QuotientPresentation::QuotientPresentation(const FinAbGroup& parent, const Subgroup& sub)
    : parent_(parent), sub_(sub), quotient_(FinAbGroup::trivial()) {
  if (!(sub.parent() == parent)) throw ParameterError("subgroup belongs to a different group");
  // Checks closure and yields a small generating set.
  Subgroup checked = Subgroup::from_elements(parent, sub.members());

  const std::size_t r = parent.rank();
  Mat rel;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> row(r, 0);
    row[i] = parent.orders()[i];
    rel.push_back(row);
  }
  for (const auto& g : checked.generators())
    rel.emplace_back(g.coords.begin(), g.coords.end());

  auto snf = smith_normal_form(rel, r);
  std::vector<std::int64_t> kept_orders;
  for (std::size_t t = 0; t < r; ++t) {
    const auto d = snf.diagonal[t];
    if (d == 0) throw ConsistencyError("relation lattice lost full rank");
    if (d == 1) continue;
    kept_orders.push_back(d);
    std::vector<std::int64_t> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = nt::mod(snf.q[i][t], d);
    columns_.push_back(std::move(col));
  }
  quotient_ = quotient_group_from(kept_orders);

  if (parent.size() != sub.size() * quotient_.size())
    throw ConsistencyError("|G| != |H| * |G/H| for " + parent.to_string());

  proj_.resize(parent.size());
  std::vector<std::uint32_t> c(r);
  for (std::size_t idx = 0; idx < parent.size(); ++idx) {
    parent.decode(idx, c);
    std::vector<std::int64_t> qc;
    for (std::size_t t = 0; t < columns_.size(); ++t) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < r; ++i) s = (s + static_cast<std::int64_t>(c[i]) * columns_[t][i]) % kept_orders[t];
      qc.push_back(s);
    }
    proj_[idx] = columns_.empty() ? 0 : quotient_.index(quotient_.make(qc));
  }
  reps_.assign(quotient_.size(), parent.size());
  for (std::size_t idx = 0; idx < parent.size(); ++idx)
    if (reps_[proj_[idx]] == parent.size()) reps_[proj_[idx]] = idx;

  // The kernel must be exactly the subgroup.
  if (parent.size() <= 4096) {
    for (std::size_t idx = 0; idx < parent.size(); ++idx)
      if ((proj_[idx] == 0) != sub.contains_index(idx))
        throw ConsistencyError("projection kernel differs from the subgroup at " +
                               FinAbGroup::element_to_string(parent.element(idx)));
  }
}

GroupElement QuotientPresentation::project(const GroupElement& a) const {
  return quotient_.element(proj_[parent_.index(a)]);
}

GroupElement QuotientPresentation::lift(const GroupElement& q) const {
  return parent_.element(reps_[quotient_.index(q)]);
}

namespace {

void invariant_chains(std::uint32_t remaining, std::vector<std::uint32_t>& prefix,
                      std::vector<FinAbGroup>& out) {
  if (remaining == 1) {
    out.emplace_back(prefix);
    return;
  }
  const std::uint32_t last = prefix.empty() ? 1 : prefix.back();
  for (std::uint32_t d = 2; d <= remaining; ++d) {
    if (remaining % d != 0 || d % last != 0) continue;
    prefix.push_back(d);
    invariant_chains(remaining / d, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<FinAbGroup> abelian_groups_of_order(std::uint32_t n) {
  if (n == 0 || n > FinAbGroup::kMaxOrder) throw ParameterError("group order out of range");
  if (n == 1) return {FinAbGroup::trivial()};
  std::vector<FinAbGroup> out;
  std::vector<std::uint32_t> prefix;
  invariant_chains(n, prefix, out);
  return out;
}

}  // namespace regdec
