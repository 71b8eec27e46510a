#include "regdec/cocycle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "regdec/error.hpp"
#include "regdec/kernels.hpp"

namespace regdec {

namespace {

constexpr std::size_t kInducedCheckLimit = 1024;

std::string show(const FinAbGroup& g, std::size_t i) { return FinAbGroup::element_to_string(g.element(i)); }

}  // namespace

Cocycle2::Cocycle2(FinAbGroup group, FieldRef field, std::vector<Code> table)
    : group_(std::move(group)), field_(std::move(field)), table_(std::move(table)) {
  const auto n = group_.size();
  if (table_.size() != n * n) throw ParameterError("cocycle table must be |G| x |G| for " + group_.to_string());
  for (auto c : table_)
    if (c == 0 || c >= field_->size()) throw ParameterError("cocycle values must be nonzero field elements");
}

FieldElement Cocycle2::value(const GroupElement& g, const GroupElement& h) const {
  return {field_, value_index(group_.index(g), group_.index(h))};
}

ValidationReport Cocycle2::validate() const {
  ValidationReport rep;
  const auto n = group_.size();
  for (std::size_t g = 0; g < n; ++g) {
    rep.checks += 2;
    if (value_index(g, 0) != 1 || value_index(0, g) != 1) {
      rep.violation = LawViolation{"normalization", show(group_, g) + ", (0)"};
      return rep;
    }
  }
  std::optional<kernels::Triple> bad;
  if (n <= kExhaustiveLimit) {
    rep.checks += n * n * n;
    bad = kernels::parallel::cocycle_violation(*field_, group_, table_);
  } else {
    rep.exhaustive = false;
    std::mt19937_64 rng(0xc0c7c1eULL + n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<kernels::Triple> triples(kSampledTriples);
    for (auto& t : triples) t = {pick(rng), pick(rng), pick(rng)};
    rep.checks += triples.size();
    bad = kernels::parallel::cocycle_violation_in(*field_, group_, table_, triples);
  }
  if (bad) {
    const auto [s, t, u] = *bad;
    rep.violation =
        LawViolation{"cocycle-identity", show(group_, s) + ", " + show(group_, t) + ", " + show(group_, u)};
  }
  return rep;
}

bool Cocycle2::is_symmetric() const {
  const auto n = group_.size();
  return kernels::parallel::symmetric_indices(table_, n).size() == n;
}

bool Cocycle2::operator==(const Cocycle2& o) const {
  return group_ == o.group_ && field_->same_as(*o.field_) && table_ == o.table_;
}

Bicharacter induced_bicharacter(const Cocycle2& alpha) {
  const auto rep = alpha.validate();
  if (!rep.valid())
    throw ParameterError("not a normalized cocycle: " + rep.violation->law + " at " + rep.violation->witness);
  const auto& g = alpha.group();
  const auto& f = *alpha.field();
  const auto r = g.rank();
  std::vector<Field::Code> table(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const auto ai = g.index(g.basis(i)), aj = g.index(g.basis(j));
      table[i * r + j] = f.mul(alpha.value_index(ai, aj), f.inv(alpha.value_index(aj, ai)));
    }
  Bicharacter beta(g, alpha.field(), std::move(table));
  const auto n = g.size();
  if (n <= kInducedCheckLimit) {
    const auto m = beta.value_matrix();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (m[a * n + b] != f.mul(alpha.value_index(a, b), f.inv(alpha.value_index(b, a))))
          throw ConsistencyError("induced bicharacter disagrees with the cocycle ratio at " + show(g, a) + ", " +
                                 show(g, b));
  }
  return beta;
}

Cocycle2 scheunert_cocycle(const Bicharacter& beta) {
  const auto& g = beta.group();
  const auto& f = *beta.field();
  const auto r = g.rank();
  for (std::size_t i = 0; i < r; ++i)
    if (beta.table(i, i) != 1)
      throw ParameterError("bicharacter is not alternating: beta(a_" + std::to_string(i + 1) + ", a_" +
                           std::to_string(i + 1) + ") != 1");
  const auto n = g.size();
  for (std::size_t x = 0; x < n; ++x)
    if (beta.eval_index(x, x) != 1) throw ParameterError("bicharacter is not alternating at " + show(g, x));

  std::vector<Field::Code> table(n * n);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t aa = 0; aa < rows; ++aa) {
    const auto a = static_cast<std::size_t>(aa);
    std::vector<std::uint32_t> ca(r), cb(r);
    g.decode(a, ca);
    for (std::size_t b = 0; b < n; ++b) {
      g.decode(b, cb);
      Field::Code v = 1;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < i; ++j) {
          const auto e = static_cast<std::int64_t>(ca[i]) * cb[j];
          if (e != 0) v = f.mul(v, f.pow(beta.table(i, j), e));
        }
      table[a * n + b] = v;
    }
  }
  return Cocycle2(g, beta.field(), std::move(table));
}

Cocycle2 carry_cocycle(const FinAbGroup& g, const std::vector<FieldElement>& lambdas) {
  const auto r = g.rank();
  if (lambdas.size() != r) throw ParameterError("need one lambda per cyclic factor");
  const auto& field = lambdas.front().field();
  for (const auto& l : lambdas) {
    if (!l.field()->same_as(*field)) throw ParameterError("lambdas must share a field");
    if (l.is_zero()) throw ParameterError("lambda must be a nonzero field element");
  }
  const auto& f = *field;
  const auto n = g.size();
  std::vector<Field::Code> table(n * n);
  std::vector<std::uint32_t> ca(r), cb(r);
  for (std::size_t a = 0; a < n; ++a) {
    g.decode(a, ca);
    for (std::size_t b = 0; b < n; ++b) {
      g.decode(b, cb);
      Field::Code v = 1;
      for (std::size_t s = 0; s < r; ++s)
        if (ca[s] + cb[s] >= g.orders()[s]) v = f.mul(v, lambdas[s].code());
      table[a * n + b] = v;
    }
  }
  return Cocycle2(g, field, std::move(table));
}

std::vector<std::string> carry_cocycle_flags(const std::vector<FieldElement>& lambdas) {
  std::vector<std::string> flags;
  std::set<Field::Code> seen;
  for (std::size_t s = 0; s < lambdas.size(); ++s) {
    const auto c = lambdas[s].code();
    if (c == 1) flags.push_back("lambda_" + std::to_string(s + 1) + " equals 1");
    if (!seen.insert(c).second) flags.push_back("lambda_" + std::to_string(s + 1) + " repeats an earlier value");
  }
  return flags;
}

Cocycle2 sign_cocycle(const FinAbGroup& g, const FieldRef& field) {
  if (g.rank() < 2) throw ParameterError("the sign cocycle needs at least two cyclic factors");
  const auto n = g.size();
  const auto minus_one = field->from_int(-1);
  std::vector<Field::Code> table(n * n);
  std::vector<std::uint32_t> ca(g.rank()), cb(g.rank());
  for (std::size_t a = 0; a < n; ++a) {
    g.decode(a, ca);
    for (std::size_t b = 0; b < n; ++b) {
      g.decode(b, cb);
      table[a * n + b] = (static_cast<std::uint64_t>(ca[1]) * cb[0]) % 2 ? minus_one : 1;
    }
  }
  return Cocycle2(g, field, std::move(table));
}

Cocycle2 operator*(const Cocycle2& a, const Cocycle2& b) {
  if (!(a.group() == b.group())) throw ParameterError("cocycles live on different groups");
  if (!a.field()->same_as(*b.field())) throw ParameterError("cocycles live over different fields");
  const auto& f = *a.field();
  std::vector<Field::Code> table(a.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = f.mul(a.table()[i], b.table()[i]);
  return Cocycle2(a.group(), a.field(), std::move(table));
}

CubedSignCarry cubed_sign_carry_cocycle(std::uint32_t p, const FieldRef& field) {
  if (p <= 2) throw ParameterError("characteristic must be an odd prime");
  if (field->characteristic() != p) throw ParameterError("field characteristic must equal p");
  FinAbGroup t({p, p, p});
  std::vector<FieldElement> lambdas;
  if (p == 3) {
    lambdas = {FieldElement::from_int(field, 1), FieldElement::from_int(field, 1), FieldElement::from_int(field, -1)};
  } else {
    lambdas = {FieldElement::from_int(field, 2), FieldElement::from_int(field, 3), FieldElement::from_int(field, 4)};
    if (!carry_cocycle_flags(lambdas).empty()) throw ParameterError("2, 3, 4 must be distinct and differ from 1");
  }
  auto alpha = sign_cocycle(t, field) * carry_cocycle(t, lambdas);

  const auto n = t.size();
  auto commuting = kernels::parallel::symmetric_indices(alpha.table(), n);

  const auto a1 = t.basis(0), a2 = t.basis(1), a3 = t.basis(2);
  auto pair = p == 3 ? std::make_pair(t.add(a2, a3), t.add(a1, a3))
                     : std::make_pair(t.add(a1, a3), t.add(t.add(a1, a2), a3));
  const bool member = std::binary_search(commuting.begin(), commuting.end(), t.index(a3));
  const bool asymmetric = !(alpha.value(pair.first, pair.second) == alpha.value(pair.second, pair.first));
  return {std::move(alpha), std::move(commuting), a3, std::move(pair), member, asymmetric};
}

}  // namespace regdec
