#include "regdec/bicharacter.hpp"

#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "regdec/error.hpp"
#include "regdec/kernels.hpp"
#include "regdec/numtheory.hpp"

namespace regdec {

namespace {

constexpr std::size_t kPairLimit = 4096;
constexpr std::size_t kTripleLimit = 256;
constexpr std::size_t kSampledTriples = 100000;

std::string pair_witness(const FinAbGroup& g, std::size_t a, std::size_t b) {
  return FinAbGroup::element_to_string(g.element(a)) + ", " + FinAbGroup::element_to_string(g.element(b));
}

std::string triple_witness(const FinAbGroup& g, std::size_t a, std::size_t b, std::size_t c) {
  return pair_witness(g, a, b) + ", " + FinAbGroup::element_to_string(g.element(c));
}

}  // namespace

Bicharacter::Bicharacter(FinAbGroup group, FieldRef field, std::vector<Code> gen_table)
    : group_(std::move(group)), field_(std::move(field)), table_(std::move(gen_table)) {
  const auto r = group_.rank();
  if (table_.size() != r * r) throw ParameterError("generator table must be r x r for " + group_.to_string());
  for (auto c : table_)
    if (c == 0 || c >= field_->size()) throw ParameterError("generator table entries must be nonzero field elements");
}

std::vector<Bicharacter::Code> Bicharacter::row_character(std::size_t g) const {
  const auto r = group_.rank();
  std::vector<std::uint32_t> c(r);
  group_.decode(g, c);
  std::vector<Code> chi(r, 1);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i)
      if (c[i] != 0) chi[j] = field_->mul(chi[j], field_->pow(table(i, j), c[i]));
  return chi;
}

Bicharacter::Code Bicharacter::eval_index(std::size_t g, std::size_t h) const {
  const auto chi = row_character(g);
  std::vector<std::uint32_t> c(group_.rank());
  group_.decode(h, c);
  Code v = 1;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) v = field_->mul(v, field_->pow(chi[j], c[j]));
  return v;
}

FieldElement Bicharacter::eval(const GroupElement& g, const GroupElement& h) const {
  return {field_, eval_index(group_.index(g), group_.index(h))};
}

std::vector<Bicharacter::Code> Bicharacter::value_matrix() const {
  const auto n = group_.size();
  const auto r = group_.rank();
  std::vector<Code> m(n * n);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t gg = 0; gg < rows; ++gg) {
    const auto g = static_cast<std::size_t>(gg);
    const auto chi = row_character(g);
    // Powers chi_j^e for e < n_j, so each entry is a product of r lookups.
    std::vector<std::vector<Code>> powers(r);
    for (std::size_t j = 0; j < r; ++j) {
      powers[j].resize(group_.orders()[j]);
      Code x = 1;
      for (auto& p : powers[j]) {
        p = x;
        x = field_->mul(x, chi[j]);
      }
    }
    std::vector<std::uint32_t> c(r);
    for (std::size_t h = 0; h < n; ++h) {
      group_.decode(h, c);
      Code v = 1;
      for (std::size_t j = 0; j < r; ++j) v = field_->mul(v, powers[j][c[j]]);
      m[g * n + h] = v;
    }
  }
  return m;
}

ValidationReport Bicharacter::validate() const {
  ValidationReport rep;
  const auto& f = *field_;
  const auto r = group_.rank();
  auto fail = [&](std::string law, std::string witness) {
    rep.violation = LawViolation{std::move(law), std::move(witness)};
    return rep;
  };
  auto gens = [&](std::size_t i, std::size_t j) {
    return "a_" + std::to_string(i + 1) + ", a_" + std::to_string(j + 1);
  };

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      ++rep.checks;
      if (f.mul(table(i, j), table(j, i)) != 1) return fail("antisymmetry", gens(i, j));
    }
  for (std::size_t i = 0; i < r; ++i) {
    ++rep.checks;
    if (f.mul(table(i, i), table(i, i)) != 1) return fail("diagonal-square", gens(i, i));
  }

  const bool square_znxzn = r == 2 && group_.orders()[0] == group_.orders()[1];
  if (square_znxzn) {
    const auto n = group_.orders()[0];
    if (n % 2 == 1) {
      for (std::size_t i = 0; i < 2; ++i) {
        ++rep.checks;
        if (table(i, i) != 1) return fail("odd-order-diagonal", gens(i, i));
      }
    }
  }

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      ++rep.checks;
      const auto d = std::gcd(group_.orders()[i], group_.orders()[j]);
      if (f.pow(table(i, j), d) != 1) return fail("well-defined", gens(i, j));
    }

  const auto n = group_.size();
  if (n > kPairLimit) {
    rep.exhaustive = false;
    return rep;
  }
  const auto m = value_matrix();
  if (square_znxzn) {
    const auto ord = group_.orders()[0];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        ++rep.checks;
        if (f.pow(m[a * n + b], ord) != 1) return fail("nth-root", pair_witness(group_, a, b));
      }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ++rep.checks;
      if (f.mul(m[a * n + b], m[b * n + a]) != 1) return fail("antisymmetry", pair_witness(group_, a, b));
    }

  auto bilinear = [&](std::size_t a, std::size_t b, std::size_t c) -> std::optional<std::string> {
    const auto ab = group_.add_index(a, b);
    const auto bc = group_.add_index(b, c);
    if (m[ab * n + c] != f.mul(m[a * n + c], m[b * n + c])) return std::string("bilinearity-left");
    if (m[a * n + bc] != f.mul(m[a * n + b], m[a * n + c])) return std::string("bilinearity-right");
    return std::nullopt;
  };
  if (n <= kTripleLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          rep.checks += 2;
          if (auto law = bilinear(a, b, c)) return fail(*law, triple_witness(group_, a, b, c));
        }
  } else {
    rep.exhaustive = false;
    std::mt19937_64 rng(0xb1c4a5ULL + n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < kSampledTriples; ++s) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      rep.checks += 2;
      if (auto law = bilinear(a, b, c)) return fail(*law, triple_witness(group_, a, b, c));
    }
  }
  return rep;
}

Subgroup Bicharacter::radical() const {
  const auto n = group_.size();
  const auto rows = kernels::parallel::unit_rows(value_matrix(), n);
  return Subgroup::from_elements(group_, rows);
}

bool Bicharacter::is_alternating() const {
  const auto r = group_.rank();
  for (std::size_t i = 0; i < r; ++i)
    if (table(i, i) != 1) return false;
  const auto n = group_.size();
  for (std::size_t g = 0; g < n; ++g)
    if (eval_index(g, g) != 1) return false;
  return true;
}

bool Bicharacter::operator==(const Bicharacter& o) const {
  return group_ == o.group_ && field_->same_as(*o.field_) && table_ == o.table_;
}

MinimalityCertificate check_minimal(const Bicharacter& beta) {
  const auto& g = beta.group();
  const auto n = g.size();
  const auto m = beta.value_matrix();
  MinimalityCertificate cert;
  std::map<std::vector<Field::Code>, std::size_t> seen;
  std::vector<Field::Code> col(n);
  for (std::size_t h = 0; h < n && cert.minimal; ++h) {
    for (std::size_t x = 0; x < n; ++x) col[x] = m[x * n + h];
    auto [it, inserted] = seen.emplace(col, h);
    if (!inserted) {
      cert.minimal = false;
      cert.equal_columns = std::make_pair(g.element(it->second), g.element(h));
    }
  }
  cert.radical_order = beta.radical().size();
  if (cert.minimal != (cert.radical_order == 1))
    throw ConsistencyError("column criterion and radical criterion disagree on " + g.to_string());
  return cert;
}

QuotientBicharacter quotient_by_radical(const Bicharacter& beta, const Subgroup& h) {
  const auto& g = beta.group();
  if (!(h.parent() == g)) throw ParameterError("subgroup belongs to a different group");
  const auto n = g.size();
  const auto m = beta.value_matrix();
  for (auto r : h.members())
    for (std::size_t x = 0; x < n; ++x)
      if (m[r * n + x] != 1)
        throw ParameterError("induced pairing on the quotient is not well defined: beta(" +
                             pair_witness(g, r, x) + ") != 1");
  const auto rad = beta.radical();
  if (!(rad == h))
    throw ParameterError("subgroup of order " + std::to_string(h.size()) + " is not the radical (order " +
                         std::to_string(rad.size()) + ")");

  QuotientPresentation pres(g, h);
  const auto& qg = pres.quotient();
  const auto r = qg.rank();
  std::vector<Field::Code> table(r * r, 1);
  if (!qg.is_trivial()) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        table[i * r + j] = beta.eval_index(g.index(pres.lift(qg.basis(i))), g.index(pres.lift(qg.basis(j))));
  }
  Bicharacter bar(qg, beta.field(), std::move(table));
  if (bar.radical().size() != 1) throw ConsistencyError("quotient bicharacter has a nontrivial radical");
  return {std::move(pres), std::move(bar)};
}

FieldElement character_sum(const Bicharacter& beta, const GroupElement& a) {
  const auto& g = beta.group();
  const auto& f = *beta.field();
  const auto ai = g.index(a);
  Field::Code s = 0;
  for (std::size_t x = 0; x < g.size(); ++x) s = f.add(s, beta.eval_index(x, ai));
  return {beta.field(), s};
}

Bicharacter znxzn_bicharacter(std::uint32_t n, const FieldElement& e, const FieldElement& f, const FieldElement& xi) {
  const auto& field = e.field();
  if (!f.field()->same_as(*field) || !xi.field()->same_as(*field))
    throw ParameterError("e, f and xi must live in the same field");
  if (n < 2) throw ParameterError("Z_n x Z_n needs n >= 2");
  if (!(e * e).is_one()) throw ParameterError("e must square to 1");
  if (!(f * f).is_one()) throw ParameterError("f must square to 1");
  if (xi.is_zero() || !xi.pow(n).is_one()) throw ParameterError("xi must be an n-th root of unity");
  if (n % 2 == 1 && !(e.is_one() && f.is_one())) throw ParameterError("odd n forces e = f = 1");
  std::vector<Field::Code> table{f.code(), xi.inv().code(), xi.code(), e.code()};
  return Bicharacter(FinAbGroup({n, n}), field, std::move(table));
}

Bicharacter sign_root_bicharacter(std::uint32_t p, std::uint32_t t) {
  if (t <= 2 || !nt::is_prime(t)) throw ParameterError("t must be an odd prime");
  if (t == p) throw ParameterError("t must differ from the characteristic");
  auto [field, zeta] = root_of_unity(p, t);
  auto minus_one = FieldElement::from_int(field, -1);
  return znxzn_bicharacter(2 * t, minus_one, minus_one, zeta);
}

Bicharacter random_alternating_bicharacter(const FinAbGroup& g, const FieldRef& field, std::mt19937_64& rng) {
  const auto r = g.rank();
  const auto units = field->unit_group_order();
  std::uniform_int_distribution<std::uint64_t> pick(1, field->size() - 1);
  std::vector<Field::Code> table(r * r, 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const auto m = std::gcd<std::uint64_t, std::uint64_t>(std::gcd(g.orders()[i], g.orders()[j]), units);
      const auto u = static_cast<Field::Code>(pick(rng));
      const auto t = field->pow(u, static_cast<std::int64_t>(units / m));
      table[i * r + j] = t;
      table[j * r + i] = field->inv(t);
    }
  return Bicharacter(g, field, std::move(table));
}

}  // namespace regdec
