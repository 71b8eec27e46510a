#include "regdec/twisted_algebra.hpp"

#include <set>
#include <sstream>

#include "regdec/error.hpp"
#include "regdec/kernels.hpp"

namespace regdec {

AlgebraElement::AlgebraElement(std::shared_ptr<const Cocycle2> alpha, std::map<std::size_t, Code> terms)
    : alpha_(std::move(alpha)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (alpha_ != o.alpha_ && !(*alpha_ == *o.alpha_))
    throw ParameterError("elements belong to different twisted group algebras");
}

FieldElement AlgebraElement::coefficient(const GroupElement& g) const {
  auto it = terms_.find(alpha_->group().index(g));
  return {alpha_->field(), it == terms_.end() ? Code{0} : it->second};
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_same(o);
  auto terms = terms_;
  const auto& f = *alpha_->field();
  for (const auto& [g, c] : o.terms_) terms[g] = f.add(terms[g], c);
  return {alpha_, std::move(terms)};
}

AlgebraElement AlgebraElement::scaled(const FieldElement& c) const {
  auto terms = terms_;
  const auto& f = *alpha_->field();
  for (auto& [g, v] : terms) v = f.mul(v, c.code());
  return {alpha_, std::move(terms)};
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  check_same(o);
  return terms_ == o.terms_;
}

std::string AlgebraElement::to_string() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [g, c] : terms_) {
    os << (first ? "" : ", ") << "(" << FinAbGroup::element_to_string(alpha_->group().element(g)) << ", "
       << alpha_->field()->to_string(c) << ")";
    first = false;
  }
  os << "]";
  return os.str();
}

TwistedGroupAlgebra::TwistedGroupAlgebra(Cocycle2 alpha) {
  const auto rep = alpha.validate();
  if (!rep.valid())
    throw ParameterError("twisted group algebra needs a normalized cocycle: " + rep.violation->law + " fails at " +
                         rep.violation->witness);
  alpha_ = std::make_shared<const Cocycle2>(std::move(alpha));
}

AlgebraElement TwistedGroupAlgebra::basis(const GroupElement& g) const { return {alpha_, {{group().index(g), 1}}}; }

AlgebraElement TwistedGroupAlgebra::element(const std::vector<std::pair<GroupElement, FieldElement>>& terms) const {
  std::map<std::size_t, Field::Code> m;
  const auto& f = *field();
  for (const auto& [g, c] : terms) {
    if (!c.field()->same_as(f)) throw ParameterError("coefficient from a different field");
    auto& slot = m[group().index(g)];
    slot = f.add(slot, c.code());
  }
  return {alpha_, std::move(m)};
}

AlgebraElement TwistedGroupAlgebra::mul(const AlgebraElement& u, const AlgebraElement& v) const {
  const auto self = zero();
  self.check_same(u);
  self.check_same(v);
  const auto& f = *field();
  const auto& g = group();
  std::map<std::size_t, Field::Code> out;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      auto& slot = out[g.add_index(a, b)];
      slot = f.add(slot, f.mul(f.mul(ca, cb), alpha_->value_index(a, b)));
    }
  return {alpha_, std::move(out)};
}

AlgebraElement TwistedGroupAlgebra::basis_inverse(const GroupElement& g) const {
  const auto& f = *field();
  const auto gi = group().index(g);
  const auto ni = group().neg_index(gi);
  return {alpha_, {{ni, f.inv(alpha_->value_index(gi, ni))}}};
}

std::vector<GroupElement> TwistedGroupAlgebra::center_basis() const {
  const auto& g = group();
  const auto idx = kernels::parallel::symmetric_indices(alpha_->table(), g.size());
  std::vector<GroupElement> out;
  for (auto w : idx) {
    // Recheck: x_w commutes with every basis element.
    const auto xw = basis(g.element(w));
    for (std::size_t x = 0; x < g.size(); ++x) {
      const auto xx = basis(g.element(x));
      if (!(mul(xw, xx) == mul(xx, xw)))
        throw ConsistencyError("centre scan returned a non-central basis element");
    }
    out.push_back(g.element(w));
  }
  return out;
}

TwistedGroupAlgebra::Minimality TwistedGroupAlgebra::minimality() const {
  const auto beta = induced_bicharacter(*alpha_);
  const auto n = group().size();
  const auto m = beta.value_matrix();
  std::set<std::vector<Field::Code>> columns;
  std::vector<Field::Code> col(n);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t x = 0; x < n; ++x) col[x] = m[x * n + h];
    columns.insert(col);
  }
  Minimality out{};
  out.columns_distinct = columns.size() == n;
  out.center_dimension = center_basis().size();
  out.radical_order = beta.radical().size();
  const bool by_center = out.center_dimension == 1;
  const bool by_radical = out.radical_order == 1;
  if (out.columns_distinct != by_center || by_center != by_radical)
    throw ConsistencyError("minimality criteria disagree on " + group().to_string());
  out.minimal = by_radical;
  return out;
}

}  // namespace regdec
