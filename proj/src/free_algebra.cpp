#include "regdec/free_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "regdec/error.hpp"

namespace regdec {

namespace {

void check_letters(const GradedWord& w, const FinAbGroup& g) {
  for (const auto& l : w) {
    if (l.var == 0) throw ParameterError("variable indices start at 1");
    if (!g.contains(l.grade)) throw ParameterError("grade " + FinAbGroup::element_to_string(l.grade) +
                                                   " is not an element of " + g.to_string());
  }
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParameterError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

GroupElement homogeneous_degree(const GradedWord& w, const FinAbGroup& g) {
  auto d = g.zero();
  for (const auto& l : w) d = g.add(d, l.grade);
  return d;
}

NormalForm normalize(const GradedWord& w, const Bicharacter& beta) {
  const auto& g = beta.group();
  const auto& f = *beta.field();
  check_letters(w, g);
  Field::Code scalar = 1;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[b] < w[a]) scalar = f.mul(scalar, beta.eval_index(g.index(w[a].grade), g.index(w[b].grade)));
  auto sorted = w;
  std::stable_sort(sorted.begin(), sorted.end());
  const auto minus_one = f.from_int(-1);
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1]) {
      const auto gi = g.index(sorted[i].grade);
      if (beta.eval_index(gi, gi) == minus_one) return {FieldElement(beta.field(), 0), {}};
    }
  return {FieldElement(beta.field(), scalar), std::move(sorted)};
}

GradedWord parse_word(std::string_view text, const FinAbGroup& g) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  GradedWord w;
  if (text == "1") return w;
  if (text.empty()) throw ParameterError("empty word; write 1 for the unit");
  std::size_t start = 0;
  while (start <= text.size()) {
    auto star = text.find('*', start);
    if (star == std::string_view::npos) star = text.size();
    const auto tok = trim(text.substr(start, star - start));
    // x<i>^(c1,...,cr)
    const auto caret = tok.find('^');
    if (tok.size() < 2 || tok[0] != 'x' || caret == std::string_view::npos || caret + 1 >= tok.size() ||
        tok[caret + 1] != '(' || tok.back() != ')')
      throw ParameterError("bad letter '" + std::string(tok) + "', expected x<i>^(c1,...,cr)");
    GradedLetter l;
    const auto var = parse_int(tok.substr(1, caret - 1), "variable index");
    if (var <= 0) throw ParameterError("variable indices start at 1");
    l.var = static_cast<std::uint32_t>(var);
    std::vector<std::int64_t> coords;
    auto body = tok.substr(caret + 2, tok.size() - caret - 3);
    std::size_t cs = 0;
    while (cs <= body.size()) {
      auto comma = body.find(',', cs);
      if (comma == std::string_view::npos) comma = body.size();
      coords.push_back(parse_int(trim(body.substr(cs, comma - cs)), "grade coordinate"));
      cs = comma + 1;
    }
    if (coords.size() != g.rank())
      throw ParameterError("grade needs " + std::to_string(g.rank()) + " coordinates in '" + std::string(tok) + "'");
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] < 0 || coords[i] >= static_cast<std::int64_t>(g.orders()[i]))
        throw ParameterError("grade coordinate out of range in '" + std::string(tok) + "'");
    l.grade = g.make(coords);
    w.push_back(std::move(l));
    start = star + 1;
  }
  return w;
}

std::string word_to_string(const GradedWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(l.var) + "^" + FinAbGroup::element_to_string(l.grade);
  }
  return out;
}

GradedPoly GradedPoly::one(FieldRef field) {
  GradedPoly p(std::move(field));
  p.terms_[{}] = 1;
  return p;
}

GradedPoly GradedPoly::monomial(const GradedWord& w, const Bicharacter& beta) {
  GradedPoly p(beta.field());
  auto nf = normalize(w, beta);
  if (!nf.is_zero()) p.terms_[nf.word] = nf.scalar.code();
  return p;
}

void GradedPoly::add_term(const GradedWord& w, Code c) {
  auto& slot = terms_[w];
  slot = field_->add(slot, c);
  if (slot == 0) terms_.erase(w);
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
  if (!field_->same_as(*o.field_)) throw ParameterError("polynomials over different fields");
  auto out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

GradedPoly GradedPoly::scaled(const FieldElement& c) const {
  GradedPoly out(field_);
  if (c.is_zero()) return out;
  for (const auto& [w, v] : terms_) out.terms_[w] = field_->mul(v, c.code());
  return out;
}

bool GradedPoly::operator==(const GradedPoly& o) const {
  return field_->same_as(*o.field_) && terms_ == o.terms_;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ") << "(" << field_->to_string(c) << ")*" << word_to_string(w);
    first = false;
  }
  return os.str();
}

GradedPoly mul(const GradedPoly& u, const GradedPoly& v, const Bicharacter& beta) {
  if (!u.field_->same_as(*beta.field()) || !v.field_->same_as(*beta.field()))
    throw ParameterError("polynomials and bicharacter over different fields");
  const auto& f = *beta.field();
  GradedPoly out(beta.field());
  for (const auto& [a, ca] : u.terms_)
    for (const auto& [b, cb] : v.terms_) {
      auto w = a;
      w.insert(w.end(), b.begin(), b.end());
      auto nf = normalize(w, beta);
      if (!nf.is_zero()) out.add_term(nf.word, f.mul(f.mul(ca, cb), nf.scalar.code()));
    }
  return out;
}

RegularityWitness regularity_witness(const Bicharacter& beta, const std::vector<GroupElement>& grades) {
  GradedWord w;
  for (std::size_t i = 0; i < grades.size(); ++i) w.push_back({static_cast<std::uint32_t>(i + 1), grades[i]});
  auto nf = normalize(w, beta);
  if (nf.is_zero()) throw ConsistencyError("word with distinct indices normalized to zero");
  return {std::move(w), std::move(nf)};
}

}  // namespace regdec
