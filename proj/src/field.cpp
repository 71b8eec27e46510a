#include "regdec/field.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "regdec/error.hpp"
#include "regdec/numtheory.hpp"

namespace regdec {

namespace {

// Dense polynomials over GF(p), constant term first, no trailing zeros.
using Poly = std::vector<std::int64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  trim(a);
  const auto dm = m.size() - 1;
  const std::int64_t lead_inv = [&] {
    std::int64_t l = m.back(), r = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * l % p;
      l = l * l % p;
      e >>= 1;
    }
    return r;
  }();
  while (a.size() > dm) {
    std::int64_t c = a.back() * lead_inv % p;
    const auto shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = nt::mod(a[shift + i] - c * m[i], p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::int64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t checked_power(std::uint64_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q >= (1ull << 31)) throw ParameterError("field too large: p^k must stay below 2^31");
  }
  return q;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const auto k = monic.size() - 1;
  if (k == 1) return true;
  Poly f(monic.begin(), monic.end());
  const std::int64_t ip = p;
  Poly h{0, 1};  // x
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, p, f, ip);  // x^{p^i} mod f
    Poly d = h;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = nt::mod(d[1] - 1, ip);
    trim(d);
    Poly g = poly_gcd(f, d, ip);
    if (g.size() > 1) return false;
  }
  return true;
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  q_ = checked_power(p_, k_);
  digit_weight_.resize(k_);
  std::uint64_t w = 1;
  for (unsigned i = 0; i < k_; ++i, w *= p_) digit_weight_[i] = w;
  if (q_ <= kTableLimit) build_tables();
}

FieldRef Field::make(std::uint32_t p, unsigned k) {
  if (p <= 2) throw ParameterError("characteristic must be an odd prime, got " + std::to_string(p));
  if (!nt::is_prime(p)) throw ParameterError("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw ParameterError("extension degree must be at least 1");
  const std::uint64_t q = checked_power(p, k);
  std::vector<std::uint32_t> m(k + 1, 0);
  m[k] = 1;
  for (std::uint64_t code = 0; code < q; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i, c /= p) m[i] = static_cast<std::uint32_t>(c % p);
    if (is_irreducible(p, m)) return FieldRef(new Field(p, m));
  }
  throw ConsistencyError("no irreducible polynomial found");
}

FieldRef Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (p <= 2 || !nt::is_prime(p)) throw ParameterError("characteristic must be an odd prime");
  if (modulus.size() < 2) throw ParameterError("modulus must have degree at least 1");
  for (auto c : modulus)
    if (c >= p) throw ParameterError("modulus coefficients must be reduced mod p");
  if (!is_irreducible(p, modulus)) throw ParameterError("modulus is not monic irreducible");
  return FieldRef(new Field(p, std::move(modulus)));
}

Field::Code Field::from_int(std::int64_t v) const {
  return static_cast<Code>(nt::mod(v, static_cast<std::int64_t>(p_)));
}

Field::Code Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != k_) throw ParameterError("expected " + std::to_string(k_) + " coefficients");
  std::uint64_t code = 0;
  for (unsigned i = 0; i < k_; ++i) {
    if (c[i] >= p_) throw ParameterError("coefficient not reduced mod p");
    code += c[i] * digit_weight_[i];
  }
  return static_cast<Code>(code);
}

std::vector<std::uint32_t> Field::coeffs(Code a) const {
  std::vector<std::uint32_t> out(k_);
  for (unsigned i = 0; i < k_; ++i, a /= p_) out[i] = a % p_;
  return out;
}

Field::Code Field::add(Code a, Code b) const {
  if (k_ == 1) return (a + b) % p_;
  std::uint64_t r = 0;
  for (unsigned i = 0; i < k_; ++i, a /= p_, b /= p_) r += ((a % p_ + b % p_) % p_) * digit_weight_[i];
  return static_cast<Code>(r);
}

Field::Code Field::neg(Code a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint64_t r = 0;
  for (unsigned i = 0; i < k_; ++i, a /= p_) r += ((p_ - a % p_) % p_) * digit_weight_[i];
  return static_cast<Code>(r);
}

Field::Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Field::Code Field::poly_mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  Poly pa, pb, m(modulus_.begin(), modulus_.end());
  for (auto c : coeffs(a)) pa.push_back(c);
  for (auto c : coeffs(b)) pb.push_back(c);
  trim(pa);
  trim(pb);
  Poly r = poly_mulmod(pa, pb, m, p_);
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < r.size(); ++i) code += static_cast<std::uint64_t>(r[i]) * digit_weight_[i];
  return static_cast<Code>(code);
}

Field::Code Field::poly_pow(Code a, std::uint64_t e) const {
  Code r = 1;
  while (e > 0) {
    if (e & 1) r = poly_mul(r, a);
    a = poly_mul(a, a);
    e >>= 1;
  }
  return r;
}

void Field::build_tables() {
  const std::uint64_t n = q_ - 1;
  const auto primes = nt::prime_divisors(n);
  Code gen = 0;
  for (Code cand = 1; cand < q_ && gen == 0; ++cand) {
    bool primitive = true;
    for (auto r : primes)
      if (poly_pow(cand, n / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) gen = cand;
  }
  if (gen == 0) throw ConsistencyError("no primitive element found in " + describe());
  exp_.resize(2 * n);
  log_.assign(q_, 0);
  Code x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = exp_[i + n] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = poly_mul(x, gen);
  }
}

Field::Code Field::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  if (has_tables()) return exp_[log_[a] + log_[b]];
  return poly_mul(a, b);
}

Field::Code Field::inv(Code a) const {
  if (a == 0) throw ParameterError("inverse of zero in " + describe());
  if (has_tables()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return poly_pow(a, q_ - 2);
}

Field::Code Field::pow(Code a, std::int64_t e) const {
  if (e == 0) return 1;
  if (a == 0) {
    if (e < 0) throw ParameterError("negative power of zero");
    return 0;
  }
  const auto n = static_cast<std::int64_t>(q_ - 1);
  const auto r = static_cast<std::uint64_t>(nt::mod(e, n));
  if (has_tables()) return exp_[(log_[a] * r) % (q_ - 1)];
  return poly_pow(a, r);
}

std::uint64_t Field::order(Code a) const {
  if (a == 0) throw ParameterError("order of zero is undefined");
  std::uint64_t m = q_ - 1;
  for (auto r : nt::prime_divisors(q_ - 1))
    while (m % r == 0 && pow(a, static_cast<std::int64_t>(m / r)) == 1) m /= r;
  return m;
}

std::string Field::to_string(Code a) const {
  std::ostringstream os;
  os << "coeffs=[";
  auto c = coeffs(a);
  for (unsigned i = 0; i < k_; ++i) os << (i ? "," : "") << c[i];
  os << "] mod (";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << ") over GF(" << p_ << ")";
  return os.str();
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (k_ > 1) os << "^" << k_;
  os << ") mod (";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << ")";
  return os.str();
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_))
    throw ParameterError("field elements belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(code_, field_->inv(o.code_))};
}
bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return code_ == o.code_;
}

FieldElement element_of_order(const FieldRef& field, std::uint64_t t) {
  const auto n = field->unit_group_order();
  if (t == 0 || n % t != 0)
    throw ParameterError("no element of order " + std::to_string(t) + " in " + field->describe());
  std::mt19937_64 rng(0x5eedf00dULL ^ (t * 0x9e3779b97f4a7c15ULL));
  std::uniform_int_distribution<std::uint64_t> pick(1, field->size() - 1);
  for (;;) {
    auto a = static_cast<Field::Code>(pick(rng));
    auto z = field->pow(a, static_cast<std::int64_t>(n / t));
    if (field->order(z) == t) return {field, z};
  }
}

std::pair<FieldRef, FieldElement> root_of_unity(std::uint32_t p, std::uint64_t t) {
  if (t < 2) throw ParameterError("root-of-unity order must be at least 2");
  if (p <= 2 || !nt::is_prime(p)) throw ParameterError("characteristic must be an odd prime");
  if (t % p == 0) throw ParameterError("root-of-unity order must be coprime to the characteristic");
  unsigned k = 1;
  std::uint64_t pk = p % t;
  while (pk != 1 % t) {
    pk = pk * p % t;
    ++k;
  }
  auto field = Field::make(p, k);
  auto zeta = element_of_order(field, t);
  return {field, zeta};
}

}  // namespace regdec
