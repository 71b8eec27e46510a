#include "regdec/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "regdec/error.hpp"
#include "regdec/kernels.hpp"

namespace regdec {

namespace {

constexpr std::size_t kLeibnizCheckDim = 5;
constexpr std::size_t kLeibnizMaxDim = 8;

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SquareMatrix::SquareMatrix(FieldRef field, std::size_t dim, std::vector<Code> entries)
    : field_(std::move(field)), dim_(dim), a_(std::move(entries)) {
  if (dim_ == 0) throw ParameterError("matrix dimension must be at least 1");
  if (dim_ > kMaxDim) throw ParameterError("matrix dimension " + std::to_string(dim_) + " exceeds 4096");
  if (a_.size() != dim_ * dim_) throw ParameterError("matrix needs dim^2 entries");
  for (auto c : a_)
    if (c >= field_->size()) throw ParameterError("matrix entry is not a field element");
}

SquareMatrix SquareMatrix::identity(FieldRef field, std::size_t dim) {
  std::vector<Code> a(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) a[i * dim + i] = 1;
  return {std::move(field), dim, std::move(a)};
}

SquareMatrix SquareMatrix::scalar(const FieldElement& c, std::size_t dim) {
  return identity(c.field(), dim).scaled(c);
}

void SquareMatrix::check_same(const SquareMatrix& o) const {
  if (!field_->same_as(*o.field_)) throw ParameterError("matrices over different fields");
  if (dim_ != o.dim_) throw ParameterError("matrix dimensions differ");
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
  check_same(o);
  return {field_, dim_, kernels::parallel::multiply(*field_, a_, o.a_, dim_)};
}

SquareMatrix SquareMatrix::scaled(const FieldElement& c) const {
  if (!c.field()->same_as(*field_)) throw ParameterError("scalar from a different field");
  auto a = a_;
  for (auto& x : a) x = field_->mul(x, c.code());
  return {field_, dim_, std::move(a)};
}

SquareMatrix SquareMatrix::pow(std::uint64_t e) const {
  auto result = identity(field_, dim_);
  auto base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool SquareMatrix::operator==(const SquareMatrix& o) const {
  return field_->same_as(*o.field_) && dim_ == o.dim_ && a_ == o.a_;
}

SquareMatrix SquareMatrix::permute_rows(const std::vector<std::size_t>& perm) const {
  if (perm.size() != dim_) throw ParameterError("permutation length must equal the dimension");
  std::vector<bool> hit(dim_, false);
  std::vector<Code> a(a_.size());
  for (std::size_t i = 0; i < dim_; ++i) {
    const auto src = perm[i];
    if (src >= dim_ || hit[src]) throw ParameterError("not a permutation");
    hit[src] = true;
    std::copy_n(a_.begin() + static_cast<std::ptrdiff_t>(src * dim_), dim_,
                a.begin() + static_cast<std::ptrdiff_t>(i * dim_));
  }
  return {field_, dim_, std::move(a)};
}

DecompMatrix decomposition_matrix(const Bicharacter& beta) {
  const auto n = beta.group().size();
  return {SquareMatrix(beta.field(), n, beta.value_matrix()), beta.group()};
}

FieldElement determinant(const SquareMatrix& m) {
  const auto d = kernels::parallel::determinant(*m.field(), m.codes(), m.dim());
  FieldElement det{m.field(), d};
  if (m.dim() <= kLeibnizCheckDim && !(determinant_by_permutations(m) == det))
    throw ConsistencyError("elimination and permutation expansion disagree");
  return det;
}

FieldElement determinant_by_permutations(const SquareMatrix& m) {
  const auto n = m.dim();
  if (n > kLeibnizMaxDim) throw ParameterError("permutation expansion is limited to dimension 8");
  const auto& f = *m.field();
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  Field::Code sum = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += s[i] > s[j];
    Field::Code term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term = f.mul(term, m.at(i, s[i]));
    sum = inversions % 2 ? f.sub(sum, term) : f.add(sum, term);
  } while (std::next_permutation(s.begin(), s.end()));
  return {m.field(), sum};
}

std::size_t rank(const SquareMatrix& m) { return kernels::rank(*m.field(), m.codes(), m.dim(), m.dim()); }

SquareMatrix vandermonde(const std::vector<FieldElement>& nodes) {
  if (nodes.empty()) throw ParameterError("vandermonde needs at least one node");
  const auto& field = nodes.front().field();
  const auto n = nodes.size();
  std::vector<Field::Code> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!nodes[i].field()->same_as(*field)) throw ParameterError("nodes must share a field");
    Field::Code x = 1;
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = x;
      x = field->mul(x, nodes[i].code());
    }
  }
  return {field, n, std::move(a)};
}

SquareMatrix power_vandermonde(const FieldElement& xi, std::uint32_t n) {
  std::vector<FieldElement> nodes;
  for (std::uint32_t i = 0; i < n; ++i) nodes.push_back(xi.pow(i));
  return vandermonde(nodes);
}

SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b) {
  if (!a.field()->same_as(*b.field())) throw ParameterError("matrices over different fields");
  const auto& f = *a.field();
  const auto ma = a.dim(), mb = b.dim(), m = ma * mb;
  if (m > SquareMatrix::kMaxDim) throw ParameterError("Kronecker product too large");
  std::vector<Field::Code> out(m * m);
  for (std::size_t i = 0; i < ma; ++i)
    for (std::size_t k = 0; k < mb; ++k)
      for (std::size_t j = 0; j < ma; ++j)
        for (std::size_t l = 0; l < mb; ++l) out[(i * mb + k) * m + (j * mb + l)] = f.mul(a.at(i, j), b.at(k, l));
  return {a.field(), m, std::move(out)};
}

SquareMatrix perm_sigma(const SquareMatrix& m, std::uint32_t n) {
  if (m.dim() != static_cast<std::size_t>(n) * n) throw ParameterError("P_sigma needs an n^2 x n^2 matrix");
  std::vector<std::size_t> perm(m.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) perm[i * n + j] = j * n + i;
  return m.permute_rows(perm);
}

SquareMatrix commutation_matrix(const FieldElement& xi, std::uint32_t n) {
  const auto& f = *xi.field();
  const std::size_t m = static_cast<std::size_t>(n) * n;
  std::vector<Field::Code> a(m * m);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      for (std::int64_t k = 0; k < n; ++k)
        for (std::int64_t l = 0; l < n; ++l)
          a[static_cast<std::size_t>(i * n + j) * m + static_cast<std::size_t>(k * n + l)] =
              f.pow(xi.code(), j * k - i * l);
  return {xi.field(), m, std::move(a)};
}

SquareMatrix build_D(const FieldElement& xi, std::uint32_t n) {
  if (n == 0) throw ParameterError("n must be positive");
  if (xi.is_zero() || !xi.pow(n).is_one()) throw ParameterError("xi must be an n-th root of unity");
  auto d = perm_sigma(kron(power_vandermonde(xi, n), power_vandermonde(xi.inv(), n)), n);
  if (!(d == commutation_matrix(xi, n)))
    throw ConsistencyError("P_sigma (V(xi) x V(xi^-1)) differs from (xi^{jk-il})");
  return d;
}

bool square_identity(const DecompMatrix& m) {
  const auto& field = m.matrix.field();
  const auto order = static_cast<std::int64_t>(m.ordering.size());
  return m.matrix * m.matrix == SquareMatrix::scalar(FieldElement::from_int(field, order), m.matrix.dim());
}

PauliGenerators pauli_generators(std::uint32_t n, const FieldElement& xi) {
  if (n == 0) throw ParameterError("n must be positive");
  if (xi.is_zero() || xi.order() != n) throw ParameterError("xi must have multiplicative order exactly n");
  const auto& field = xi.field();
  std::vector<Field::Code> x(static_cast<std::size_t>(n) * n, 0), y(x.size(), 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    x[i * n + i] = xi.pow(n - 1 - i).code();
    y[i * n + (i + 1) % n] = 1;
  }
  PauliGenerators g{SquareMatrix(field, n, std::move(x)), SquareMatrix(field, n, std::move(y))};
  if (!(g.x * g.y == (g.y * g.x).scaled(xi))) throw ConsistencyError("XY != xi YX");

  // Flatten every X^i Y^j into a row and check the n^2 rows are independent.
  const std::size_t m = static_cast<std::size_t>(n) * n;
  std::vector<Field::Code> rows;
  rows.reserve(m * m);
  auto xi_pow = SquareMatrix::identity(field, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto prod = xi_pow;
    for (std::uint32_t j = 0; j < n; ++j) {
      rows.insert(rows.end(), prod.codes().begin(), prod.codes().end());
      prod = prod * g.y;
    }
    xi_pow = xi_pow * g.x;
  }
  if (kernels::rank(*field, std::move(rows), m, m) != m) throw ConsistencyError("X^i Y^j do not span M_n");
  return g;
}

DeterminantComparison decomposition_vs_d(std::uint32_t n, const FieldElement& e, const FieldElement& f,
                                const FieldElement& xi) {
  const auto ma = decomposition_matrix(znxzn_bicharacter(n, e, f, xi));
  auto da = determinant(ma.matrix);
  auto dd = determinant(build_D(xi, n));
  const bool eq = da == dd;
  return {std::move(da), std::move(dd), eq};
}

DetDReport det_d_report(std::uint32_t n, const FieldElement& xi) {
  const auto d = build_D(xi, n);
  const auto& field = xi.field();
  const auto one = FieldElement(field, 1);

  const std::int64_t nn = n;
  const std::int64_t exponent = (nn - 1) * (nn - 1) * (nn - nn * nn) / 2;
  auto printed = xi.pow(exponent);
  bool degenerate = false;
  for (std::uint32_t i = 1; i < n; ++i) {
    const auto factor = one - xi.pow(i);
    degenerate = degenerate || factor.is_zero();
    printed = printed * factor;
  }
  const auto vv = determinant(power_vandermonde(xi, n)) * determinant(power_vandermonde(xi.inv(), n));
  const auto oracle = vv.pow(n);

  auto det = determinant(d);
  if (degenerate && !det.is_zero()) throw ConsistencyError("degenerate xi but det D != 0");
  auto up_to_sign = [&](const FieldElement& v) { return det == v || det == -v; };
  const bool printed_ok = up_to_sign(printed);
  const bool oracle_ok = up_to_sign(oracle);
  return {n, xi.order(), std::move(det), std::move(printed), oracle, printed_ok, oracle_ok, degenerate};
}

void write_csv(std::ostream& os, const DecompMatrix& m) {
  const auto& g = m.ordering;
  const auto n = g.size();
  os << quoted("beta");
  for (std::size_t h = 0; h < n; ++h) os << ',' << quoted(FinAbGroup::element_to_string(g.element(h)));
  os << '\n';
  for (std::size_t r = 0; r < n; ++r) {
    os << quoted(FinAbGroup::element_to_string(g.element(r)));
    for (std::size_t c = 0; c < n; ++c) os << ',' << quoted(m.matrix.field()->to_string(m.matrix.at(r, c)));
    os << '\n';
  }
}

}  // namespace regdec
