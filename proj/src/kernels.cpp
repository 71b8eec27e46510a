#include "regdec/kernels.hpp"

#include <algorithm>
#include <limits>

#include "regdec/error.hpp"

namespace regdec::kernels {

namespace {

std::vector<std::size_t> addition_table(const FinAbGroup& g) {
  const auto n = g.size();
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = g.add_index(a, b);
  return t;
}

void check_square(std::size_t len, std::size_t n) {
  if (len != n * n) throw ParameterError("matrix storage does not match its dimension");
}

bool identity_holds(const Field& f, std::span<const Code> table, const std::vector<std::size_t>& add, std::size_t n,
                    std::size_t s, std::size_t t, std::size_t u) {
  const auto lhs = f.mul(table[s * n + add[t * n + u]], table[t * n + u]);
  const auto rhs = f.mul(table[add[s * n + t] * n + u], table[s * n + t]);
  return lhs == rhs;
}

// Scale row `col` so the pivot is one, then clear rows [col+1, n).
void pivot_row(const Field& f, std::vector<Code>& a, std::size_t n, std::size_t col) {
  const Code inv = f.inv(a[col * n + col]);
  for (std::size_t j = col; j < n; ++j) a[col * n + j] = f.mul(a[col * n + j], inv);
}

void eliminate_row(const Field& f, std::vector<Code>& a, std::size_t n, std::size_t col, std::size_t row) {
  const Code factor = a[row * n + col];
  if (factor == 0) return;
  for (std::size_t j = col; j < n; ++j)
    a[row * n + j] = f.sub(a[row * n + j], f.mul(factor, a[col * n + j]));
}

// Returns false when no pivot exists (singular).
bool find_and_swap_pivot(std::vector<Code>& a, std::size_t n, std::size_t col, bool& negate) {
  std::size_t r = col;
  while (r < n && a[r * n + col] == 0) ++r;
  if (r == n) return false;
  if (r != col) {
    std::swap_ranges(a.begin() + r * n, a.begin() + (r + 1) * n, a.begin() + col * n);
    negate = !negate;
  }
  return true;
}

}  // namespace

// ------------------------------------------------------------------ serial

namespace serial {

Code determinant(const Field& f, std::vector<Code> a, std::size_t n) {
  check_square(a.size(), n);
  Code det = 1;
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    if (!find_and_swap_pivot(a, n, col, negate)) return 0;
    det = f.mul(det, a[col * n + col]);
    pivot_row(f, a, n, col);
    for (std::size_t row = col + 1; row < n; ++row) eliminate_row(f, a, n, col, row);
  }
  return negate ? f.neg(det) : det;
}

std::vector<Code> multiply(const Field& f, std::span<const Code> a, std::span<const Code> b, std::size_t n) {
  check_square(a.size(), n);
  check_square(b.size(), n);
  std::vector<Code> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Code aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = f.add(c[i * n + j], f.mul(aik, b[k * n + j]));
    }
  return c;
}

std::optional<Triple> cocycle_violation(const Field& f, const FinAbGroup& g, std::span<const Code> table) {
  const auto n = g.size();
  check_square(table.size(), n);
  const auto add = addition_table(g);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u)
        if (!identity_holds(f, table, add, n, s, t, u)) return Triple{s, t, u};
  return std::nullopt;
}

std::optional<Triple> cocycle_violation_in(const Field& f, const FinAbGroup& g, std::span<const Code> table,
                                           std::span<const Triple> triples) {
  const auto n = g.size();
  check_square(table.size(), n);
  const auto add = addition_table(g);
  for (const auto& tr : triples)
    if (!identity_holds(f, table, add, n, tr[0], tr[1], tr[2])) return tr;
  return std::nullopt;
}

std::vector<std::size_t> unit_rows(std::span<const Code> m, std::size_t n) {
  check_square(m.size(), n);
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < n; ++r)
    if (std::all_of(m.begin() + r * n, m.begin() + (r + 1) * n, [](Code c) { return c == 1; })) out.push_back(r);
  return out;
}

std::vector<std::size_t> symmetric_indices(std::span<const Code> m, std::size_t n) {
  check_square(m.size(), n);
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < n; ++w) {
    bool sym = true;
    for (std::size_t x = 0; x < n && sym; ++x) sym = m[w * n + x] == m[x * n + w];
    if (sym) out.push_back(w);
  }
  return out;
}

}  // namespace serial

// ---------------------------------------------------------------- parallel

namespace parallel {

Code determinant(const Field& f, std::vector<Code> a, std::size_t n) {
  check_square(a.size(), n);
  Code det = 1;
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    if (!find_and_swap_pivot(a, n, col, negate)) return 0;
    det = f.mul(det, a[col * n + col]);
    pivot_row(f, a, n, col);
    const auto first = static_cast<std::ptrdiff_t>(col + 1);
    const auto last = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (n - col > 32)
    for (std::ptrdiff_t row = first; row < last; ++row) eliminate_row(f, a, n, col, static_cast<std::size_t>(row));
  }
  return negate ? f.neg(det) : det;
}

std::vector<Code> multiply(const Field& f, std::span<const Code> a, std::span<const Code> b, std::size_t n) {
  check_square(a.size(), n);
  check_square(b.size(), n);
  std::vector<Code> c(n * n, 0);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < n; ++k) {
      const Code aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = f.add(c[i * n + j], f.mul(aik, b[k * n + j]));
    }
  }
  return c;
}

std::optional<Triple> cocycle_violation(const Field& f, const FinAbGroup& g, std::span<const Code> table) {
  const auto n = g.size();
  check_square(table.size(), n);
  const auto add = addition_table(g);
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::size_t best = none;  // linearised (s,t,u) of the first violation
  const auto outer = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
  for (std::ptrdiff_t ss = 0; ss < outer; ++ss) {
    const auto s = static_cast<std::size_t>(ss);
    bool found = false;
    for (std::size_t t = 0; t < n && !found; ++t)
      for (std::size_t u = 0; u < n; ++u)
        if (!identity_holds(f, table, add, n, s, t, u)) {
          best = std::min(best, (s * n + t) * n + u);
          found = true;
          break;
        }
  }
  if (best == none) return std::nullopt;
  return Triple{best / (n * n), best / n % n, best % n};
}

std::optional<Triple> cocycle_violation_in(const Field& f, const FinAbGroup& g, std::span<const Code> table,
                                           std::span<const Triple> triples) {
  const auto n = g.size();
  check_square(table.size(), n);
  const auto add = addition_table(g);
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::size_t best = none;  // position in the list
  const auto count = static_cast<std::ptrdiff_t>(triples.size());
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& tr = triples[static_cast<std::size_t>(i)];
    if (!identity_holds(f, table, add, n, tr[0], tr[1], tr[2])) best = std::min(best, static_cast<std::size_t>(i));
  }
  if (best == none) return std::nullopt;
  return triples[best];
}

std::vector<std::size_t> unit_rows(std::span<const Code> m, std::size_t n) {
  check_square(m.size(), n);
  std::vector<char> keep(n, 0);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const auto row = m.subspan(static_cast<std::size_t>(r) * n, n);
    keep[static_cast<std::size_t>(r)] = std::all_of(row.begin(), row.end(), [](Code c) { return c == 1; });
  }
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < n; ++r)
    if (keep[r]) out.push_back(r);
  return out;
}

std::vector<std::size_t> symmetric_indices(std::span<const Code> m, std::size_t n) {
  check_square(m.size(), n);
  std::vector<char> keep(n, 0);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ww = 0; ww < rows; ++ww) {
    const auto w = static_cast<std::size_t>(ww);
    bool sym = true;
    for (std::size_t x = 0; x < n && sym; ++x) sym = m[w * n + x] == m[x * n + w];
    keep[w] = sym;
  }
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < n; ++w)
    if (keep[w]) out.push_back(w);
  return out;
}

}  // namespace parallel

std::size_t rank(const Field& f, std::vector<Code> a, std::size_t rows, std::size_t cols) {
  if (a.size() != rows * cols) throw ParameterError("matrix storage does not match its shape");
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t r = rk;
    while (r < rows && a[r * cols + col] == 0) ++r;
    if (r == rows) continue;
    std::swap_ranges(a.begin() + r * cols, a.begin() + (r + 1) * cols, a.begin() + rk * cols);
    const Code inv = f.inv(a[rk * cols + col]);
    for (std::size_t j = col; j < cols; ++j) a[rk * cols + j] = f.mul(a[rk * cols + j], inv);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      const Code factor = a[i * cols + col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols; ++j) a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[rk * cols + j]));
    }
    ++rk;
  }
  return rk;
}

}  // namespace regdec::kernels
