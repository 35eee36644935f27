#include "kvv/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace kvv {

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw DomainError("not an integer literal: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+') {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  Integer num;
  Integer den;
  try {
    num = parse_integer(text.substr(0, slash));
    den = parse_integer(den_text);
  } catch (const DomainError&) {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  if (den == 0) throw DomainError("zero denominator: '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

RationalMatrix to_rational(const IntMatrix& m) {
  std::vector<Rational> entries;
  entries.reserve(m.entries().size());
  for (const auto& e : m.entries()) entries.emplace_back(e);
  return RationalMatrix(m.rows(), m.cols(), std::move(entries));
}

IntVector SnfDecomposition::invariant_factors() const {
  IntVector diag;
  const auto n = std::min(d.rows(), d.cols());
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) diag.push_back(d(i, i));
  return diag;
}

namespace {

// Row-reduces `a` in place (Gauss-Jordan) and mirrors every row operation on
// `aug`. Returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a, RationalMatrix* aug) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = row; r < a.rows(); ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (!pivot) continue;
    a.swap_rows(row, *pivot);
    if (aug) aug->swap_rows(row, *pivot);

    const Rational inv = 1 / a(row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) *= inv;
    if (aug)
      for (std::size_t c = 0; c < aug->cols(); ++c) (*aug)(row, c) *= inv;

    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
      if (aug)
        for (std::size_t c = 0; c < aug->cols(); ++c) (*aug)(r, c) -= f * (*aug)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalVector solve_linear(const RationalMatrix& g, const RationalVector& b) {
  if (!g.is_square()) throw DimensionError("solve_linear: matrix is not square");
  if (g.rows() != b.size()) throw DimensionError("solve_linear: right-hand side has wrong length");
  RationalMatrix a = g;
  RationalMatrix rhs(b.size(), 1, b);
  if (row_reduce(a, &rhs).size() != g.rows()) {
    throw SingularMatrixError("solve_linear: matrix is singular");
  }
  RationalVector x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
  return x;
}

RationalMatrix inverse(const RationalMatrix& g) {
  if (!g.is_square()) throw DimensionError("inverse: matrix is not square");
  RationalMatrix a = g;
  RationalMatrix inv = RationalMatrix::identity(g.rows());
  if (row_reduce(a, &inv).size() != g.rows()) {
    throw SingularMatrixError("inverse: matrix is singular");
  }
  return inv;
}

Rational determinant(const RationalMatrix& g) {
  if (!g.is_square()) throw DimensionError("determinant: matrix is not square");
  RationalMatrix a = g;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      a.swap_rows(pivot, k);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rational f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& g) {
  // Bareiss fraction-free elimination.
  if (!g.is_square()) throw DimensionError("determinant: matrix is not square");
  IntMatrix a = g;
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return row_reduce(a, nullptr).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto add_row = [&](std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t c = 0; c < cols; ++c) d(target, c) += factor * d(source, c);
    for (std::size_t c = 0; c < rows; ++c) u(target, c) += factor * u(source, c);
  };
  auto add_col = [&](std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t r = 0; r < rows; ++r) d(r, target) += factor * d(r, source);
    for (std::size_t r = 0; r < cols; ++r) v(r, target) += factor * v(r, source);
  };

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (d(r, c) != 0 && (!best || abs(d(r, c)) < abs(d(best->first, best->second))))
            best = {r, c};
      if (!best) return {std::move(u), std::move(d), std::move(v)};

      d.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      d.swap_cols(t, best->second);
      v.swap_cols(t, best->second);

      bool reduced = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (d(r, t) == 0) continue;
        Integer q = d(r, t) / d(t, t);  // truncating
        add_row(r, t, -q);
        if (d(r, t) != 0) reduced = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (d(t, c) == 0) continue;
        Integer q = d(t, c) / d(t, t);
        add_col(c, t, -q);
        if (d(t, c) != 0) reduced = false;
      }
      if (!reduced) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < rows && !offending; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (d(r, c) % d(t, t) != 0) {
            offending = r;
            break;
          }
      if (offending) {
        add_row(t, *offending, 1);
        continue;
      }
      break;
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

bool is_negative_definite(const RationalMatrix& g) {
  if (!g.is_symmetric()) throw DomainError("is_negative_definite: matrix is not symmetric");
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    const int sign = sgn(determinant(g.leading(k)));
    const int expected = (k % 2 == 0) ? 1 : -1;
    if (sign != expected) return false;
  }
  return true;
}

Inertia inertia(const RationalMatrix& g) {
  if (!g.is_symmetric()) throw DomainError("inertia: matrix is not symmetric");
  RationalMatrix a = g;
  const std::size_t n = a.rows();

  auto add_to = [&](std::size_t target, std::size_t source, const Rational& f) {
    for (std::size_t c = 0; c < n; ++c) a(target, c) += f * a(source, c);
    for (std::size_t r = 0; r < n; ++r) a(r, target) += f * a(r, source);
  };

  Inertia result;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        a.swap_rows(k, j);
        a.swap_cols(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) {
          ++result.zero;
          continue;
        }
        add_to(k, j, 1);  // a(k,k) becomes 2 a(k,j) != 0
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      add_to(i, k, -a(i, k) / a(k, k));
    }
    if (a(k, k) > 0) {
      ++result.positive;
    } else {
      ++result.negative;
    }
  }
  return result;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace kvv
