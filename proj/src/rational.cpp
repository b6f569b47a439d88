#include "ivbs/rational.hpp"

#include <algorithm>
#include <cctype>

#include "ivbs/errors.hpp"

namespace ivbs {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw InputError("malformed rational '" + std::string(text) + "'");
  Rational q(Integer(strip_plus(num)));
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
      throw InputError("malformed rational '" + std::string(text) + "'");
    Integer d(std::string{den});
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    q /= Rational(d);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(row, sel);
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b) {
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt; // 0 = nonzero
  if (pivots.size() != n) return std::nullopt;
  RatVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = aug(r, n);
  return x;
}

std::vector<RatVector> nullspace(const RatMatrix& a) {
  RatMatrix m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> find_nonnegative_solution(const RatMatrix& a, const RatVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Tableau [A | I | b] with one artificial per row; rhs made nonnegative.
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  RatMatrix t(m, width);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = sgn(b[r]) < 0;
    for (std::size_t c = 0; c < n; ++c) t(r, c) = flip ? Rational(-a(r, c)) : a(r, c);
    t(r, n + r) = 1;
    t(r, rhs) = flip ? Rational(-b[r]) : b[r];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  // Reduced costs of the phase-one objective (sum of artificials).
  RatVector reduced(width);
  for (std::size_t c = 0; c < width; ++c) {
    if (c >= n && c < rhs) continue;
    for (std::size_t r = 0; r < m; ++r) reduced[c] -= t(r, c);
  }

  while (true) {
    std::size_t enter = width;
    for (std::size_t c = 0; c < rhs; ++c)
      if (sgn(reduced[c]) < 0) {
        enter = c;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(t(r, enter)) <= 0) continue;
      Rational ratio = t(r, rhs) / t(r, enter);
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break; // unbounded direction; cannot happen for a bounded objective

    const Rational inv = 1 / t(leave, enter);
    for (std::size_t c = 0; c < width; ++c) t(leave, c) *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || sgn(t(r, enter)) == 0) continue;
      const Rational f = t(r, enter);
      for (std::size_t c = 0; c < width; ++c) t(r, c) -= f * t(leave, c);
    }
    if (sgn(reduced[enter]) != 0) {
      const Rational f = reduced[enter];
      for (std::size_t c = 0; c < width; ++c) reduced[c] -= f * t(leave, c);
    }
    basis[leave] = enter;
  }

  // reduced[rhs] holds minus the objective value.
  if (sgn(reduced[rhs]) != 0) return std::nullopt;
  RatVector x(n);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) x[basis[r]] = t(r, rhs);
  return x;
}

} // namespace ivbs
