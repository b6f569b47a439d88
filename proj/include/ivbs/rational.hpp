#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ivbs {

using Rational = mpq_class;
using Integer = mpz_class;
using RatVector = std::vector<Rational>;

/// Accepts `n`, `-n`, `p/q`; the result is canonicalized. Throws InputError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

/// The unique x with A x = b, or nullopt if the system is inconsistent or
/// underdetermined. A may have more rows than columns.
std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b);

/// A basis of { x : A x = 0 }.
std::vector<RatVector> nullspace(const RatMatrix& a);

/// Some x >= 0 with A x = b, or nullopt when none exists. Exact phase-one
/// simplex with Bland's rule, so it always terminates.
std::optional<RatVector> find_nonnegative_solution(const RatMatrix& a, const RatVector& b);

} // namespace ivbs
