#pragma once

// Exact dense linear algebra over Q.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sph {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

bool is_integer(const Rational& q);

/// Renders q as "p" or "p/q".
std::string to_string(const Rational& q);

/// Parses "p" or "p/q"; throws sph::Error(Parse) on malformed input.
Rational parse_rational(const std::string& text);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> row(std::size_t r) const;
  Matrix transpose() const;
  bool is_zero() const;

  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::vector<Rational> apply(std::span<const Rational> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Horizontal concatenation; row counts must agree.
Matrix hconcat(const Matrix& a, const Matrix& b);
/// Vertical concatenation; column counts must agree.
Matrix vconcat(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of the right null space, one basis vector per column.
Matrix kernel(const Matrix& m);

/// Column indices of a maximal linearly independent subset, chosen greedily
/// from the left.
std::vector<std::size_t> independent_columns(const Matrix& m);

/// Unique solution x of A x = b, or nullopt when the system is inconsistent.
/// Requires A to have full column rank.
std::optional<std::vector<Rational>> solve_unique(const Matrix& a, std::span<const Rational> b);

/// Determinant of a square matrix (fraction-free Bareiss elimination).
Rational determinant(const Matrix& m);

}  // namespace sph
