#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hinak {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

// Dense row-major matrix of exact rationals. Zero rows or columns are allowed.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);

  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<std::vector<long>>& rows);
  static Mat column(const std::vector<Rational>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const Mat& o) const;

  Mat transpose() const;
  Mat col(std::size_t c) const;
  Mat cols_subset(const std::vector<std::size_t>& idx) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  // Entries listed column by column.
  std::vector<Rational> flatten() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Rational& s, const Mat& x);

Mat hstack(const Mat& x, const Mat& y);
Mat vstack(const Mat& x, const Mat& y);

// Rank by fraction-free (Bareiss) elimination over the integers, after
// clearing denominators row by row.
std::size_t rank(const Mat& m);

struct Rref {
  Mat r;
  std::vector<std::size_t> pivots;
};
Rref rref(const Mat& m);

// Columns form a basis of the null space.
Mat kernel_basis(const Mat& m);
// Any x with m x = b, if one exists.
std::optional<Mat> solve(const Mat& m, const Mat& b);
// Q of shape (rows - rank) x rows with ker Q = column space of m.
Mat cokernel_projection(const Mat& m);
// A maximal linearly independent subset of the columns.
Mat column_basis(const Mat& m);
// Extends independent columns `sub` (inside k^n) by standard basis vectors to
// a basis of k^n; returns only the added vectors.
Mat complement_basis(const Mat& sub, std::size_t n);
Mat intersect_columns(const Mat& x, const Mat& y);
std::optional<Mat> inverse(const Mat& m);

std::string to_string(const Mat& m);

}  // namespace hinak
