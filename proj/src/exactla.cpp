#include "hinak/exactla.hpp"

#include <sstream>
#include <stdexcept>

namespace hinak {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Mat m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::column(const std::vector<Rational>& v) {
  Mat m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::col(std::size_t c) const { return block(0, c, rows_, 1); }

Mat Mat::cols_subset(const std::vector<std::size_t>& idx) const {
  Mat m(rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r) m(r, j) = (*this)(r, idx[j]);
  return m;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Mat::block out of range");
  Mat m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("Mat::set_block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

std::vector<Rational> Mat::flatten() const {
  std::vector<Rational> v;
  v.reserve(a_.size());
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  Mat m(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Rational& xik = x(i, k);
      if (sgn(xik) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j)
        if (sgn(y(k, j)) != 0) m(i, j) += xik * y(k, j);
    }
  return m;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix sum: dimension mismatch");
  Mat m = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) += y(i, j);
  return m;
}

Mat operator-(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix difference: dimension mismatch");
  Mat m = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) -= y(i, j);
  return m;
}

Mat operator*(const Rational& s, const Mat& x) {
  Mat m = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) *= s;
  return m;
}

Mat hstack(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows()) throw std::invalid_argument("hstack: row mismatch");
  Mat m(x.rows(), x.cols() + y.cols());
  m.set_block(0, 0, x);
  m.set_block(0, x.cols(), y);
  return m;
}

Mat vstack(const Mat& x, const Mat& y) {
  if (x.cols() != y.cols()) throw std::invalid_argument("vstack: column mismatch");
  Mat m(x.rows() + y.rows(), x.cols());
  m.set_block(0, 0, x);
  m.set_block(x.rows(), 0, y);
  return m;
}

std::size_t rank(const Mat& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  std::vector<mpz_class> a(nr * nc);
  for (std::size_t r = 0; r < nr; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < nc; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < nc; ++c) {
      mpz_class v = m(r, c).get_num() * (l / m(r, c).get_den());
      a[r * nc + c] = v;
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * nc + c]; };
  mpz_class prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < nc && rk < nr; ++c) {
    std::size_t piv = rk;
    while (piv < nr && at(piv, c) == 0) ++piv;
    if (piv == nr) continue;
    if (piv != rk)
      for (std::size_t j = 0; j < nc; ++j) std::swap(at(piv, j), at(rk, j));
    for (std::size_t r = rk + 1; r < nr; ++r) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        at(r, j) = (at(rk, c) * at(r, j) - at(r, c) * at(rk, j)) / prev;
      }
      at(r, c) = 0;
    }
    prev = at(rk, c);
    ++rk;
  }
  return rk;
}

Rref rref(const Mat& m) {
  Rref out{m, {}};
  Mat& a = out.r;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t piv = row;
    while (piv < a.rows() && sgn(a(piv, c)) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    Rational inv = 1 / a(row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (sgn(a(row, j)) != 0) a(r, j) -= f * a(row, j);
    }
    out.pivots.push_back(c);
    ++row;
  }
  return out;
}

Mat kernel_basis(const Mat& m) {
  Rref e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Mat k(m.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], j) = -e.r(i, free[j]);
  }
  return k;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Rref e = rref(hstack(m, b));
  const std::size_t n = m.cols();
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    if (e.pivots[i] >= n) return std::nullopt;
  Mat x(n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.r(i, n + j);
  return x;
}

Mat cokernel_projection(const Mat& m) {
  // Rows of Q span the left null space of m.
  Mat k = kernel_basis(m.transpose());
  return k.transpose();
}

Mat column_basis(const Mat& m) {
  Rref e = rref(m);
  return m.cols_subset(e.pivots);
}

Mat complement_basis(const Mat& sub, std::size_t n) {
  Mat cur = sub.cols() ? sub : Mat(n, 0);
  std::size_t rk = rank(cur);
  std::vector<std::size_t> added;
  for (std::size_t i = 0; i < n && rk < n; ++i) {
    Mat e(n, 1);
    e(i, 0) = 1;
    Mat trial = hstack(cur, e);
    std::size_t r2 = rank(trial);
    if (r2 > rk) {
      cur = trial;
      rk = r2;
      added.push_back(i);
    }
  }
  Mat out(n, added.size());
  for (std::size_t j = 0; j < added.size(); ++j) out(added[j], j) = 1;
  return out;
}

Mat intersect_columns(const Mat& x, const Mat& y) {
  // Solve x a = y b; the intersection is spanned by x a.
  Mat k = kernel_basis(hstack(x, Rational(-1) * y));
  Mat a = k.block(0, 0, x.cols(), k.cols());
  return column_basis(x * a);
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Mat::identity(m.rows()));
  if (!x || rank(m) != m.rows()) return std::nullopt;
  return x;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << to_string(m(r, c));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace hinak
