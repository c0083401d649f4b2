#include <doctest.h>

#include "hinak/exactla.hpp"

using namespace hinak;

namespace {

struct Lcg {
  unsigned long long s;
  int next(int lo, int hi) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<int>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
  }
};

// Low rank on purpose: products of thin random factors.
Mat random_mat(Lcg& g, std::size_t r, std::size_t c) {
  std::size_t k = static_cast<std::size_t>(g.next(0, static_cast<int>(std::min(r, c))));
  Mat a(r, k), b(k, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = g.next(-3, 3);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < c; ++j) b(i, j) = Rational(g.next(-4, 4)) / g.next(1, 3);
  Mat m = a * b;
  if (g.next(0, 3) == 0 && r && c) m(0, 0) += 1;
  return m;
}

// Oracle: textbook Gaussian elimination on rationals, counting pivots.
std::size_t naive_rank(Mat m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      Rational f = m(i, c) / m(rank, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rank on fixed matrices") {
  CHECK(rank(Mat::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Mat::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(rank(Mat::from_rows({{0, 0}, {0, 0}})) == 0);
  CHECK(rank(Mat(0, 4)) == 0);
  Mat q(2, 2);
  q(0, 0) = Rational(1, 3);
  q(0, 1) = Rational(1, 2);
  q(1, 0) = Rational(2, 3);
  q(1, 1) = 1;
  CHECK(rank(q) == 1);
}

TEST_CASE("rank agrees with naive elimination") {
  Lcg g{1};
  for (int t = 0; t < 300; ++t) {
    Mat m = random_mat(g, static_cast<std::size_t>(g.next(1, 6)), static_cast<std::size_t>(g.next(1, 6)));
    CHECK(rank(m) == naive_rank(m));
    CHECK(rank(m.transpose()) == rank(m));
  }
}

TEST_CASE("kernel, solve, cokernel, inverse") {
  Lcg g{2};
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = static_cast<std::size_t>(g.next(1, 6)), c = static_cast<std::size_t>(g.next(1, 6));
    Mat m = random_mat(g, r, c);
    const std::size_t rk = rank(m);

    Mat k = kernel_basis(m);
    CHECK(k.rows() == c);
    CHECK(k.cols() == c - rk);
    CHECK((m * k).is_zero());
    CHECK(rank(k) == k.cols());

    Mat x0(c, 1);
    for (std::size_t i = 0; i < c; ++i) x0(i, 0) = g.next(-2, 2);
    Mat b = m * x0;
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m * *x == b);

    Mat q = cokernel_projection(m);
    CHECK(q.rows() == r - rk);
    CHECK((q * m).is_zero());
    CHECK(rank(q) == q.rows());

    Mat cb = column_basis(m);
    CHECK(cb.cols() == rk);
    CHECK(rank(hstack(cb, m)) == rk);

    Mat comp = complement_basis(cb, r);
    CHECK(comp.cols() == r - rk);
    CHECK(rank(hstack(cb, comp)) == r);

    auto rr = rref(m);
    CHECK(rr.pivots.size() == rk);
    CHECK(rref(rr.r).r == rr.r);
  }
}

TEST_CASE("solve reports inconsistency") {
  Mat m = Mat::from_rows({{1, 1}, {1, 1}});
  Mat b = Mat::from_rows({{1}, {2}});
  CHECK_FALSE(solve(m, b));
}

TEST_CASE("inverse") {
  Lcg g{3};
  int invertible = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.next(1, 5));
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = g.next(-3, 3);
    auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == n));
    if (inv) {
      ++invertible;
      CHECK(m * *inv == Mat::identity(n));
      CHECK(*inv * m == Mat::identity(n));
    }
  }
  CHECK(invertible > 0);
}

TEST_CASE("intersect_columns") {
  Mat x = Mat::from_rows({{1, 0}, {0, 1}, {0, 0}});
  Mat y = Mat::from_rows({{1, 0}, {1, 0}, {0, 1}});
  Mat z = intersect_columns(x, y);
  CHECK(z.cols() == 1);
  CHECK(rank(hstack(z, Mat::from_rows({{1}, {1}, {0}}))) == 1);
  // dim(X cap Y) = dim X + dim Y - dim(X + Y) on random pairs.
  Lcg g{4};
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.next(1, 5));
    Mat a = column_basis(random_mat(g, n, static_cast<std::size_t>(g.next(1, 4))));
    Mat b = column_basis(random_mat(g, n, static_cast<std::size_t>(g.next(1, 4))));
    Mat i = intersect_columns(a, b);
    CHECK(i.cols() + rank(hstack(a, b)) == a.cols() + b.cols());
    CHECK(rank(hstack(a, i)) == a.cols());
    CHECK(rank(hstack(b, i)) == b.cols());
  }
}

TEST_CASE("rational text") {
  CHECK(to_string(Rational(-3) / 6) == "-1/2");
  CHECK(rational_from_string("4/6") == Rational(2, 3));
  CHECK(rational_from_string("-7") == Rational(-7));
  CHECK_THROWS(rational_from_string("1/0"));
  CHECK_THROWS(rational_from_string("abc"));
}
