#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hinak/presentation.hpp"

using namespace hinak;

namespace {

// Oracle vertex set: all weakly increasing tuples in [0, n) with
// len <= l_{last}.
std::vector<OrdSeq> oracle_vertices(const std::vector<int>& series, int d) {
  std::vector<OrdSeq> out;
  const int n = static_cast<int>(series.size());
  std::vector<int> t(static_cast<std::size_t>(d), 0);
  for (;;) {
    if (std::is_sorted(t.begin(), t.end()) && t.back() - t.front() + 1 <= series[static_cast<std::size_t>(t.back())])
      out.push_back(t);
    int i = d - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == n - 1) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return out;
}

// Arrows v -> v + e_i inside the vertex set.
int oracle_arrows(const std::vector<OrdSeq>& vs) {
  std::set<OrdSeq> set(vs.begin(), vs.end());
  int count = 0;
  for (const auto& v : vs)
    for (std::size_t i = 0; i < v.size(); ++i) {
      OrdSeq w = v;
      ++w[i];
      count += static_cast<int>(set.count(w));
    }
  return count;
}

std::vector<int> maximal_series(int n) {
  std::vector<int> s;
  for (int i = 1; i <= n; ++i) s.push_back(i);
  return s;
}

int quotient_dimension(const PresentedAlgebra& alg, int max_len, bool* finite = nullptr) {
  std::vector<Arrow> arrows;
  for (int a = 0; a < alg.num_arrows(); ++a) arrows.push_back(alg.arrow(a));
  auto q = path_quotient(alg.num_vertices(), arrows, alg.relations(), max_len);
  if (finite) *finite = q.vanishes_at_max_len;
  int dim = 0;
  for (const auto& p : q.pieces) dim += static_cast<int>(p.basis_paths.size());
  return dim;
}

int count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream is(text);
  std::string line;
  int k = 0;
  while (std::getline(is, line)) k += line.find(needle) != std::string::npos;
  return k;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(AlgebraSpec::linear_an(4, 2).validate());
  CHECK_THROWS(AlgebraSpec::linear_an(0, 2).validate());
  CHECK_THROWS(AlgebraSpec::linear_an(3, 0).validate());
  CHECK_THROWS(AlgebraSpec::kupisch_a(KupischSeries::linear({1, 3}), 2).validate());
  CHECK_THROWS(AlgebraSpec::window(3, 1, 2).validate());
  CHECK_THROWS(AlgebraSpec::selfinj_atilde(3, 1, 2).validate());
  CHECK_THROWS(AlgebraSpec::tube_trunc(3, 2, 0).validate());
  auto s = AlgebraSpec::atilde_kupisch(KupischSeries::cyclic({2, 3, 3}), 2);
  CHECK(spec_from_json(spec_to_json(s)) == s);
  CHECK(s.orbit_modulus() == 3);
  CHECK_FALSE(AlgebraSpec::linear_an(3, 2).orbit_modulus());
}

TEST_CASE("vertex and arrow counts against the combinatorial oracle") {
  struct Case {
    std::vector<int> series;
    int d;
  };
  for (const auto& c : {Case{maximal_series(3), 2}, Case{maximal_series(4), 2}, Case{maximal_series(4), 3},
                        Case{maximal_series(5), 2}, Case{{1, 2, 2, 3}, 2}, Case{{1, 2, 2, 3}, 3}, Case{{1, 2, 3, 3, 2}, 2},
                        Case{{1, 2, 2, 2}, 3}}) {
    auto vs = oracle_vertices(c.series, c.d);
    auto alg = build(AlgebraSpec::kupisch_a(KupischSeries::linear(c.series), c.d));
    CAPTURE(format_tuple(c.series));
    CAPTURE(c.d);
    CHECK(alg.num_vertices() == static_cast<int>(vs.size()));
    CHECK(alg.num_arrows() == oracle_arrows(vs));
    for (const auto& v : vs) CHECK(alg.vertex_index(v));
  }
}

TEST_CASE("frozen sizes") {
  // dim A_3^(2): interlacing pairs in os_3^2, counted by the oracle above.
  auto a32 = build(AlgebraSpec::linear_an(3, 2));
  CHECK(a32.dimension() == 15);
  auto a42 = build(AlgebraSpec::linear_an(4, 2));
  CHECK(a42.num_vertices() == 10);
  CHECK(a42.num_arrows() == 12);
  CHECK(build(AlgebraSpec::linear_an(4, 3)).num_arrows() == 30);
  CHECK(build(AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 2)).num_arrows() == 8);
  CHECK(build(AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 3)).num_arrows() == 15);
  auto si = build(AlgebraSpec::selfinj_atilde(3, 3, 2));
  CHECK(si.num_vertices() == 9);
}

TEST_CASE("hom dimensions follow the interlacing predicate") {
  auto alg = build(AlgebraSpec::linear_an(4, 2));
  for (int v = 0; v < alg.num_vertices(); ++v)
    for (int w = 0; w < alg.num_vertices(); ++w)
      CHECK(alg.hom_dim(v, w) == (interlaces(alg.vertex(v), alg.vertex(w)) ? 1 : 0));
}

TEST_CASE("composition is associative and unital") {
  for (const auto& spec : {AlgebraSpec::linear_an(3, 2), AlgebraSpec::selfinj_atilde(2, 3, 2),
                           AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 2)}) {
    auto alg = build(spec);
    const int B = alg.num_basis();
    auto mult = [&](const std::vector<Term>& xs, int g) {
      std::map<int, Rational> acc;
      for (const auto& x : xs)
        for (const auto& t : alg.compose(x.elt, g)) acc[t.elt] += x.coeff * t.coeff;
      std::vector<Term> out;
      for (auto& [e, c] : acc)
        if (c != 0) out.push_back({e, c});
      return out;
    };
    auto lmult = [&](int f, const std::vector<Term>& ys) {
      std::map<int, Rational> acc;
      for (const auto& y : ys)
        for (const auto& t : alg.compose(f, y.elt)) acc[t.elt] += y.coeff * t.coeff;
      std::vector<Term> out;
      for (auto& [e, c] : acc)
        if (c != 0) out.push_back({e, c});
      return out;
    };
    auto same = [](const std::vector<Term>& x, const std::vector<Term>& y) {
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].elt != y[i].elt || x[i].coeff != y[i].coeff) return false;
      return true;
    };
    for (int f = 0; f < B; ++f) {
      const auto bf = alg.basis(f);
      auto idl = alg.compose(alg.identity(bf.src), f);
      REQUIRE(idl.size() == 1);
      CHECK(idl[0].elt == f);
      for (int w = 0; w < alg.num_vertices(); ++w)
        for (int g : alg.hom_basis(bf.tgt, w))
          for (int x = 0; x < alg.num_vertices(); ++x)
            for (int h : alg.hom_basis(w, x)) CHECK(same(mult(alg.compose(f, g), h), lmult(f, alg.compose(g, h))));
    }
  }
}

TEST_CASE("path quotient of the relations recovers the algebra") {
  // Two routes to the same algebra: the closed-form basis and the quotient
  // of the path algebra by the exported relations.
  for (const auto& spec :
       {AlgebraSpec::linear_an(3, 2), AlgebraSpec::linear_an(4, 3), AlgebraSpec::linear_an(4, 1),
        AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 2), AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 3),
        AlgebraSpec::window(1, 4, 2), AlgebraSpec::zl_window(3, 0, 5, 2), AlgebraSpec::selfinj_atilde(3, 3, 2),
        AlgebraSpec::selfinj_atilde(3, 3, 1), AlgebraSpec::tube_trunc(3, 2, 5),
        AlgebraSpec::atilde_kupisch(KupischSeries::cyclic({2, 3, 3}), 2)}) {
    auto alg = build(spec);
    bool finite = false;
    CAPTURE(spec.describe());
    CHECK(quotient_dimension(alg, 40, &finite) == alg.dimension());
    CHECK(finite);
  }
}

TEST_CASE("algebra_from_quotient agrees with build") {
  auto alg = build(AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 2));
  std::vector<Arrow> arrows;
  for (int a = 0; a < alg.num_arrows(); ++a) arrows.push_back(alg.arrow(a));
  std::vector<std::vector<int>> labels;
  for (int v = 0; v < alg.num_vertices(); ++v) labels.push_back(alg.vertex(v));
  auto q = path_quotient(alg.num_vertices(), arrows, alg.relations(), 20);
  auto re = algebra_from_quotient(alg.spec(), labels, arrows, alg.relations(), q);
  REQUIRE(re.num_vertices() == alg.num_vertices());
  for (int v = 0; v < alg.num_vertices(); ++v)
    for (int w = 0; w < alg.num_vertices(); ++w) CHECK(re.hom_dim(v, w) == alg.hom_dim(v, w));
}

TEST_CASE("mesh presentation matches the tuple presentation") {
  for (int d : {1, 2})
    for (int ell : {3, 4}) {
      auto mesh = mesh_presentation(d, ell, 0, 2 * ell);
      auto z = build(AlgebraSpec::zl_window(ell, 0, 2 * ell, d + 1));
      CAPTURE(d);
      CAPTURE(ell);
      CHECK(mesh.num_vertices() == z.num_vertices());
      CHECK(mesh.num_arrows() == z.num_arrows());
      CHECK(mesh.dimension() == z.dimension());
      for (int v = 0; v < mesh.num_vertices(); ++v) {
        const auto& lab = mesh.vertex(v);
        OrdSeq slopes(lab.begin(), lab.end() - 1);
        CHECK(z.vertex_index(mesh_from_coordinates(slopes, lab.back())));
      }
    }
}

TEST_CASE("opposite algebra") {
  auto alg = build(AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 2));
  auto op = alg.opposite();
  CHECK(op.is_opposite());
  CHECK_FALSE(op.opposite().is_opposite());
  for (int v = 0; v < alg.num_vertices(); ++v)
    for (int w = 0; w < alg.num_vertices(); ++w) CHECK(op.hom_dim(v, w) == alg.hom_dim(w, v));
  for (int a = 0; a < alg.num_arrows(); ++a) {
    CHECK(op.arrow(a).src == alg.arrow(a).tgt);
    CHECK(op.arrow(a).tgt == alg.arrow(a).src);
  }
  bool finite = false;
  CHECK(quotient_dimension(op, 20, &finite) == alg.dimension());
}

TEST_CASE("exports") {
  auto alg = build(AlgebraSpec::linear_an(4, 2));
  std::string dot = export_dot(alg);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count_lines_with(dot, "[label=") - count_lines_with(dot, "->") == 10);
  CHECK(count_lines_with(dot, "->") == 12);
  std::string qpa = export_qpa(alg);
  CHECK(qpa.find("Quiver(") != std::string::npos);
  CHECK(qpa.find("KQ/rels") != std::string::npos);

  for (const auto& p : {alg, alg.opposite(), build(AlgebraSpec::tube_trunc(3, 2, 5))}) {
    auto back = import_json(export_json(p));
    CHECK(back.is_opposite() == p.is_opposite());
    REQUIRE(back.num_vertices() == p.num_vertices());
    CHECK(back.num_arrows() == p.num_arrows());
    CHECK(back.dimension() == p.dimension());
    for (int v = 0; v < p.num_vertices(); ++v)
      for (int w = 0; w < p.num_vertices(); ++w) CHECK(back.hom_dim(v, w) == p.hom_dim(v, w));
    CHECK(export_json(back) == export_json(p));
  }
}
