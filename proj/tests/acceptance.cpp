// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hinak/verify.hpp"

using namespace hinak;

namespace {

struct Outcome {
  bool ok = true;
  long checked = 0;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    ++checked;
    if (!cond) {
      ok = false;
      if (problems.size() < 8) problems.push_back(what);
    }
  }
  // Every check of the report whose claim is listed (all claims if empty)
  // must pass, and at least one must be present.
  void absorb(const CheckReport& rep, const std::set<std::string>& claims = {}) {
    long seen = 0;
    for (const auto& c : rep.checks) {
      if (!claims.empty() && !claims.count(c.claim)) continue;
      ++seen;
      std::string params;
      for (const auto& [k, v] : c.params) params += " " + k + "=" + v;
      require(c.status == Status::Pass, rep.subject + " " + c.claim + params + ": " + to_string(c.status) + " expected " +
                                            c.expected + " got " + c.actual);
    }
    require(seen > 0, rep.subject + ": no checks for " + rep.suite);
  }
};

std::string count_text(const PresentedAlgebra& alg) {
  return std::to_string(alg.num_vertices()) + "/" + std::to_string(alg.num_arrows());
}

int dot_count(const std::string& dot, bool arrows) {
  std::istringstream is(dot);
  std::string line;
  int k = 0;
  while (std::getline(is, line)) {
    if (line.find("[label=") == std::string::npos) continue;
    k += (line.find("->") != std::string::npos) == arrows;
  }
  return k;
}

// 1. brute-force Hom between interval modules against the interlacing indicator.
Outcome hom_formula() {
  Outcome o;
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) {
      auto spec = AlgebraSpec::linear_an(n, d);
      auto alg = build(spec);
      auto S = enumerate_os(n, d + 1);
      std::vector<MatrixModule> M;
      for (const auto& l : S) M.push_back(interval_module(alg, l));
      std::vector<int> got(S.size() * S.size());
      run_items(static_cast<int>(S.size()), ExecPolicy::Parallel, [&](int i, CheckResult&) {
        for (std::size_t j = 0; j < S.size(); ++j)
          got[static_cast<std::size_t>(i) * S.size() + j] = hom_dim(alg, M[static_cast<std::size_t>(i)], M[j]);
      });
      for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = 0; j < S.size(); ++j)
          o.require(got[i * S.size() + j] == (interlaces(S[i], S[j]) ? 1 : 0),
                    spec.describe() + " Hom(" + format_tuple(S[i]) + "," + format_tuple(S[j]) + ")");
    }
  return o;
}

// 2. Ext^i = 0 for 0 < i < d and Ext^d(M(l), M(m)) = [m ~> tau_d(l)].
Outcome rigidity_ext_d() {
  Outcome o;
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) {
      auto spec = AlgebraSpec::linear_an(n, d);
      auto alg = build(spec);
      auto S = enumerate_os(n, d + 1);
      std::vector<MatrixModule> M;
      for (const auto& l : S) M.push_back(interval_module(alg, l));
      const std::size_t N = S.size();
      std::vector<std::vector<int>> got(N * N);
      run_items(static_cast<int>(N), ExecPolicy::Parallel, [&](int i, CheckResult&) {
        auto res = min_proj_resolution(alg, M[static_cast<std::size_t>(i)], d + 1);
        for (std::size_t j = 0; j < N; ++j)
          for (int k = 1; k <= d; ++k) got[static_cast<std::size_t>(i) * N + j].push_back(ext_dim(alg, res, M[j], k));
      });
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          const auto& e = got[i * N + j];
          const std::string pair = spec.describe() + " (" + format_tuple(S[i]) + "," + format_tuple(S[j]) + ")";
          for (int k = 1; k < d; ++k) o.require(e[static_cast<std::size_t>(k - 1)] == 0, pair + " Ext^" + std::to_string(k));
          const int want = interlaces(S[j], tau_tuple(S[i], 1)) ? 1 : 0;
          o.require(e[static_cast<std::size_t>(d - 1)] == want, pair + " Ext^d");
        }
    }
  return o;
}

// 3. resolution shapes and Omega^d on Kupisch quotients.
Outcome resolution_shapes() {
  Outcome o;
  for (const auto& spec : {AlgebraSpec::linear_an(4, 2), AlgebraSpec::linear_an(3, 3)})
    o.absorb(check_resolutions(spec), {"projective-resolution", "injective-coresolution"});
  for (int d : {2, 3}) o.absorb(check_resolutions(AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), d)), {"omega-d"});
  return o;
}

// 4. Loewy length of P_{(i,...,i)} is l_i.
Outcome kupisch_lengths() {
  Outcome o;
  const std::vector<int> ell{1, 2, 2, 3};
  for (int d = 1; d <= 3; ++d) {
    auto alg = build(AlgebraSpec::kupisch_a(KupischSeries::linear(ell), d));
    for (int i = 0; i < 4; ++i) {
      auto v = alg.vertex_index(std::vector<int>(static_cast<std::size_t>(d), i));
      o.require(v.has_value(), "missing diagonal vertex");
      if (!v) continue;
      o.require(loewy_length(alg, projective_module(alg, *v)) == ell[static_cast<std::size_t>(i)],
                alg.spec().describe() + " P_" + std::to_string(i));
    }
  }
  return o;
}

// 5. tau_d on summands.
Outcome tau_agreement() {
  Outcome o;
  for (const auto& spec : {AlgebraSpec::linear_an(4, 2), AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 2),
                           AlgebraSpec::selfinj_atilde(3, 3, 2), AlgebraSpec::tube_trunc(3, 2, 5)})
    o.absorb(check_tau(spec), {"tau-interval", "tau-loewy", "tau-simple"});
  return o;
}

// 6. cluster-tilting certificate, plus Ext^1 rigidity computed directly.
Outcome cluster_tilting() {
  Outcome o;
  auto spec = AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 2);
  o.absorb(check_cluster_tilting(spec), {"generator", "cogenerator", "rigid-dz", "end-gldim", "end-domdim"});
  auto alg = build(spec);
  auto S = ct_summands(spec);
  std::vector<MatrixModule> M;
  for (const auto& l : S) M.push_back(interval_module(alg, l));
  for (std::size_t i = 0; i < S.size(); ++i) {
    auto res = min_proj_resolution(alg, M[i], 2);
    for (std::size_t j = 0; j < S.size(); ++j)
      o.require(ext_dim(alg, res, M[j], 1) == 0, "Ext^1(" + format_tuple(S[i]) + "," + format_tuple(S[j]) + ")");
  }
  return o;
}

// 7. End of the cluster-tilting module is the next algebra in the tower.
Outcome endo_tower() {
  Outcome o;
  for (auto [n, d] : {std::pair{3, 1}, {3, 2}, {2, 3}}) o.absorb(check_endo_tower(n, d));
  return o;
}

// 8. homological embeddings.
Outcome embeddings() {
  Outcome o;
  o.absorb(check_homological_embedding(AlgebraSpec::window(1, 3, 2), AlgebraSpec::window(0, 4, 2), 3), {"ext-agreement"});
  o.absorb(check_homological_embedding(AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2}), 2),
                                       AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 3}), 2), 1),
           {"ext-agreement"});
  o.absorb(check_homological_embedding(AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 2),
                                       AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 3, 3}), 2), 1),
           {"ext-agreement"});
  return o;
}

// 9. selfinjectivity and tau_d-periodicity.
Outcome selfinjective() {
  Outcome o;
  auto spec = AlgebraSpec::selfinj_atilde(3, 3, 2);
  o.absorb(check_selfinjective(spec));
  o.absorb(check_orbit_periodicity(spec), {"tau-period"});
  return o;
}

// 10. mesh presentation against the tuple presentation.
Outcome mesh_iso() {
  Outcome o;
  for (int d : {1, 2})
    for (int ell : {3, 4}) o.absorb(check_mesh_iso(d, ell, 0, 2 * ell));
  return o;
}

// 11. global dimension.
Outcome global_dimension() {
  Outcome o;
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) o.absorb(check_gldim(AlgebraSpec::linear_an(n, d)));
  int finite = 0;
  std::set<std::vector<int>> seen;
  for (const auto& start : {std::vector<int>{1, 2, 2}, {1, 2, 2, 3}, {1, 2, 2, 2}, {1, 2, 3, 2}})
    for (const auto& s : kupisch_hasse_path(KupischSeries::linear(start))) {
      if (!seen.insert(s.lengths).second) continue;
      for (int d = 1; d <= 3; ++d) {
        auto spec = AlgebraSpec::kupisch_a(s, d);
        if (!check_cluster_tilting(spec).passed()) continue;
        auto g = gldim(build(spec), 4 * (d + 1));
        if (g.capped) continue;
        ++finite;
        o.require(g.value % d == 0, spec.describe() + " gldim " + g.to_string());
      }
    }
  o.require(finite > 0, "no Kupisch instance with finite gldim");
  return o;
}

// 12. quiver sizes, frozen from an independent enumeration.
Outcome figure_counts() {
  Outcome o;
  struct Want {
    AlgebraSpec spec;
    int vertices, arrows;
  };
  for (const auto& w : {Want{AlgebraSpec::linear_an(4, 2), 10, 12}, Want{AlgebraSpec::linear_an(4, 3), 20, 30},
                        Want{AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 2), 8, 8},
                        Want{AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 3), 13, 15}}) {
    auto alg = build(w.spec);
    auto dot = export_dot(alg);
    o.require(dot_count(dot, false) == w.vertices && dot_count(dot, true) == w.arrows,
              w.spec.describe() + " " + count_text(alg));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {"1 hom formula, LinearAn n<=5 d<=3", hom_formula},
      {"2 rigidity and Ext^d indicator", rigidity_ext_d},
      {"3 resolution shapes", resolution_shapes},
      {"4 Kupisch lengths", kupisch_lengths},
      {"5 tau_d agreement", tau_agreement},
      {"6 cluster-tilting certificate", cluster_tilting},
      {"7 endomorphism tower", endo_tower},
      {"8 homological embeddings", embeddings},
      {"9 selfinjectivity and periodicity", selfinjective},
      {"10 mesh presentation", mesh_iso},
      {"11 global dimension", global_dimension},
      {"12 quiver sizes", figure_counts},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %s (%ld checks, %.2fs)\n", o.ok ? "PASS" : "FAIL", name, o.checked, s);
    for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
