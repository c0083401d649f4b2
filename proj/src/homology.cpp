#include <algorithm>
#include <map>

#include "hinak/modrep.hpp"

namespace hinak {

namespace {

// Offsets of the summands of projective_sum(vertices) at vertex w.
std::vector<int> summand_offsets(const PresentedAlgebra& alg, const std::vector<int>& vertices, int w) {
  std::vector<int> off;
  int o = 0;
  for (int v : vertices) {
    off.push_back(o);
    o += alg.hom_dim(w, v);
  }
  off.push_back(o);
  return off;
}

}  // namespace

ProjectiveResolution min_proj_resolution(const PresentedAlgebra& alg, const MatrixModule& m, int cap) {
  if (cap < 0) throw std::invalid_argument("min_proj_resolution: negative cap");
  ProjectiveResolution res;
  MatrixModule cur = m;
  ModMap cur_incl;  // inclusion of cur into the previous term
  for (int k = 0; k <= cap; ++k) {
    if (cur.is_zero()) {
      res.complete = true;
      break;
    }
    auto pc = projective_cover(alg, cur);
    res.terms.push_back(pc.vertices);
    if (k == 0) {
      res.augmentation = pc.gens;
    } else {
      std::vector<std::vector<Rational>> imgs;
      for (std::size_t j = 0; j < pc.vertices.size(); ++j)
        imgs.push_back((cur_incl.comps[pc.vertices[j]] * Mat::column(pc.gens[j])).flatten());
      res.diffs.push_back(std::move(imgs));
    }
    auto ker = kernel(alg, pc.P, pc.epi);
    cur = std::move(ker.module);
    cur_incl = std::move(ker.inclusion);
  }
  if (!res.complete && cur.is_zero()) res.complete = true;
  res.last_syzygy = cur;
  return res;
}

MatrixModule syzygy(const PresentedAlgebra& alg, const MatrixModule& m, int k) {
  MatrixModule cur = m;
  for (int i = 0; i < k && !cur.is_zero(); ++i) {
    auto pc = projective_cover(alg, cur);
    cur = kernel(alg, pc.P, pc.epi).module;
  }
  return cur;
}

MatrixModule cosyzygy(const PresentedAlgebra& alg, const MatrixModule& m, int k) {
  return dualize(syzygy(alg.opposite(), dualize(m), k));
}

InjectiveCoresolution min_inj_coresolution(const PresentedAlgebra& alg, const MatrixModule& m, int cap) {
  auto r = min_proj_resolution(alg.opposite(), dualize(m), cap);
  return {r.terms, r.complete};
}

namespace {

// Differential Hom(P_k, N) -> Hom(P_{k+1}, N) of the Hom complex.
Mat hom_differential(const PresentedAlgebra& alg, const ProjectiveResolution& res, std::size_t k, const MatrixModule& n,
                     Actions& act) {
  const auto& from = res.terms[k];
  const auto& to = res.terms[k + 1];
  std::vector<int> col_off{0}, row_off{0};
  for (int u : from) col_off.push_back(col_off.back() + n.dims[u]);
  for (int v : to) row_off.push_back(row_off.back() + n.dims[v]);
  Mat d(row_off.back(), col_off.back());
  for (std::size_t j = 0; j < to.size(); ++j) {
    const int vj = to[j];
    if (n.dims[vj] == 0) continue;
    auto off = summand_offsets(alg, from, vj);
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (n.dims[from[i]] == 0) continue;
      const auto& cell = alg.hom_basis(vj, from[i]);
      Mat block(n.dims[vj], n.dims[from[i]]);
      for (std::size_t h = 0; h < cell.size(); ++h) {
        const Rational& c = res.diffs[k][j][off[i] + h];
        if (sgn(c) != 0) block = block + c * act(cell[h]);
      }
      d.set_block(row_off[j], col_off[i], block);
    }
  }
  return d;
}

int cochain_dim(const std::vector<int>& term, const MatrixModule& n) {
  int s = 0;
  for (int v : term) s += n.dims[v];
  return s;
}

}  // namespace

int ext_dim(const PresentedAlgebra& alg, const ProjectiveResolution& res, const MatrixModule& n, int i) {
  if (i < 0) throw std::invalid_argument("ext_dim: negative degree");
  const std::size_t len = res.terms.size();
  if (static_cast<std::size_t>(i) >= len) {
    if (res.complete) return 0;
    throw CapExceeded("ext_dim: resolution too short for degree " + std::to_string(i));
  }
  if (!res.complete && static_cast<std::size_t>(i) + 1 >= len)
    throw CapExceeded("ext_dim: resolution too short for degree " + std::to_string(i));
  Actions act(alg, n);
  int dim_c = cochain_dim(res.terms[i], n);
  int rank_out = 0, rank_in = 0;
  if (static_cast<std::size_t>(i) + 1 < len) rank_out = static_cast<int>(rank(hom_differential(alg, res, i, n, act)));
  if (i > 0) rank_in = static_cast<int>(rank(hom_differential(alg, res, i - 1, n, act)));
  return dim_c - rank_out - rank_in;
}

int ext_dim(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n, int i) {
  auto res = min_proj_resolution(alg, m, i + 1);
  return ext_dim(alg, res, n, i);
}

MatrixModule nakayama_functor(const PresentedAlgebra& alg, const std::vector<int>& vertices) {
  return injective_sum(alg, vertices);
}

namespace {

// Generator images of Hom(phi, A): Hom(P_to, A) -> Hom(P_from, A) over the
// opposite algebra, for phi: P_from -> P_to with generator images gens.
std::vector<std::vector<Rational>> dual_generators(const PresentedAlgebra& alg, const std::vector<int>& from,
                                                   const std::vector<int>& to,
                                                   const std::vector<std::vector<Rational>>& gens) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < to.size(); ++i) {
    const int ui = to[i];
    std::vector<Rational> vec;
    for (std::size_t j = 0; j < from.size(); ++j) {
      auto off = summand_offsets(alg, to, from[j]);
      const int dim = alg.hom_dim(from[j], ui);
      for (int h = 0; h < dim; ++h) vec.push_back(gens[j][off[i] + h]);
    }
    out.push_back(std::move(vec));
  }
  return out;
}

}  // namespace

ModMap nakayama_map(const PresentedAlgebra& alg, const std::vector<int>& from, const std::vector<int>& to,
                    const std::vector<std::vector<Rational>>& gens) {
  auto op = alg.opposite();
  auto dg = dual_generators(alg, from, to, gens);
  // Hom(phi, A): P^op(to) -> P^op(from), then D.
  ModMap star = map_from_projective(op, to, dg, projective_sum(op, from));
  return dualize(star);
}

MatrixModule transpose(const PresentedAlgebra& alg, const MatrixModule& m) {
  auto op = alg.opposite();
  auto res = min_proj_resolution(alg, m, 1);
  if (res.terms.empty()) return zero_module(op);
  const auto& p0 = res.terms[0];
  std::vector<int> p1 = res.terms.size() > 1 ? res.terms[1] : std::vector<int>{};
  std::vector<std::vector<Rational>> d1 = res.diffs.empty() ? std::vector<std::vector<Rational>>{} : res.diffs[0];
  auto dg = dual_generators(alg, p1, p0, d1);
  MatrixModule target = projective_sum(op, p1);
  ModMap f = map_from_projective(op, p0, dg, target);
  return cokernel(op, target, f).module;
}

MatrixModule ar_translate(const PresentedAlgebra& alg, const MatrixModule& m) { return dualize(transpose(alg, m)); }

MatrixModule ar_translate_inv(const PresentedAlgebra& alg, const MatrixModule& m) {
  return transpose(alg.opposite(), dualize(m));
}

MatrixModule tau_d(const PresentedAlgebra& alg, int d, const MatrixModule& m) {
  if (d < 1) throw std::invalid_argument("tau_d: d must be positive");
  return ar_translate(alg, syzygy(alg, m, d - 1));
}

MatrixModule tau_d_inv(const PresentedAlgebra& alg, int d, const MatrixModule& m) {
  if (d < 1) throw std::invalid_argument("tau_d_inv: d must be positive");
  return ar_translate_inv(alg, cosyzygy(alg, m, d - 1));
}

namespace {

// Dimension of the span of {post o f} for f in fs (maps into the middle).
int span_of_composites(const std::vector<ModMap>& fs, const ModMap& post) {
  if (fs.empty()) return 0;
  std::vector<std::vector<Rational>> cols;
  for (const auto& f : fs) cols.push_back(flatten(compose(f, post)));
  if (cols.front().empty()) return 0;
  Mat m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return static_cast<int>(rank(m));
}

int span_of_precomposites(const ModMap& pre, const std::vector<ModMap>& gs) {
  if (gs.empty()) return 0;
  std::vector<std::vector<Rational>> cols;
  for (const auto& g : gs) cols.push_back(flatten(compose(pre, g)));
  if (cols.front().empty()) return 0;
  Mat m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return static_cast<int>(rank(m));
}

}  // namespace

int stable_hom_dim(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n) {
  int full = hom_dim(alg, m, n);
  if (full == 0 || n.is_zero()) return full;
  auto pc = projective_cover(alg, n);
  return full - span_of_composites(hom_space(alg, m, pc.P), pc.epi);
}

int costable_hom_dim(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n) {
  int full = hom_dim(alg, m, n);
  if (full == 0 || m.is_zero()) return full;
  auto env = injective_envelope(alg, m);
  return full - span_of_precomposites(env.mono, hom_space(alg, env.I, n));
}

std::string DimResult::to_string() const {
  return capped ? ">=" + std::to_string(value) : std::to_string(value);
}

DimResult gldim(const PresentedAlgebra& alg, int cap) {
  if (cap < 0) throw std::invalid_argument("gldim: negative cap");
  DimResult r;
  for (int v = 0; v < alg.num_vertices(); ++v) {
    auto res = min_proj_resolution(alg, simple_module(alg, v), cap);
    if (!res.complete) return {cap + 1, true};
    r.value = std::max(r.value, res.proj_dim());
  }
  return r;
}

DimResult domdim(const PresentedAlgebra& alg, int cap) {
  std::map<int, bool> proj_inj;
  auto injective_is_projective = [&](int w) {
    auto it = proj_inj.find(w);
    if (it != proj_inj.end()) return it->second;
    bool p = is_projective(alg, injective_module(alg, w));
    proj_inj[w] = p;
    return p;
  };
  DimResult best{cap, true};
  for (int v = 0; v < alg.num_vertices(); ++v) {
    auto co = min_inj_coresolution(alg, projective_module(alg, v), cap);
    int k = 0;
    bool all = true;
    for (const auto& term : co.terms) {
      bool ok = std::all_of(term.begin(), term.end(), injective_is_projective);
      if (!ok) {
        all = false;
        break;
      }
      ++k;
    }
    DimResult here;
    if (all && co.complete)
      here = {cap, true};  // every term projective: infinite
    else if (all)
      here = {k, true};
    else
      here = {k, false};
    if (here.value < best.value || (here.value == best.value && !here.capped)) best = here;
  }
  return best;
}

std::string to_string(IsoResult r) {
  switch (r) {
    case IsoResult::Isomorphic: return "isomorphic";
    case IsoResult::NotIsomorphic: return "not isomorphic";
    case IsoResult::Undetermined: return "undetermined";
  }
  return "";
}

namespace {

bool invertible(const ModMap& f) {
  for (const auto& c : f.comps)
    if (c.rows() != c.cols() || rank(c) != c.rows()) return false;
  return true;
}

}  // namespace

IsoResult is_isomorphic(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n) {
  if (m.dims != n.dims) return IsoResult::NotIsomorphic;
  if (m.is_zero()) return IsoResult::Isomorphic;
  auto H = hom_space(alg, m, n);
  if (H.empty()) return IsoResult::NotIsomorphic;
  for (const auto& f : H)
    if (invertible(f)) return IsoResult::Isomorphic;
  if (H.size() == 1) return IsoResult::NotIsomorphic;
  // Small integer combinations, enumerated in a fixed order.
  const std::size_t k = std::min<std::size_t>(H.size(), 6);
  std::vector<int> coeff(k, -2);
  for (;;) {
    bool nonzero = std::any_of(coeff.begin(), coeff.end(), [](int c) { return c != 0; });
    if (nonzero) {
      ModMap f;
      for (std::size_t v = 0; v < H[0].comps.size(); ++v) {
        Mat c(H[0].comps[v].rows(), H[0].comps[v].cols());
        for (std::size_t i = 0; i < k; ++i)
          if (coeff[i]) c = c + Rational(coeff[i]) * H[i].comps[v];
        f.comps.push_back(std::move(c));
      }
      if (invertible(f)) return IsoResult::Isomorphic;
    }
    std::size_t i = 0;
    while (i < k && coeff[i] == 2) coeff[i++] = -2;
    if (i == k) break;
    ++coeff[i];
  }
  return IsoResult::Undetermined;
}

EndoAlgebra endomorphism_algebra(const PresentedAlgebra& alg, const std::vector<MatrixModule>& modules,
                                 const std::vector<OrdSeq>& labels) {
  const int nv = static_cast<int>(modules.size());
  if (static_cast<int>(labels.size()) != nv) throw std::invalid_argument("endomorphism_algebra: label count mismatch");
  if (nv == 0) throw std::invalid_argument("endomorphism_algebra: no modules");
  // Hom spaces as column matrices of flattened maps.
  std::vector<std::vector<std::vector<ModMap>>> H(nv, std::vector<std::vector<ModMap>>(nv));
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w) H[v][w] = hom_space(alg, modules[v], modules[w]);
  auto as_matrix = [](const std::vector<ModMap>& fs, std::size_t len) {
    Mat m(len, fs.size());
    for (std::size_t j = 0; j < fs.size(); ++j) {
      auto x = flatten(fs[j]);
      for (std::size_t i = 0; i < len; ++i) m(i, j) = x[i];
    }
    return m;
  };
  auto flat_len = [&](int v, int w) {
    std::size_t s = 0;
    for (int x = 0; x < alg.num_vertices(); ++x) s += static_cast<std::size_t>(modules[v].dims[x]) * modules[w].dims[x];
    return s;
  };
  auto from_vector = [&](int v, int w, const Mat& col) {
    ModMap f;
    std::size_t k = 0;
    for (int x = 0; x < alg.num_vertices(); ++x) {
      Mat c(modules[w].dims[x], modules[v].dims[x]);
      for (std::size_t cc = 0; cc < c.cols(); ++cc)
        for (std::size_t r = 0; r < c.rows(); ++r) c(r, cc) = col(k++, 0);
      f.comps.push_back(std::move(c));
    }
    return f;
  };
  // Radical: everything between different vertices; on the diagonal the
  // kernel of the trace form (nilpotent endomorphisms in characteristic 0).
  std::vector<std::vector<Mat>> rad(nv, std::vector<Mat>(nv));
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w) {
      Mat all = as_matrix(H[v][w], flat_len(v, w));
      if (v != w) {
        rad[v][w] = all;
        continue;
      }
      const auto& E = H[v][v];
      Mat form(E.size(), E.size());
      for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = 0; j < E.size(); ++j) {
          ModMap p = compose(E[j], E[i]);
          Rational tr = 0;
          for (const auto& c : p.comps)
            for (std::size_t t = 0; t < c.rows(); ++t) tr += c(t, t);
          form(i, j) = tr;
        }
      Mat k = kernel_basis(form);
      rad[v][v] = all * k;
      if (static_cast<std::size_t>(E.size()) != k.cols() + 1)
        throw std::invalid_argument("endomorphism_algebra: module " + format_tuple(labels[v]) + " is not a brick-like local module");
    }
  // rad^2 and an adapted basis per (v, w): [identity], arrows, rad^2.
  AlgebraSpec spec;
  spec.family = Family::Endomorphism;
  spec.d = static_cast<int>(labels.front().size());
  AlgebraBuilder bld(spec);
  for (const auto& l : labels) bld.add_vertex(l);
  EndoAlgebra out;
  std::vector<std::vector<Mat>> basis(nv, std::vector<Mat>(nv));  // columns: adapted basis
  std::vector<std::vector<std::vector<int>>> ids(nv, std::vector<std::vector<int>>(nv));
  std::vector<std::vector<int>> arrows_here;
  std::vector<ModMap> maps(nv);
  for (int v = 0; v < nv; ++v) maps[v] = identity_map(modules[v]);
  std::vector<std::tuple<int, int, int>> arrow_list;  // src, tgt, element
  struct Pending {
    int v, w;
    Mat col;
    bool arrow;
  };
  std::vector<Pending> pending;
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w) {
      std::size_t len = flat_len(v, w);
      Mat r2(len, 0);
      for (int u = 0; u < nv; ++u)
        for (std::size_t i = 0; i < rad[v][u].cols(); ++i)
          for (std::size_t j = 0; j < rad[u][w].cols(); ++j) {
            ModMap p = compose(from_vector(v, u, rad[v][u].col(i)), from_vector(u, w, rad[u][w].col(j)));
            auto x = flatten(p);
            r2 = hstack(r2, Mat::column(x));
          }
      Mat r2b = r2.cols() ? column_basis(r2) : r2;
      Mat R = rad[v][w];
      // Arrows: columns of R independent modulo rad^2.
      Mat acc = r2b;
      std::size_t rk = acc.cols() ? rank(acc) : 0;
      Mat arrows(len, 0);
      for (std::size_t j = 0; j < R.cols(); ++j) {
        Mat trial = hstack(acc, R.col(j));
        std::size_t r = rank(trial);
        if (r > rk) {
          acc = trial;
          rk = r;
          arrows = hstack(arrows, R.col(j));
        }
      }
      for (std::size_t j = 0; j < arrows.cols(); ++j) pending.push_back({v, w, arrows.col(j), true});
      for (std::size_t j = 0; j < r2b.cols(); ++j) pending.push_back({v, w, r2b.col(j), false});
      Mat full = v == w ? Mat::column(flatten(identity_map(modules[v]))) : Mat(len, 0);
      full = hstack(full, hstack(arrows, r2b));
      basis[v][w] = full;
      if (v == w) ids[v][w].push_back(v);
    }
  for (auto& p : pending) {
    int e = bld.add_basis(p.v, p.w, 0);
    ids[p.v][p.w].push_back(e);
    if (static_cast<int>(maps.size()) <= e) maps.resize(e + 1);
    maps[e] = from_vector(p.v, p.w, p.col);
    if (p.arrow) bld.add_arrow(p.v, p.w, static_cast<int>(arrow_list.size()), 0, e);
    if (p.arrow) arrow_list.emplace_back(p.v, p.w, e);
  }
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w)
      if (basis[v][w].cols() != H[v][w].size())
        throw std::logic_error("endomorphism_algebra: adapted basis does not span the Hom space");
  // Composition table.
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v)
      for (int w = 0; w < nv; ++w) {
        if (ids[u][v].empty() || ids[v][w].empty() || basis[u][w].cols() == 0) continue;
        for (int f : ids[u][v])
          for (int g : ids[v][w]) {
            auto x = flatten(compose(maps[f], maps[g]));
            Mat col = Mat::column(x);
            if (col.is_zero()) continue;
            auto sol = solve(basis[u][w], col);
            if (!sol) throw std::logic_error("endomorphism_algebra: composite outside the Hom space");
            std::vector<Term> res;
            for (std::size_t i = 0; i < sol->rows(); ++i)
              if (sgn((*sol)(i, 0)) != 0) res.push_back({ids[u][w][i], (*sol)(i, 0)});
            bld.set_composition(f, g, std::move(res));
          }
      }
  out.alg = bld.finish();
  out.maps = std::move(maps);
  return out;
}

}  // namespace hinak
