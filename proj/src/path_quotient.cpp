#include <algorithm>
#include <stdexcept>

#include "hinak/presentation.hpp"

namespace hinak {

std::optional<int> PathQuotient::piece_index(int src, int tgt, int length) const {
  auto it = index.find({src, tgt, length});
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<int, std::vector<Rational>>> PathQuotient::reduce(int src,
                                                                         const std::vector<int>& path) const {
  auto start = piece_index(src, src, 0);
  if (!start) return std::nullopt;
  int p = *start;
  std::vector<Rational> x{Rational(1)};
  for (int a : path) {
    if (arrows.at(a).src != pieces[p].tgt) throw std::invalid_argument("reduce: path is not composable");
    auto it = step.find({p, a});
    if (it == step.end()) return std::nullopt;
    Mat y = it->second * Mat::column(x);
    auto next = piece_index(src, arrows[a].tgt, pieces[p].length + 1);
    if (!next || y.is_zero()) return std::nullopt;
    p = *next;
    x = y.flatten();
  }
  return std::make_pair(p, x);
}

PathQuotient path_quotient(int num_vertices, const std::vector<Arrow>& arrows, const std::vector<Relation>& relations,
                           int max_len) {
  PathQuotient q;
  q.arrows = arrows;
  q.max_len = max_len;
  struct Rel {
    int src, tgt, length;
    const Relation* r;
  };
  std::vector<Rel> rels;
  for (const auto& r : relations) {
    if (r.empty()) continue;
    int len = static_cast<int>(r.front().arrows.size());
    if (len == 0) throw std::invalid_argument("path_quotient: relation with a trivial path");
    int s = arrows.at(r.front().arrows.front()).src, t = arrows.at(r.front().arrows.back()).tgt;
    for (const auto& term : r) {
      if (static_cast<int>(term.arrows.size()) != len) throw std::invalid_argument("path_quotient: inhomogeneous relation");
      if (arrows.at(term.arrows.front()).src != s || arrows.at(term.arrows.back()).tgt != t)
        throw std::invalid_argument("path_quotient: relation terms with different endpoints");
      for (std::size_t i = 1; i < term.arrows.size(); ++i)
        if (arrows.at(term.arrows[i - 1]).tgt != arrows.at(term.arrows[i]).src)
          throw std::invalid_argument("path_quotient: relation term is not a path");
    }
    rels.push_back({s, t, len, &r});
  }
  std::vector<std::vector<int>> arrows_in(num_vertices);
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a) arrows_in[arrows[a].tgt].push_back(a);

  for (int u = 0; u < num_vertices; ++u) {
    // by_len[k][v] = piece index or -1
    std::vector<std::vector<int>> by_len;
    by_len.push_back(std::vector<int>(num_vertices, -1));
    by_len[0][u] = static_cast<int>(q.pieces.size());
    q.index[{u, u, 0}] = by_len[0][u];
    q.pieces.push_back({u, u, 0, {{}}});

    // Coordinates (in piece at degree k0) of e * (first arrows of a term).
    auto push = [&](int piece, std::vector<Rational> x, const std::vector<int>& arrs,
                    std::size_t count) -> std::optional<std::pair<int, std::vector<Rational>>> {
      int p = piece;
      for (std::size_t i = 0; i < count; ++i) {
        auto it = q.step.find({p, arrs[i]});
        if (it == q.step.end()) return std::nullopt;
        int k = q.pieces[p].length + 1;
        int nxt = by_len[k][arrows[arrs[i]].tgt];
        if (nxt < 0) return std::nullopt;
        x = (it->second * Mat::column(x)).flatten();
        p = nxt;
      }
      return std::make_pair(p, x);
    };

    for (int k = 1; k <= max_len; ++k) {
      by_len.push_back(std::vector<int>(num_vertices, -1));
      bool any = false;
      for (int v = 0; v < num_vertices; ++v) {
        // Generators: (basis element of piece (u,x,k-1), arrow x -> v).
        struct Gen {
          int piece, arrow;
          std::size_t offset;
        };
        std::vector<Gen> gens;
        std::size_t ngen = 0;
        for (int a : arrows_in[v]) {
          int p = by_len[k - 1][arrows[a].src];
          if (p < 0) continue;
          gens.push_back({p, a, ngen});
          ngen += q.pieces[p].basis_paths.size();
        }
        if (ngen == 0) continue;
        auto gen_offset = [&](int p, int a) -> std::optional<std::size_t> {
          for (const auto& g : gens)
            if (g.piece == p && g.arrow == a) return g.offset;
          return std::nullopt;
        };
        // Relation images.
        std::vector<std::vector<Rational>> relvecs;
        for (const auto& rel : rels) {
          if (rel.tgt != v || rel.length > k) continue;
          int p0 = by_len[k - rel.length][rel.src];
          if (p0 < 0) continue;
          std::size_t dim0 = q.pieces[p0].basis_paths.size();
          for (std::size_t e = 0; e < dim0; ++e) {
            std::vector<Rational> vec(ngen);
            bool nonzero = false;
            for (const auto& term : *rel.r) {
              std::vector<Rational> x(dim0);
              x[e] = 1;
              auto pre = push(p0, x, term.arrows, term.arrows.size() - 1);
              if (!pre) continue;
              auto off = gen_offset(pre->first, term.arrows.back());
              if (!off) continue;
              for (std::size_t i = 0; i < pre->second.size(); ++i)
                if (sgn(pre->second[i]) != 0) {
                  vec[*off + i] += term.coeff * pre->second[i];
                  nonzero = true;
                }
            }
            if (nonzero) relvecs.push_back(std::move(vec));
          }
        }
        Mat S(ngen, relvecs.size());
        for (std::size_t j = 0; j < relvecs.size(); ++j)
          for (std::size_t i = 0; i < ngen; ++i) S(i, j) = relvecs[j][i];
        Mat Q = relvecs.empty() ? Mat::identity(ngen) : cokernel_projection(S);
        if (Q.rows() == 0) continue;
        // Normalise so that a set of generators maps to the unit vectors.
        Rref e = rref(Q);
        Mat piv = Q.cols_subset(e.pivots);
        Q = *inverse(piv) * Q;
        PathQuotient::Piece piece{u, v, k, {}};
        for (auto c : e.pivots) {
          const Gen* g = nullptr;
          for (const auto& gg : gens)
            if (c >= gg.offset && c < gg.offset + q.pieces[gg.piece].basis_paths.size()) g = &gg;
          auto path = q.pieces[g->piece].basis_paths[c - g->offset];
          path.push_back(g->arrow);
          piece.basis_paths.push_back(std::move(path));
        }
        int idx = static_cast<int>(q.pieces.size());
        by_len[k][v] = idx;
        q.index[{u, v, k}] = idx;
        for (const auto& g : gens) {
          Mat m = Q.block(0, g.offset, Q.rows(), q.pieces[g.piece].basis_paths.size());
          if (!m.is_zero()) q.step[{g.piece, g.arrow}] = m;
        }
        q.pieces.push_back(std::move(piece));
        any = true;
      }
      if (!any) break;
      if (k == max_len) q.vanishes_at_max_len = false;
    }
  }
  return q;
}

PresentedAlgebra algebra_from_quotient(const AlgebraSpec& spec, const std::vector<std::vector<int>>& labels,
                                       const std::vector<Arrow>& arrows, const std::vector<Relation>& relations,
                                       const PathQuotient& q) {
  if (!q.vanishes_at_max_len) throw std::logic_error("algebra_from_quotient: quotient not known to be finite");
  AlgebraBuilder bld(spec, spec.orbit_modulus());
  const int nv = static_cast<int>(labels.size());
  for (const auto& l : labels) bld.add_vertex(l);
  // Basis id of coordinate i of piece p.
  std::vector<std::vector<int>> elt(q.pieces.size());
  for (int p = 0; p < static_cast<int>(q.pieces.size()); ++p) {
    const auto& pc = q.pieces[p];
    for (std::size_t i = 0; i < pc.basis_paths.size(); ++i)
      elt[p].push_back(pc.length == 0 ? pc.src : bld.add_basis(pc.src, pc.tgt, pc.length));
  }
  for (const auto& a : arrows) {
    auto r = q.reduce(a.src, {static_cast<int>(&a - arrows.data())});
    if (!r) throw std::logic_error("algebra_from_quotient: an arrow vanishes");
    int e = -1;
    for (std::size_t i = 0; i < r->second.size(); ++i)
      if (sgn(r->second[i]) != 0) {
        if (e >= 0 || r->second[i] != 1) throw std::logic_error("algebra_from_quotient: arrows are not independent");
        e = elt[r->first][i];
      }
    bld.add_arrow(a.src, a.tgt, a.coord, a.shift, e);
  }
  std::vector<std::vector<int>> from(nv);
  for (int p = 0; p < static_cast<int>(q.pieces.size()); ++p) from[q.pieces[p].src].push_back(p);
  for (int p = 0; p < static_cast<int>(q.pieces.size()); ++p)
    for (int p2 : from[q.pieces[p].tgt]) {
      for (std::size_t i = 0; i < q.pieces[p].basis_paths.size(); ++i)
        for (std::size_t j = 0; j < q.pieces[p2].basis_paths.size(); ++j) {
          auto path = q.pieces[p].basis_paths[i];
          const auto& tail = q.pieces[p2].basis_paths[j];
          path.insert(path.end(), tail.begin(), tail.end());
          auto r = q.reduce(q.pieces[p].src, path);
          if (!r) continue;
          std::vector<Term> res;
          for (std::size_t c = 0; c < r->second.size(); ++c)
            if (sgn(r->second[c]) != 0) res.push_back({elt[r->first][c], r->second[c]});
          bld.set_composition(elt[p][i], elt[p2][j], std::move(res));
        }
    }
  for (const auto& r : relations) bld.add_relation(r);
  return bld.finish();
}

}  // namespace hinak
