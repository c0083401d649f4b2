#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hinak/presentation.hpp"

namespace hinak {

namespace {

std::uint64_t pair_key(int f, int g) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f)) << 32) | static_cast<std::uint32_t>(g);
}

}  // namespace

std::optional<int> PresentedAlgebra::vertex_index(const std::vector<int>& label) const {
  const auto& idx = core_->index;
  auto it = std::lower_bound(idx.begin(), idx.end(), label,
                             [](const std::pair<std::vector<int>, int>& p, const std::vector<int>& l) { return p.first < l; });
  if (it == idx.end() || it->first != label) return std::nullopt;
  return it->second;
}

Arrow PresentedAlgebra::arrow(int a) const {
  Arrow x = core_->arrows.at(a);
  if (op_) std::swap(x.src, x.tgt);
  return x;
}

std::optional<int> PresentedAlgebra::find_arrow(int src, int coord) const {
  for (int a : arrows_from(src))
    if (core_->arrows[a].coord == coord) return a;
  return std::nullopt;
}

BasisElt PresentedAlgebra::basis(int e) const {
  BasisElt b = core_->basis.at(e);
  if (op_) std::swap(b.src, b.tgt);
  return b;
}

const std::vector<int>& PresentedAlgebra::hom_basis(int v, int w) const {
  if (v < 0 || w < 0 || v >= num_vertices() || w >= num_vertices()) throw std::out_of_range("hom_basis: bad vertex");
  const auto& row = op_ ? core_->by_pair[w] : core_->by_pair[v];
  const auto& cell = row[op_ ? v : w];
  return cell;
}

std::optional<int> PresentedAlgebra::find_basis(int v, int w, int shift) const {
  for (int e : hom_basis(v, w))
    if (core_->basis[e].shift == shift) return e;
  return std::nullopt;
}

std::vector<Term> PresentedAlgebra::compose(int f, int g) const {
  if (basis(f).tgt != basis(g).src) throw std::invalid_argument("compose: morphisms are not composable");
  auto key = op_ ? pair_key(g, f) : pair_key(f, g);
  auto it = core_->comp.find(key);
  if (it == core_->comp.end()) return {};
  return it->second;
}

std::vector<PathTerm> PresentedAlgebra::factorization(int e) const {
  auto f = core_->fact.at(e);
  if (op_)
    for (auto& t : f) std::reverse(t.arrows.begin(), t.arrows.end());
  return f;
}

std::vector<Relation> PresentedAlgebra::relations() const {
  auto rels = core_->relations;
  if (op_)
    for (auto& r : rels)
      for (auto& t : r) std::reverse(t.arrows.begin(), t.arrows.end());
  return rels;
}

PresentedAlgebra PresentedAlgebra::opposite() const {
  PresentedAlgebra o = *this;
  o.op_ = !op_;
  return o;
}

PresentedAlgebra opposite(const PresentedAlgebra& alg) { return alg.opposite(); }

int algebra_dimension(const PresentedAlgebra& alg) { return alg.dimension(); }

int hom_dim(const PresentedAlgebra& alg, const OrdSeq& v, const OrdSeq& w) {
  auto iv = alg.vertex_index(v), iw = alg.vertex_index(w);
  if (!iv || !iw) throw std::invalid_argument("hom_dim: not a vertex");
  return alg.hom_dim(*iv, *iw);
}

AlgebraBuilder::AlgebraBuilder(AlgebraSpec spec, std::optional<int> orbit_modulus)
    : core_(std::make_unique<PresentedAlgebra::Core>()) {
  core_->spec = std::move(spec);
  core_->orbit_modulus = orbit_modulus;
}

int AlgebraBuilder::add_vertex(std::vector<int> label) {
  int v = static_cast<int>(core_->vertices.size());
  core_->vertices.push_back(std::move(label));
  for (auto& row : core_->by_pair) row.emplace_back();
  core_->by_pair.emplace_back(core_->vertices.size());
  core_->arrows_out.emplace_back();
  core_->arrows_in.emplace_back();
  core_->identity.push_back(add_basis(v, v, 0));
  return v;
}

int AlgebraBuilder::add_basis(int src, int tgt, int shift) {
  int e = static_cast<int>(core_->basis.size());
  core_->basis.push_back({src, tgt, shift});
  core_->by_pair[src][tgt].push_back(e);
  return e;
}

int AlgebraBuilder::add_arrow(int src, int tgt, int coord, int shift, int elt) {
  int a = static_cast<int>(core_->arrows.size());
  core_->arrows.push_back({src, tgt, coord, shift});
  core_->arrow_elt.push_back(elt);
  core_->arrows_out[src].push_back(a);
  core_->arrows_in[tgt].push_back(a);
  return a;
}

void AlgebraBuilder::set_composition(int f, int g, std::vector<Term> result) {
  std::erase_if(result, [](const Term& t) { return sgn(t.coeff) == 0; });
  if (result.empty()) {
    core_->comp.erase(pair_key(f, g));
    return;
  }
  core_->comp[pair_key(f, g)] = std::move(result);
}

void AlgebraBuilder::add_relation(Relation r) { core_->relations.push_back(std::move(r)); }

void AlgebraBuilder::compose_by_shift() {
  auto& c = *core_;
  const int nv = static_cast<int>(c.vertices.size());
  std::vector<std::vector<int>> into(nv), outof(nv);
  for (int e = 0; e < static_cast<int>(c.basis.size()); ++e) {
    into[c.basis[e].tgt].push_back(e);
    outof[c.basis[e].src].push_back(e);
  }
  for (int v = 0; v < nv; ++v)
    for (int f : into[v])
      for (int g : outof[v]) {
        int u = c.basis[f].src, w = c.basis[g].tgt, s = c.basis[f].shift + c.basis[g].shift;
        for (int h : c.by_pair[u][w])
          if (c.basis[h].shift == s) {
            c.comp[pair_key(f, g)] = {Term{h, Rational(1)}};
            break;
          }
      }
}

PresentedAlgebra AlgebraBuilder::finish() {
  auto& c = *core_;
  const int nv = static_cast<int>(c.vertices.size());
  for (auto& row : c.by_pair)
    for (auto& cell : row)
      std::sort(cell.begin(), cell.end(), [&](int x, int y) { return c.basis[x].shift < c.basis[y].shift; });
  c.index.clear();
  for (int v = 0; v < nv; ++v) c.index.emplace_back(c.vertices[v], v);
  std::sort(c.index.begin(), c.index.end());
  for (std::size_t i = 1; i < c.index.size(); ++i)
    if (c.index[i].first == c.index[i - 1].first) throw std::logic_error("duplicate vertex label");

  // Express every basis element through paths of arrows. Paths whose class is
  // already in the span of kept paths are pruned, which keeps the search
  // linear in the dimension.
  c.fact.assign(c.basis.size(), {});
  for (int u = 0; u < nv; ++u) {
    struct Kept {
      std::vector<int> path;
      int end;
      std::vector<Rational> vec;  // coordinates in by_pair[u][end]
    };
    std::vector<Kept> kept;
    std::vector<Mat> span(nv);
    for (int v = 0; v < nv; ++v) span[v] = Mat(c.by_pair[u][v].size(), 0);
    auto coord_of = [&](int v, int e) {
      const auto& cell = c.by_pair[u][v];
      return static_cast<std::size_t>(std::find(cell.begin(), cell.end(), e) - cell.begin());
    };
    auto try_keep = [&](std::vector<int> path, int end, std::vector<Rational> vec) {
      Mat col = Mat::column(vec);
      if (col.is_zero()) return false;
      Mat trial = hstack(span[end], col);
      if (rank(trial) == span[end].cols()) return false;
      span[end] = trial;
      kept.push_back({std::move(path), end, std::move(vec)});
      return true;
    };
    {
      std::vector<Rational> vec(c.by_pair[u][u].size());
      vec[coord_of(u, c.identity[u])] = 1;
      try_keep({}, u, vec);
    }
    for (std::size_t k = 0; k < kept.size(); ++k) {
      for (int a : c.arrows_out[kept[k].end]) {
        int x = kept[k].end;
        int y = c.arrows[a].tgt;
        std::vector<Rational> vec(c.by_pair[u][y].size());
        const auto& cell = c.by_pair[u][x];
        for (std::size_t i = 0; i < cell.size(); ++i) {
          if (sgn(kept[k].vec[i]) == 0) continue;
          auto it = c.comp.find(pair_key(cell[i], c.arrow_elt[a]));
          if (it == c.comp.end()) continue;
          for (const auto& t : it->second) vec[coord_of(y, t.elt)] += kept[k].vec[i] * t.coeff;
        }
        std::vector<int> path = kept[k].path;
        path.push_back(a);
        try_keep(std::move(path), y, std::move(vec));
      }
    }
    for (int v = 0; v < nv; ++v) {
      const auto& cell = c.by_pair[u][v];
      if (cell.empty()) continue;
      if (span[v].cols() != cell.size())
        throw std::logic_error("arrows do not generate the algebra between vertices " + std::to_string(u) + " and " +
                               std::to_string(v));
      std::vector<std::size_t> which;
      for (std::size_t k = 0; k < kept.size(); ++k)
        if (kept[k].end == v) which.push_back(k);
      for (std::size_t i = 0; i < cell.size(); ++i) {
        Mat rhs(cell.size(), 1);
        rhs(i, 0) = 1;
        auto x = solve(span[v], rhs);
        if (!x) throw std::logic_error("factorization failed");
        std::vector<PathTerm> terms;
        for (std::size_t j = 0; j < which.size(); ++j)
          if (sgn((*x)(j, 0)) != 0) terms.push_back({(*x)(j, 0), kept[which[j]].path});
        c.fact[cell[i]] = std::move(terms);
      }
    }
  }

  PresentedAlgebra alg;
  alg.core_ = std::shared_ptr<const PresentedAlgebra::Core>(std::move(core_));
  return alg;
}

}  // namespace hinak
