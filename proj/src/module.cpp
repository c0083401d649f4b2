#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "hinak/modrep.hpp"

namespace hinak {

int MatrixModule::total() const { return std::accumulate(dims.begin(), dims.end(), 0); }

MatrixModule zero_module(const PresentedAlgebra& alg) {
  MatrixModule m;
  m.dims.assign(alg.num_vertices(), 0);
  for (int a = 0; a < alg.num_arrows(); ++a) m.maps.emplace_back(0, 0);
  return m;
}

MatrixModule simple_module(const PresentedAlgebra& alg, int v) {
  MatrixModule m = zero_module(alg);
  m.dims.at(v) = 1;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    Arrow x = alg.arrow(a);
    m.maps[a] = Mat(m.dims[x.src], m.dims[x.tgt]);
  }
  return m;
}

namespace {

Mat path_action(const MatrixModule& m, const PresentedAlgebra& alg, const std::vector<int>& path, int src) {
  Mat acc = Mat::identity(m.dims[src]);
  for (int a : path) acc = acc * m.maps[a];
  (void)alg;
  return acc;
}

}  // namespace

std::optional<std::string> validate_module(const PresentedAlgebra& alg, const MatrixModule& m) {
  if (static_cast<int>(m.dims.size()) != alg.num_vertices()) return "dimension vector has the wrong length";
  if (static_cast<int>(m.maps.size()) != alg.num_arrows()) return "wrong number of arrow maps";
  for (int d : m.dims)
    if (d < 0) return "negative dimension";
  for (int a = 0; a < alg.num_arrows(); ++a) {
    Arrow x = alg.arrow(a);
    if (m.maps[a].rows() != static_cast<std::size_t>(m.dims[x.src]) ||
        m.maps[a].cols() != static_cast<std::size_t>(m.dims[x.tgt]))
      return "arrow " + std::to_string(a) + " has a map of the wrong shape";
  }
  for (const auto& r : alg.relations()) {
    if (r.empty()) continue;
    int src = alg.arrow(r.front().arrows.front()).src;
    int tgt = alg.arrow(r.front().arrows.back()).tgt;
    Mat sum(m.dims[src], m.dims[tgt]);
    for (const auto& t : r) sum = sum + t.coeff * path_action(m, alg, t.arrows, src);
    if (!sum.is_zero()) {
      std::ostringstream os;
      os << "relation at vertex " << format_tuple(alg.vertex(src)) << " is not satisfied";
      return os.str();
    }
  }
  return std::nullopt;
}

void require_module(const PresentedAlgebra& alg, const MatrixModule& m) {
  if (auto err = validate_module(alg, m)) throw std::invalid_argument("invalid module: " + *err);
}

Actions::Actions(const PresentedAlgebra& alg, const MatrixModule& m)
    : alg_(&alg), m_(&m), cache_(alg.num_basis()) {}

const Mat& Actions::operator()(int e) {
  auto& slot = cache_.at(e);
  if (slot) return *slot;
  BasisElt b = alg_->basis(e);
  Mat acc(m_->dims[b.src], m_->dims[b.tgt]);
  if (!acc.empty()) {
    for (const auto& t : alg_->factorization(e)) acc = acc + t.coeff * path_action(*m_, *alg_, t.arrows, b.src);
  }
  slot = std::move(acc);
  return *slot;
}

MatrixModule interval_module(const PresentedAlgebra& alg, const OrdSeq& lambda) {
  require_ordseq(lambda);
  const int D = static_cast<int>(lambda.size()) - 1;
  if (alg.num_vertices() == 0 || static_cast<int>(alg.vertex(0).size()) != D)
    throw std::invalid_argument("interval_module: tuple length must be the vertex length plus one");
  OrdSeq lo(lambda.begin(), lambda.end() - 1), hi(lambda.begin() + 1, lambda.end());
  auto in_box = [&](const OrdSeq& u) { return product_leq(lo, u) && product_leq(u, hi); };
  MatrixModule m = zero_module(alg);
  const auto modulus = alg.orbit_modulus();
  // Orbit members (shift k) of each vertex lying in the box, ascending.
  std::vector<std::vector<int>> hits(alg.num_vertices());
  for (int v = 0; v < alg.num_vertices(); ++v) {
    const OrdSeq& rep = alg.vertex(v);
    if (!modulus) {
      if (in_box(rep)) hits[v].push_back(0);
    } else {
      const int n = *modulus;
      // rep + k n lies in the box only if lo_1 <= rep_1 + k n <= hi_1.
      long kmin = -((rep.front() - lo.front()) / n) - 2, kmax = (hi.front() - rep.front()) / n + 2;
      for (long k = kmin; k <= kmax; ++k)
        if (in_box(tau_tuple(rep, static_cast<int>(-k * n)))) hits[v].push_back(static_cast<int>(k));
    }
    m.dims[v] = static_cast<int>(hits[v].size());
  }
  if (m.total() == 0) throw std::invalid_argument("interval_module: empty support for " + format_tuple(lambda));
  for (int a = 0; a < alg.num_arrows(); ++a) {
    Arrow x = alg.arrow(a);
    Mat f(m.dims[x.src], m.dims[x.tgt]);
    int s = alg.is_opposite() ? -x.shift : x.shift;
    for (std::size_t i = 0; i < hits[x.src].size(); ++i)
      for (std::size_t j = 0; j < hits[x.tgt].size(); ++j)
        if (hits[x.tgt][j] == hits[x.src][i] + s) f(i, j) = 1;
    m.maps[a] = std::move(f);
  }
  return m;
}

namespace {

// Position of each basis element inside its hom_basis cell.
std::vector<int> basis_positions(const PresentedAlgebra& alg) {
  std::vector<int> pos(alg.num_basis(), -1);
  for (int v = 0; v < alg.num_vertices(); ++v)
    for (int w = 0; w < alg.num_vertices(); ++w) {
      const auto& cell = alg.hom_basis(v, w);
      for (std::size_t i = 0; i < cell.size(); ++i) pos[cell[i]] = static_cast<int>(i);
    }
  return pos;
}

}  // namespace

MatrixModule projective_sum(const PresentedAlgebra& alg, const std::vector<int>& vertices) {
  MatrixModule m = zero_module(alg);
  const int nv = alg.num_vertices();
  // offsets[w][j]: start of summand j inside the basis at w.
  std::vector<std::vector<int>> offsets(nv, std::vector<int>(vertices.size()));
  for (int w = 0; w < nv; ++w) {
    int off = 0;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      offsets[w][j] = off;
      off += alg.hom_dim(w, vertices[j]);
    }
    m.dims[w] = off;
  }
  auto pos = basis_positions(alg);
  for (int a = 0; a < alg.num_arrows(); ++a) {
    Arrow x = alg.arrow(a);
    Mat f(m.dims[x.src], m.dims[x.tgt]);
    int ea = alg.arrow_element(a);
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      const auto& cell = alg.hom_basis(x.tgt, vertices[j]);
      for (std::size_t c = 0; c < cell.size(); ++c)
        for (const auto& t : alg.compose(ea, cell[c]))
          f(offsets[x.src][j] + pos[t.elt], offsets[x.tgt][j] + c) += t.coeff;
    }
    m.maps[a] = std::move(f);
  }
  return m;
}

MatrixModule projective_module(const PresentedAlgebra& alg, int v) {
  if (v < 0 || v >= alg.num_vertices()) throw std::out_of_range("projective_module: not a vertex");
  return projective_sum(alg, {v});
}

MatrixModule injective_sum(const PresentedAlgebra& alg, const std::vector<int>& vertices) {
  return dualize(projective_sum(alg.opposite(), vertices));
}

MatrixModule injective_module(const PresentedAlgebra& alg, int v) {
  if (v < 0 || v >= alg.num_vertices()) throw std::out_of_range("injective_module: not a vertex");
  return injective_sum(alg, {v});
}

MatrixModule direct_sum(const MatrixModule& x, const MatrixModule& y) {
  if (x.dims.size() != y.dims.size() || x.maps.size() != y.maps.size())
    throw std::invalid_argument("direct_sum: modules over different algebras");
  MatrixModule m;
  for (std::size_t v = 0; v < x.dims.size(); ++v) m.dims.push_back(x.dims[v] + y.dims[v]);
  for (std::size_t a = 0; a < x.maps.size(); ++a) {
    Mat f(x.maps[a].rows() + y.maps[a].rows(), x.maps[a].cols() + y.maps[a].cols());
    f.set_block(0, 0, x.maps[a]);
    f.set_block(x.maps[a].rows(), x.maps[a].cols(), y.maps[a]);
    m.maps.push_back(std::move(f));
  }
  return m;
}

MatrixModule dualize(const MatrixModule& m) {
  MatrixModule d;
  d.dims = m.dims;
  for (const auto& f : m.maps) d.maps.push_back(f.transpose());
  return d;
}

ModMap dualize(const ModMap& f) {
  ModMap d;
  for (const auto& c : f.comps) d.comps.push_back(c.transpose());
  return d;
}

std::vector<ModMap> hom_space(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n) {
  const int nv = alg.num_vertices();
  std::vector<std::size_t> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + static_cast<std::size_t>(m.dims[v]) * n.dims[v];
  const std::size_t unknowns = off[nv];
  std::vector<ModMap> out;
  if (unknowns == 0) return out;
  // X_v(r, c) is unknown off[v] + c * n.dims[v] + r.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    Arrow x = alg.arrow(a);
    const int dnx = n.dims[x.src], dmx = m.dims[x.src], dny = n.dims[x.tgt], dmy = m.dims[x.tgt];
    // X_x M(a) - N(a) X_y = 0, shape dnx x dmy
    for (int r = 0; r < dnx; ++r)
      for (int c = 0; c < dmy; ++c) {
        std::vector<std::pair<std::size_t, Rational>> row;
        for (int k = 0; k < dmx; ++k)
          if (sgn(m.maps[a](k, c)) != 0) row.push_back({off[x.src] + static_cast<std::size_t>(k) * dnx + r, m.maps[a](k, c)});
        for (int k = 0; k < dny; ++k)
          if (sgn(n.maps[a](r, k)) != 0) row.push_back({off[x.tgt] + static_cast<std::size_t>(c) * dny + k, -n.maps[a](r, k)});
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  Mat eq(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto& [j, val] : rows[i]) eq(i, j) += val;
  Mat k = rows.empty() ? Mat::identity(unknowns) : kernel_basis(eq);
  for (std::size_t b = 0; b < k.cols(); ++b) {
    ModMap f;
    for (int v = 0; v < nv; ++v) {
      Mat c(n.dims[v], m.dims[v]);
      for (int col = 0; col < m.dims[v]; ++col)
        for (int r = 0; r < n.dims[v]; ++r) c(r, col) = k(off[v] + static_cast<std::size_t>(col) * n.dims[v] + r, b);
      f.comps.push_back(std::move(c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n) {
  return static_cast<int>(hom_space(alg, m, n).size());
}

bool is_hom(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n, const ModMap& f) {
  if (static_cast<int>(f.comps.size()) != alg.num_vertices()) return false;
  for (int v = 0; v < alg.num_vertices(); ++v)
    if (f.comps[v].rows() != static_cast<std::size_t>(n.dims[v]) || f.comps[v].cols() != static_cast<std::size_t>(m.dims[v]))
      return false;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    Arrow x = alg.arrow(a);
    if (!(f.comps[x.src] * m.maps[a] == n.maps[a] * f.comps[x.tgt])) return false;
  }
  return true;
}

ModMap compose(const ModMap& f, const ModMap& g) {
  if (f.comps.size() != g.comps.size()) throw std::invalid_argument("compose: maps over different algebras");
  ModMap h;
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
  return h;
}

ModMap identity_map(const MatrixModule& m) {
  ModMap f;
  for (int d : m.dims) f.comps.push_back(Mat::identity(d));
  return f;
}

std::vector<Rational> flatten(const ModMap& f) {
  std::vector<Rational> out;
  for (const auto& c : f.comps) {
    auto v = c.flatten();
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

SubModule submodule(const PresentedAlgebra& alg, const MatrixModule& m, const std::vector<Mat>& spaces) {
  SubModule s;
  s.module = zero_module(alg);
  for (int v = 0; v < alg.num_vertices(); ++v) {
    s.module.dims[v] = static_cast<int>(spaces[v].cols());
    s.inclusion.comps.push_back(spaces[v].cols() ? spaces[v] : Mat(m.dims[v], 0));
  }
  for (int a = 0; a < alg.num_arrows(); ++a) {
    Arrow x = alg.arrow(a);
    const Mat& Sx = s.inclusion.comps[x.src];
    const Mat& Sy = s.inclusion.comps[x.tgt];
    if (Sx.cols() == 0 || Sy.cols() == 0) {
      s.module.maps[a] = Mat(Sx.cols(), Sy.cols());
      if (Sx.cols() == 0 && Sy.cols() > 0 && !(m.maps[a] * Sy).is_zero())
        throw std::logic_error("submodule: subspaces are not closed under the action");
      continue;
    }
    auto sol = solve(Sx, m.maps[a] * Sy);
    if (!sol) throw std::logic_error("submodule: subspaces are not closed under the action");
    s.module.maps[a] = std::move(*sol);
  }
  return s;
}

QuotientModule quotient(const PresentedAlgebra& alg, const MatrixModule& m, const std::vector<Mat>& spaces) {
  QuotientModule q;
  q.module = zero_module(alg);
  std::vector<Mat> sections(alg.num_vertices());
  for (int v = 0; v < alg.num_vertices(); ++v) {
    Mat S = spaces[v].cols() ? spaces[v] : Mat(m.dims[v], 0);
    Mat Q = S.cols() ? cokernel_projection(S) : Mat::identity(m.dims[v]);
    q.module.dims[v] = static_cast<int>(Q.rows());
    sections[v] = Q.rows() ? *solve(Q, Mat::identity(Q.rows())) : Mat(m.dims[v], 0);
    q.projection.comps.push_back(std::move(Q));
  }
  for (int a = 0; a < alg.num_arrows(); ++a) {
    Arrow x = alg.arrow(a);
    const Mat& Qx = q.projection.comps[x.src];
    if (Qx.rows() == 0 || sections[x.tgt].cols() == 0) {
      q.module.maps[a] = Mat(Qx.rows(), sections[x.tgt].cols());
      continue;
    }
    q.module.maps[a] = Qx * m.maps[a] * sections[x.tgt];
  }
  return q;
}

SubModule kernel(const PresentedAlgebra& alg, const MatrixModule& m, const ModMap& f) {
  std::vector<Mat> spaces;
  for (int v = 0; v < alg.num_vertices(); ++v) {
    const Mat& c = f.comps[v];
    spaces.push_back(c.rows() == 0 ? Mat::identity(m.dims[v]) : kernel_basis(c));
  }
  return submodule(alg, m, spaces);
}

SubModule image(const PresentedAlgebra& alg, const MatrixModule& n, const ModMap& f) {
  std::vector<Mat> spaces;
  for (int v = 0; v < alg.num_vertices(); ++v)
    spaces.push_back(f.comps[v].cols() ? column_basis(f.comps[v]) : Mat(n.dims[v], 0));
  return submodule(alg, n, spaces);
}

QuotientModule cokernel(const PresentedAlgebra& alg, const MatrixModule& n, const ModMap& f) {
  std::vector<Mat> spaces;
  for (int v = 0; v < alg.num_vertices(); ++v)
    spaces.push_back(f.comps[v].cols() ? column_basis(f.comps[v]) : Mat(n.dims[v], 0));
  return quotient(alg, n, spaces);
}

namespace {

std::vector<Mat> radical_spaces(const PresentedAlgebra& alg, const MatrixModule& m) {
  std::vector<Mat> spaces;
  for (int v = 0; v < alg.num_vertices(); ++v) {
    Mat acc(m.dims[v], 0);
    for (int a : alg.arrows_from(v))
      if (m.maps[a].cols()) acc = hstack(acc, m.maps[a]);
    spaces.push_back(acc.cols() ? column_basis(acc) : acc);
  }
  return spaces;
}

}  // namespace

SubModule radical(const PresentedAlgebra& alg, const MatrixModule& m) {
  return submodule(alg, m, radical_spaces(alg, m));
}

QuotientModule top(const PresentedAlgebra& alg, const MatrixModule& m) {
  return quotient(alg, m, radical_spaces(alg, m));
}

SubModule socle(const PresentedAlgebra& alg, const MatrixModule& m) {
  std::vector<Mat> spaces;
  for (int v = 0; v < alg.num_vertices(); ++v) {
    Mat acc(0, m.dims[v]);
    for (int a : alg.arrows_to(v))
      if (m.maps[a].rows()) acc = vstack(acc, m.maps[a]);
    spaces.push_back(acc.rows() ? kernel_basis(acc) : Mat::identity(m.dims[v]));
  }
  return submodule(alg, m, spaces);
}

int loewy_length(const PresentedAlgebra& alg, const MatrixModule& m) {
  int len = 0;
  MatrixModule cur = m;
  while (!cur.is_zero()) {
    cur = radical(alg, cur).module;
    ++len;
  }
  return len;
}

ModMap map_from_projective(const PresentedAlgebra& alg, const std::vector<int>& vertices,
                           const std::vector<std::vector<Rational>>& gens, const MatrixModule& m) {
  Actions act(alg, m);
  ModMap f;
  for (int w = 0; w < alg.num_vertices(); ++w) {
    int total = 0;
    for (int v : vertices) total += alg.hom_dim(w, v);
    Mat c(m.dims[w], total);
    int col = 0;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      Mat g = Mat::column(gens[j]);
      for (int h : alg.hom_basis(w, vertices[j])) {
        if (m.dims[w] && g.rows()) c.set_block(0, col, act(h) * g);
        ++col;
      }
    }
    f.comps.push_back(std::move(c));
  }
  return f;
}

ProjectiveCover projective_cover(const PresentedAlgebra& alg, const MatrixModule& m) {
  ProjectiveCover pc;
  auto rad = radical_spaces(alg, m);
  for (int v = 0; v < alg.num_vertices(); ++v) {
    if (m.dims[v] == 0) continue;
    Mat extra = complement_basis(rad[v], m.dims[v]);
    for (std::size_t j = 0; j < extra.cols(); ++j) {
      pc.vertices.push_back(v);
      pc.gens.push_back(extra.col(j).flatten());
    }
  }
  pc.P = projective_sum(alg, pc.vertices);
  pc.epi = map_from_projective(alg, pc.vertices, pc.gens, m);
  return pc;
}

InjectiveEnvelope injective_envelope(const PresentedAlgebra& alg, const MatrixModule& m) {
  auto pc = projective_cover(alg.opposite(), dualize(m));
  return {pc.vertices, dualize(pc.P), dualize(pc.epi)};
}

bool is_projective(const PresentedAlgebra& alg, const MatrixModule& m) {
  auto pc = projective_cover(alg, m);
  return pc.P.total() == m.total();
}

bool is_injective(const PresentedAlgebra& alg, const MatrixModule& m) { return is_projective(alg.opposite(), dualize(m)); }

MatrixModule extend_by_zero(const PresentedAlgebra& inner, const PresentedAlgebra& outer, const MatrixModule& m) {
  MatrixModule out = zero_module(outer);
  std::vector<int> to_inner(outer.num_vertices(), -1);
  for (int v = 0; v < outer.num_vertices(); ++v) {
    auto iv = inner.vertex_index(outer.vertex(v));
    if (iv) {
      to_inner[v] = *iv;
      out.dims[v] = m.dims[*iv];
    }
  }
  for (int v = 0; v < inner.num_vertices(); ++v)
    if (m.dims[v] && !outer.vertex_index(inner.vertex(v)))
      throw std::invalid_argument("extend_by_zero: support not inside the outer algebra");
  for (int a = 0; a < outer.num_arrows(); ++a) {
    Arrow x = outer.arrow(a);
    out.maps[a] = Mat(out.dims[x.src], out.dims[x.tgt]);
    if (out.maps[a].empty()) continue;
    int is = to_inner[x.src], it = to_inner[x.tgt];
    std::optional<int> ia;
    for (int b : inner.arrows_from(is))
      if (inner.arrow(b).tgt == it && inner.arrow(b).coord == x.coord) ia = b;
    if (!ia) throw std::invalid_argument("extend_by_zero: arrow missing from the inner algebra");
    out.maps[a] = m.maps[*ia];
  }
  return out;
}

std::string module_to_json(const PresentedAlgebra& alg, const MatrixModule& m) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json dims = nlohmann::ordered_json::object();
  for (int v = 0; v < alg.num_vertices(); ++v)
    if (m.dims[v]) dims[format_tuple(alg.vertex(v))] = m.dims[v];
  nlohmann::ordered_json arrows = nlohmann::ordered_json::object();
  for (int a = 0; a < alg.num_arrows(); ++a) {
    if (m.maps[a].empty()) continue;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.maps[a].rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < m.maps[a].cols(); ++c) row.push_back(to_string(m.maps[a](r, c)));
      rows.push_back(row);
    }
    arrows[std::to_string(a)] = rows;
  }
  j["dims"] = dims;
  j["arrows"] = arrows;
  return j.dump();
}

MatrixModule module_from_json(const PresentedAlgebra& alg, const std::string& text) {
  auto j = nlohmann::json::parse(text);
  MatrixModule m = zero_module(alg);
  for (auto& [label, d] : j.at("dims").items()) {
    auto v = alg.vertex_index(parse_tuple(label));
    if (!v) throw std::invalid_argument("module_from_json: unknown vertex " + label);
    m.dims[*v] = d.get<int>();
  }
  for (int a = 0; a < alg.num_arrows(); ++a) {
    Arrow x = alg.arrow(a);
    m.maps[a] = Mat(m.dims[x.src], m.dims[x.tgt]);
  }
  for (auto& [key, rows] : j.at("arrows").items()) {
    int a = std::stoi(key);
    if (a < 0 || a >= alg.num_arrows()) throw std::invalid_argument("module_from_json: bad arrow id " + key);
    Mat& f = m.maps[a];
    if (rows.size() != f.rows()) throw std::invalid_argument("module_from_json: wrong shape for arrow " + key);
    for (std::size_t r = 0; r < f.rows(); ++r) {
      if (rows[r].size() != f.cols()) throw std::invalid_argument("module_from_json: wrong shape for arrow " + key);
      for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) = rational_from_string(rows[r][c].get<std::string>());
    }
  }
  require_module(alg, m);
  return m;
}

}  // namespace hinak
