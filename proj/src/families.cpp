#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hinak/presentation.hpp"

namespace hinak {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

AlgebraSpec AlgebraSpec::linear_an(int n, int d) {
  AlgebraSpec s;
  s.family = Family::LinearAn;
  s.n = n;
  s.d = d;
  return s;
}

AlgebraSpec AlgebraSpec::kupisch_a(KupischSeries series, int d) {
  AlgebraSpec s;
  s.family = Family::KupischA;
  s.n = series.size();
  s.d = d;
  s.series = std::move(series);
  return s;
}

AlgebraSpec AlgebraSpec::window(int a, int b, int d) {
  AlgebraSpec s;
  s.family = Family::Window;
  s.a = a;
  s.b = b;
  s.d = d;
  return s;
}

AlgebraSpec AlgebraSpec::zl_window(int ell, int a, int b, int d) {
  AlgebraSpec s;
  s.family = Family::ZlWindow;
  s.ell = ell;
  s.a = a;
  s.b = b;
  s.d = d;
  return s;
}

AlgebraSpec AlgebraSpec::selfinj_atilde(int n, int ell, int d) {
  AlgebraSpec s;
  s.family = Family::SelfinjAtilde;
  s.n = n;
  s.ell = ell;
  s.d = d;
  return s;
}

AlgebraSpec AlgebraSpec::atilde_kupisch(KupischSeries series, int d) {
  AlgebraSpec s;
  s.family = Family::AtildeKupisch;
  s.n = series.size();
  s.d = d;
  s.series = std::move(series);
  return s;
}

AlgebraSpec AlgebraSpec::tube_trunc(int n, int d, int L) {
  AlgebraSpec s;
  s.family = Family::TubeTrunc;
  s.n = n;
  s.d = d;
  s.L = L;
  return s;
}

void AlgebraSpec::validate() const {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  switch (family) {
    case Family::LinearAn:
      if (n < 1) throw std::invalid_argument("n must be at least 1");
      break;
    case Family::KupischA:
      if (series.variant != KupischVariant::LinearA) throw std::invalid_argument("KupischA needs a linear series");
      require_valid(series);
      if (n != series.size()) throw std::invalid_argument("n must equal the series length");
      break;
    case Family::Window:
      if (a > b) throw std::invalid_argument("window needs a <= b");
      break;
    case Family::ZlWindow:
      if (a > b) throw std::invalid_argument("window needs a <= b");
      if (ell < 2) throw std::invalid_argument("l must be at least 2");
      break;
    case Family::SelfinjAtilde:
      if (n < 1) throw std::invalid_argument("n must be at least 1");
      if (ell < 2) throw std::invalid_argument("l must be at least 2");
      break;
    case Family::AtildeKupisch:
      if (series.variant != KupischVariant::CyclicA) throw std::invalid_argument("AtildeKupisch needs a cyclic series");
      require_valid(series);
      if (n != series.size()) throw std::invalid_argument("n must equal the series length");
      break;
    case Family::TubeTrunc:
      if (n < 1) throw std::invalid_argument("n must be at least 1");
      if (L < 1) throw std::invalid_argument("L must be at least 1");
      break;
    case Family::Mesh:
      if (a > b) throw std::invalid_argument("window needs a <= b");
      if (ell != 0 && ell < 2) throw std::invalid_argument("l must be at least 2 or unbounded");
      break;
    case Family::Endomorphism:
      break;
  }
}

bool AlgebraSpec::is_orbit() const {
  return family == Family::SelfinjAtilde || family == Family::AtildeKupisch || family == Family::TubeTrunc;
}

std::optional<int> AlgebraSpec::orbit_modulus() const {
  if (is_orbit()) return n;
  return std::nullopt;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::LinearAn: return "LinearAn";
    case Family::KupischA: return "KupischA";
    case Family::Window: return "Window";
    case Family::ZlWindow: return "ZlWindow";
    case Family::SelfinjAtilde: return "SelfinjAtilde";
    case Family::AtildeKupisch: return "AtildeKupisch";
    case Family::TubeTrunc: return "TubeTrunc";
    case Family::Mesh: return "Mesh";
    case Family::Endomorphism: return "Endomorphism";
  }
  return "";
}

std::string AlgebraSpec::describe() const {
  std::ostringstream os;
  os << to_string(family) << "(";
  switch (family) {
    case Family::LinearAn: os << n << "," << d; break;
    case Family::KupischA:
    case Family::AtildeKupisch: os << "(" << format_tuple(series.lengths) << ")," << d; break;
    case Family::Window: os << a << "," << b << "," << d; break;
    case Family::ZlWindow: os << ell << "," << a << "," << b << "," << d; break;
    case Family::SelfinjAtilde: os << n << "," << ell << "," << d; break;
    case Family::TubeTrunc: os << n << "," << d << "," << L; break;
    case Family::Mesh: os << d << "," << (ell ? std::to_string(ell) : std::string("inf")) << "," << a << "," << b; break;
    case Family::Endomorphism: os << d; break;
  }
  os << ")";
  return os.str();
}

bool AlgebraSpec::has_series() const { return family != Family::Mesh && family != Family::Endomorphism; }

bool AlgebraSpec::entries_in_range(const std::vector<int>& t) const {
  if (t.empty()) return false;
  switch (family) {
    case Family::LinearAn:
    case Family::KupischA: return t.front() >= 0 && t.back() <= n - 1;
    case Family::Window:
    case Family::ZlWindow: return t.front() >= a && t.back() <= b;
    default: return true;
  }
}

int AlgebraSpec::bound(long t) const {
  switch (family) {
    case Family::LinearAn: return static_cast<int>(t + 1);
    case Family::KupischA: return series.at(t);
    case Family::Window: return static_cast<int>(t - a + 1);
    case Family::ZlWindow: return static_cast<int>(std::min<long>(ell, t - a + 1));
    case Family::SelfinjAtilde: return ell;
    case Family::AtildeKupisch: return series.at(t);
    case Family::TubeTrunc: return L;
    default: throw std::logic_error("bound: family has no Kupisch series");
  }
}

bool AlgebraSpec::admits(const std::vector<int>& t) const {
  if (!is_ordseq(t) || !entries_in_range(t)) return false;
  return loewy_len(t) <= bound(t.back());
}

bool AlgebraSpec::ambient_hom(const OrdSeq& v, const OrdSeq& w) const {
  if (v.size() != w.size()) return false;
  if (!admits(v) || !admits(w) || !interlaces(v, w)) return false;
  for (long t = v.back(); t <= w.back(); ++t)
    if (t - v.front() + 1 > bound(t)) return false;
  if (family == Family::TubeTrunc) {
    long path = 0;
    for (std::size_t i = 0; i < v.size(); ++i) path += w[i] - v[i];
    if (path >= L) return false;
  }
  return true;
}

std::string spec_to_json(const AlgebraSpec& s) {
  nlohmann::json j{{"family", to_string(s.family)}, {"n", s.n}, {"d", s.d}, {"a", s.a},
                   {"b", s.b}, {"ell", s.ell}, {"L", s.L}};
  if (s.family == Family::KupischA || s.family == Family::AtildeKupisch)
    j["series"] = nlohmann::json::parse(kupisch_to_json(s.series));
  return j.dump();
}

AlgebraSpec spec_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  AlgebraSpec s;
  std::string fam = j.at("family").get<std::string>();
  bool found = false;
  for (Family f : {Family::LinearAn, Family::KupischA, Family::Window, Family::ZlWindow, Family::SelfinjAtilde,
                   Family::AtildeKupisch, Family::TubeTrunc, Family::Mesh, Family::Endomorphism})
    if (to_string(f) == fam) {
      s.family = f;
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown family '" + fam + "'");
  s.n = j.value("n", 0);
  s.d = j.value("d", 1);
  s.a = j.value("a", 0);
  s.b = j.value("b", 0);
  s.ell = j.value("ell", 0);
  s.L = j.value("L", 0);
  if (j.contains("series")) s.series = kupisch_from_json(j["series"].dump());
  s.validate();
  return s;
}

namespace {

std::vector<OrdSeq> family_vertices(const AlgebraSpec& s) {
  const int D = s.d;
  std::vector<OrdSeq> out;
  switch (s.family) {
    case Family::LinearAn: return enumerate_os(s.n, D);
    case Family::KupischA: return restrict_os(s.series, D);
    case Family::Window: return enumerate_os_range(s.a, s.b, D);
    case Family::ZlWindow: return restrict_os(KupischSeries::constant(s.ell), D, s.a, s.b);
    case Family::AtildeKupisch: return restrict_os(s.series, D);
    case Family::SelfinjAtilde:
    case Family::TubeTrunc: {
      int span = s.family == Family::TubeTrunc ? s.L : s.ell;
      for (auto& lam : enumerate_os_range(0, s.n - 1 + span - 1, D))
        if (lam.front() < s.n && loewy_len(lam) <= span) out.push_back(lam);
      return out;
    }
    default: throw std::invalid_argument("build: family has no standard presentation");
  }
}

// Largest Loewy-length bound over the whole family (finite for orbit families).
int max_bound(const AlgebraSpec& s) {
  switch (s.family) {
    case Family::SelfinjAtilde: return s.ell;
    case Family::TubeTrunc: return s.L;
    case Family::AtildeKupisch: return s.series.max_length();
    default: return INT_MAX;
  }
}

}  // namespace

PresentedAlgebra build(const AlgebraSpec& spec) {
  spec.validate();
  const int D = spec.d;
  auto verts = family_vertices(spec);
  if (verts.empty()) throw std::invalid_argument("build: empty vertex set for " + spec.describe());
  const auto modulus = spec.orbit_modulus();
  AlgebraBuilder bld(spec, modulus);
  for (auto& v : verts) bld.add_vertex(v);
  const int nv = static_cast<int>(verts.size());

  auto index_of = [&](const OrdSeq& lab) -> int {
    auto it = std::lower_bound(verts.begin(), verts.end(), lab);
    if (it == verts.end() || *it != lab) return -1;
    return static_cast<int>(it - verts.begin());
  };
  // Ambient tuple -> (vertex, shift) or (-1, 0).
  auto locate = [&](const OrdSeq& amb) -> std::pair<int, int> {
    if (modulus) {
      auto [rep, s] = canonical_orbit_rep(amb, *modulus);
      return {index_of(rep), s};
    }
    return {index_of(amb), 0};
  };

  // Basis elements per (src, tgt): pairs (shift, basis id). Identities were
  // created by add_vertex, so vertex v owns id v.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> ids(nv, std::vector<std::vector<std::pair<int, int>>>(nv));
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w) {
      long smin = 0, smax = 0;
      if (modulus) {
        const long n = *modulus, B = max_bound(spec);
        smin = ceil_div(verts[v].front() - verts[w].front(), n);
        smax = floor_div(verts[v].front() + B - 1 - verts[w].front(), n);
      }
      for (long s = smin; s <= smax; ++s) {
        if (v == w && s == 0) {
          ids[v][w].push_back({0, v});
          continue;
        }
        OrdSeq target = modulus ? tau_tuple(verts[w], static_cast<int>(-s * *modulus)) : verts[w];
        if (spec.ambient_hom(verts[v], target))
          ids[v][w].push_back({static_cast<int>(s), bld.add_basis(v, w, static_cast<int>(s))});
      }
    }
  auto find_elt = [&](int v, int w, int s) -> int {
    for (auto& [sh, id] : ids[v][w])
      if (sh == s) return id;
    return -1;
  };
  bld.compose_by_shift();

  // Arrows a_i(lambda).
  std::vector<std::vector<int>> arrow_at(nv, std::vector<int>(D, -1));
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < D; ++i) {
      OrdSeq t = verts[v];
      t[i] += 1;
      if (!is_ordseq(t)) continue;
      auto [w, s] = locate(t);
      if (w < 0) continue;
      int e = find_elt(v, w, s);
      if (e < 0) continue;
      arrow_at[v][i] = bld.add_arrow(v, w, i, s, e);
    }
  // Arrow a_i at an ambient tuple, -1 if absent.
  auto ambient_arrow = [&](const OrdSeq& amb, int i) -> int {
    auto [v, s] = locate(amb);
    (void)s;
    if (v < 0) return -1;
    return arrow_at[v][i];
  };

  if (D >= 2) {
    // For each square lambda -> lambda+e_i+e_j: commutativity when both routes
    // exist and the corner is reachable, each route separately zero when the
    // corner is not.
    for (int v = 0; v < nv; ++v)
      for (int i = 0; i < D; ++i)
        for (int j = i + 1; j < D; ++j) {
          const OrdSeq& lam = verts[v];
          OrdSeq li = lam, lj = lam, corner = lam;
          li[i] += 1;
          lj[j] += 1;
          corner[i] += 1;
          corner[j] += 1;
          int a1 = arrow_at[v][i], a2 = is_ordseq(li) && a1 >= 0 ? ambient_arrow(li, j) : -1;
          int b1 = arrow_at[v][j], b2 = is_ordseq(lj) && b1 >= 0 ? ambient_arrow(lj, i) : -1;
          bool p = a1 >= 0 && a2 >= 0, q = b1 >= 0 && b2 >= 0;
          if (!p && !q) continue;
          bool reachable = false;
          if (is_ordseq(corner)) {
            auto [w, s] = locate(corner);
            reachable = w >= 0 && find_elt(v, w, s) >= 0;
          }
          if (reachable) {
            if (p && q) bld.add_relation({PathTerm{Rational(1), {a1, a2}}, PathTerm{Rational(-1), {b1, b2}}});
          } else {
            if (p) bld.add_relation({PathTerm{Rational(1), {a1, a2}}});
            if (q) bld.add_relation({PathTerm{Rational(1), {b1, b2}}});
          }
        }
  } else {
    // Nakayama-type quotients: minimal vanishing paths.
    const int maxlen = std::min(max_bound(spec), 64);
    for (int v = 0; v < nv; ++v) {
      std::vector<int> path;
      OrdSeq cur = verts[v];
      for (int k = 1; k <= maxlen; ++k) {
        int a = ambient_arrow(cur, 0);
        if (a < 0) break;
        path.push_back(a);
        OrdSeq next{cur[0] + 1};
        if (!spec.ambient_hom(verts[v], OrdSeq{verts[v][0] + k})) {
          if (k >= 2) bld.add_relation({PathTerm{Rational(1), path}});
          break;
        }
        cur = next;
      }
    }
  }
  return bld.finish();
}

PresentedAlgebra mesh_presentation(int d, int ell, int a, int b) {
  AlgebraSpec spec;
  spec.family = Family::Mesh;
  spec.d = d;
  spec.ell = ell;
  spec.a = a;
  spec.b = b;
  spec.validate();
  // Vertices (slopes, s) <-> lambda in os^{d+1} inside [a,b], Loewy length <= ell.
  const int span = ell ? ell - 1 : b - a;
  std::vector<OrdSeq> labels;
  for (auto& mu : enumerate_os_range(0, std::max(0, span), d))
    for (int s = a; s + mu.back() <= b; ++s) {
      OrdSeq lab = mu;
      lab.push_back(s);
      labels.push_back(lab);
    }
  std::sort(labels.begin(), labels.end());
  auto index_of = [&](const OrdSeq& mu, int s) -> int {
    OrdSeq lab = mu;
    lab.push_back(s);
    auto it = std::lower_bound(labels.begin(), labels.end(), lab);
    if (it == labels.end() || *it != lab) return -1;
    return static_cast<int>(it - labels.begin());
  };
  const int nv = static_cast<int>(labels.size());
  std::vector<Arrow> arrows;
  // arrow_at[v][i]: b_i at vertex v, -1 when absent.
  std::vector<std::vector<int>> arrow_at(nv, std::vector<int>(d + 1, -1));
  for (int v = 0; v < nv; ++v) {
    OrdSeq mu(labels[v].begin(), labels[v].end() - 1);
    int s = labels[v].back();
    if (mu.front() > 0) {
      int w = index_of(tau_tuple(mu, 1), s + 1);
      if (w >= 0) {
        arrow_at[v][0] = static_cast<int>(arrows.size());
        arrows.push_back({v, w, 0, 0});
      }
    }
    for (int i = 0; i < d; ++i) {
      OrdSeq nu = mu;
      nu[i] += 1;
      if (!is_ordseq(nu)) continue;
      int w = index_of(nu, s);
      if (w < 0) continue;
      arrow_at[v][i + 1] = static_cast<int>(arrows.size());
      arrows.push_back({v, w, i + 1, 0});
    }
  }
  auto arrow_from = [&](const OrdSeq& mu, int s, int i) -> int {
    if (!is_ordseq(mu) || mu.front() < 0) return -1;
    int v = index_of(mu, s);
    return v < 0 ? -1 : arrow_at[v][i];
  };
  // Missing arrows are zero, so a relation may degenerate to a zero relation.
  std::vector<Relation> relations;
  auto add = [&](int p1, int p2, int q1, int q2) {
    Relation r;
    if (p1 >= 0 && p2 >= 0) r.push_back({Rational(1), {p1, p2}});
    if (q1 >= 0 && q2 >= 0) r.push_back({Rational(-1), {q1, q2}});
    if (!r.empty()) relations.push_back(std::move(r));
  };
  for (int v = 0; v < nv; ++v) {
    OrdSeq mu(labels[v].begin(), labels[v].end() - 1);
    int s = labels[v].back();
    auto plus = [&](int i) {
      OrdSeq nu = mu;
      nu[i - 1] += 1;
      return nu;
    };
    // (I) two arrows inside the slice
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        add(arrow_at[v][i], arrow_from(plus(i), s, j), arrow_at[v][j], arrow_from(plus(j), s, i));
    // (II) connecting arrow then b_j, against b_j then connecting arrow
    for (int j = 1; j <= d; ++j)
      add(arrow_at[v][0], arrow_from(tau_tuple(mu, 1), s + 1, j), arrow_at[v][j], arrow_from(plus(j), s, 0));
    // (III) the same square read from b_i; the second path ends at
    // b_i(tau_d(lambda), s+1)
    for (int i = 1; i <= d; ++i)
      add(arrow_at[v][i], arrow_from(plus(i), s, 0), arrow_at[v][0], arrow_from(tau_tuple(mu, 1), s + 1, i));
  }
  const int max_len = (d + 1) * std::max(span, 0) + 1;
  auto q = path_quotient(nv, arrows, relations, max_len);
  return algebra_from_quotient(spec, labels, arrows, relations, q);
}

}  // namespace hinak
