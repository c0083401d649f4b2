#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hinak/presentation.hpp"

namespace hinak {

namespace {

std::string arrow_name(const PresentedAlgebra& alg, int a) {
  const Arrow x = alg.arrow(a);
  std::string base = alg.spec().family == Family::Mesh ? "b" : "a";
  int idx = alg.spec().family == Family::Mesh ? x.coord : x.coord + 1;
  return base + std::to_string(idx) + "_" + std::to_string(a);
}

std::string qpa_vertex(const PresentedAlgebra& alg, int v) {
  std::string s = "v";
  for (int x : alg.vertex(v)) s += "_" + (x < 0 ? "m" + std::to_string(-x) : std::to_string(x));
  return s;
}

}  // namespace

std::string export_dot(const PresentedAlgebra& alg) {
  std::ostringstream os;
  os << "digraph \"" << alg.spec().describe() << (alg.is_opposite() ? "^op" : "") << "\" {\n";
  for (int v = 0; v < alg.num_vertices(); ++v)
    os << "  n" << v << " [label=\"" << format_tuple(alg.vertex(v)) << "\"];\n";
  for (int a = 0; a < alg.num_arrows(); ++a) {
    Arrow x = alg.arrow(a);
    os << "  n" << x.src << " -> n" << x.tgt << " [label=\"" << arrow_name(alg, a) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_qpa(const PresentedAlgebra& alg) {
  std::ostringstream os;
  os << "# " << alg.spec().describe() << (alg.is_opposite() ? " (opposite)" : "") << "\n";
  os << "Q := Quiver([";
  for (int v = 0; v < alg.num_vertices(); ++v) os << (v ? ", " : "") << "\"" << qpa_vertex(alg, v) << "\"";
  os << "], [";
  for (int a = 0; a < alg.num_arrows(); ++a) {
    Arrow x = alg.arrow(a);
    os << (a ? ", " : "") << "[\"" << qpa_vertex(alg, x.src) << "\", \"" << qpa_vertex(alg, x.tgt) << "\", \""
       << arrow_name(alg, a) << "\"]";
  }
  os << "]);\n";
  os << "KQ := PathAlgebra(Rationals, Q);\n";
  os << "AssignGeneratorVariables(KQ);\n";
  os << "rels := [";
  bool first = true;
  for (const auto& r : alg.relations()) {
    os << (first ? "\n  " : ",\n  ");
    first = false;
    bool lead = true;
    for (const auto& t : r) {
      Rational c = t.coeff;
      if (!lead) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      Rational ac = abs(c);
      if (ac != 1) os << "(" << to_string(ac) << ")*";
      for (std::size_t i = 0; i < t.arrows.size(); ++i) os << (i ? "*" : "") << arrow_name(alg, t.arrows[i]);
      lead = false;
    }
  }
  os << "\n];\n";
  os << "A := KQ/rels;\n";
  return os.str();
}

std::string export_json(const PresentedAlgebra& view) {
  using nlohmann::json;
  // Opposite algebras are stored as the underlying algebra plus a flag.
  const PresentedAlgebra alg = view.is_opposite() ? view.opposite() : view;
  json j;
  j["spec"] = json::parse(spec_to_json(alg.spec()));
  j["opposite"] = view.is_opposite();
  if (alg.orbit_modulus()) j["orbit_modulus"] = *alg.orbit_modulus();
  json verts = json::array();
  for (int v = 0; v < alg.num_vertices(); ++v) verts.push_back(alg.vertex(v));
  j["vertices"] = verts;
  json basis = json::array();
  for (int e = 0; e < alg.num_basis(); ++e) {
    BasisElt b = alg.basis(e);
    basis.push_back({b.src, b.tgt, b.shift});
  }
  j["basis"] = basis;
  json ids = json::array();
  for (int v = 0; v < alg.num_vertices(); ++v) ids.push_back(alg.identity(v));
  j["identities"] = ids;
  json arrows = json::array();
  for (int a = 0; a < alg.num_arrows(); ++a) {
    Arrow x = alg.arrow(a);
    arrows.push_back({{"src", x.src}, {"tgt", x.tgt}, {"coord", x.coord}, {"shift", x.shift},
                      {"element", alg.arrow_element(a)}, {"name", arrow_name(alg, a)}});
  }
  j["arrows"] = arrows;
  json rels = json::array();
  for (const auto& r : alg.relations()) {
    json terms = json::array();
    for (const auto& t : r) terms.push_back({{"coeff", to_string(t.coeff)}, {"path", t.arrows}});
    rels.push_back(terms);
  }
  j["relations"] = rels;
  json comp = json::array();
  for (int f = 0; f < alg.num_basis(); ++f)
    for (int g : [&] {
           std::vector<int> out;
           int t = alg.basis(f).tgt;
           for (int w = 0; w < alg.num_vertices(); ++w)
             for (int h : alg.hom_basis(t, w)) out.push_back(h);
           return out;
         }()) {
      auto res = alg.compose(f, g);
      if (res.empty()) continue;
      json terms = json::array();
      for (const auto& t : res) terms.push_back({t.elt, to_string(t.coeff)});
      comp.push_back({f, g, terms});
    }
  j["compositions"] = comp;
  return j.dump(1);
}

PresentedAlgebra import_json(const std::string& text) {
  using nlohmann::json;
  json j = json::parse(text);
  AlgebraSpec spec = spec_from_json(j.at("spec").dump());
  std::optional<int> modulus;
  if (j.contains("orbit_modulus")) modulus = j["orbit_modulus"].get<int>();
  AlgebraBuilder bld(spec, modulus);
  const auto& verts = j.at("vertices");
  const auto& basis = j.at("basis");
  const auto& idents = j.at("identities");
  if (idents.size() != verts.size()) throw std::invalid_argument("import_json: identities do not match vertices");
  std::vector<int> remap(basis.size(), -1);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    int id = bld.add_vertex(verts[v].get<std::vector<int>>());
    (void)id;
    std::size_t e = idents[v].get<std::size_t>();
    if (e >= basis.size()) throw std::invalid_argument("import_json: bad identity index");
    remap[e] = static_cast<int>(v);  // identities are created in vertex order
  }
  for (std::size_t e = 0; e < basis.size(); ++e) {
    if (remap[e] >= 0) continue;
    remap[e] = bld.add_basis(basis[e][0].get<int>(), basis[e][1].get<int>(), basis[e][2].get<int>());
  }
  for (const auto& a : j.at("arrows"))
    bld.add_arrow(a.at("src").get<int>(), a.at("tgt").get<int>(), a.at("coord").get<int>(), a.at("shift").get<int>(),
                  remap.at(a.at("element").get<std::size_t>()));
  for (const auto& c : j.at("compositions")) {
    std::vector<Term> res;
    for (const auto& t : c[2]) res.push_back({remap.at(t[0].get<std::size_t>()), rational_from_string(t[1].get<std::string>())});
    bld.set_composition(remap.at(c[0].get<std::size_t>()), remap.at(c[1].get<std::size_t>()), std::move(res));
  }
  for (const auto& r : j.at("relations")) {
    Relation rel;
    for (const auto& t : r)
      rel.push_back({rational_from_string(t.at("coeff").get<std::string>()), t.at("path").get<std::vector<int>>()});
    bld.add_relation(std::move(rel));
  }
  PresentedAlgebra alg = bld.finish();
  return j.value("opposite", false) ? alg.opposite() : alg;
}

}  // namespace hinak
