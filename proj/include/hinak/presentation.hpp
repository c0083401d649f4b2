#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hinak/combinatorics.hpp"
#include "hinak/exactla.hpp"

namespace hinak {

enum class Family {
  LinearAn,
  KupischA,
  Window,
  ZlWindow,
  SelfinjAtilde,
  AtildeKupisch,
  TubeTrunc,
  Mesh,          // alternative presentation with connecting arrows
  Endomorphism,  // endomorphism algebra of a list of modules
};

// `d` is always the length of the vertex tuples. For SelfinjAtilde,
// AtildeKupisch and TubeTrunc, `n` is the orbit modulus: vertices are
// canonical representatives with first entry in [0,n).
struct AlgebraSpec {
  Family family = Family::LinearAn;
  int n = 0;
  int d = 1;
  int a = 0, b = 0;
  int ell = 0;  // 0 means unbounded (mesh only)
  int L = 0;
  KupischSeries series;

  static AlgebraSpec linear_an(int n, int d);
  static AlgebraSpec kupisch_a(KupischSeries s, int d);
  static AlgebraSpec window(int a, int b, int d);
  static AlgebraSpec zl_window(int ell, int a, int b, int d);
  static AlgebraSpec selfinj_atilde(int n, int ell, int d);
  static AlgebraSpec atilde_kupisch(KupischSeries s, int d);
  static AlgebraSpec tube_trunc(int n, int d, int L);

  void validate() const;
  bool is_orbit() const;
  std::optional<int> orbit_modulus() const;
  std::string describe() const;
  bool operator==(const AlgebraSpec&) const = default;

  // The closed-form description shared by all standard families: a bound
  // l(t) on the Loewy length of tuples ending in t, and a range for entries.
  bool has_series() const;
  bool entries_in_range(const std::vector<int>& t) const;
  int bound(long t) const;
  // Tuple lies in the restricted ordered-sequence set of the family (any
  // tuple length; orbit families accept any representative).
  bool admits(const std::vector<int>& t) const;
  // Hom between ambient vertices (un-canonicalised tuples of length d).
  bool ambient_hom(const OrdSeq& v, const OrdSeq& w) const;
};

std::string to_string(Family f);
std::string spec_to_json(const AlgebraSpec& s);
AlgebraSpec spec_from_json(const std::string& text);

struct Arrow {
  int src = 0, tgt = 0;
  int coord = 0;  // 0-based coordinate i of a_{i+1}; 0 is the connecting arrow in mesh coordinates
  int shift = 0;  // orbit shift tag: target ambient tuple = rep(tgt) + shift*n*(1,...,1)
};

struct BasisElt {
  int src = 0, tgt = 0;
  int shift = 0;
};

struct Term {
  int elt;
  Rational coeff;
};

// coeff times the path; arrows listed in the order they are applied.
struct PathTerm {
  Rational coeff;
  std::vector<int> arrows;
};
using Relation = std::vector<PathTerm>;

class AlgebraBuilder;

// Finite-dimensional basic algebra presented as a k-linear category: basis
// elements are morphisms src -> tgt, compose(f, g) is "f then g". Modules are
// right modules, i.e. an arrow v -> w acts M_w -> M_v.
class PresentedAlgebra {
 public:
  const AlgebraSpec& spec() const { return core_->spec; }
  bool is_opposite() const { return op_; }
  std::optional<int> orbit_modulus() const { return core_->orbit_modulus; }

  int num_vertices() const { return static_cast<int>(core_->vertices.size()); }
  const std::vector<int>& vertex(int v) const { return core_->vertices.at(v); }
  std::optional<int> vertex_index(const std::vector<int>& label) const;

  int num_arrows() const { return static_cast<int>(core_->arrows.size()); }
  Arrow arrow(int a) const;
  const std::vector<int>& arrows_from(int v) const { return op_ ? core_->arrows_in[v] : core_->arrows_out[v]; }
  const std::vector<int>& arrows_to(int v) const { return op_ ? core_->arrows_out[v] : core_->arrows_in[v]; }
  int arrow_element(int a) const { return core_->arrow_elt.at(a); }
  std::optional<int> find_arrow(int src, int coord) const;

  int num_basis() const { return static_cast<int>(core_->basis.size()); }
  BasisElt basis(int e) const;
  const std::vector<int>& hom_basis(int v, int w) const;
  int hom_dim(int v, int w) const { return static_cast<int>(hom_basis(v, w).size()); }
  int identity(int v) const { return core_->identity.at(v); }
  std::optional<int> find_basis(int v, int w, int shift) const;

  std::vector<Term> compose(int f, int g) const;
  std::vector<PathTerm> factorization(int e) const;
  std::vector<Relation> relations() const;

  int dimension() const { return num_basis(); }
  PresentedAlgebra opposite() const;

 private:
  friend class AlgebraBuilder;
  struct Core {
    AlgebraSpec spec;
    std::optional<int> orbit_modulus;
    std::vector<std::vector<int>> vertices;
    std::vector<Arrow> arrows;
    std::vector<int> arrow_elt;
    std::vector<std::vector<int>> arrows_out, arrows_in;
    std::vector<BasisElt> basis;
    std::vector<std::vector<std::vector<int>>> by_pair;
    std::vector<int> identity;
    std::unordered_map<std::uint64_t, std::vector<Term>> comp;
    std::vector<std::vector<PathTerm>> fact;
    std::vector<Relation> relations;
    std::vector<std::pair<std::vector<int>, int>> index;  // sorted label -> vertex
  };
  std::shared_ptr<const Core> core_;
  bool op_ = false;
};

class AlgebraBuilder {
 public:
  explicit AlgebraBuilder(AlgebraSpec spec, std::optional<int> orbit_modulus = std::nullopt);
  int add_vertex(std::vector<int> label);
  // Identities are added automatically by add_vertex.
  int add_basis(int src, int tgt, int shift);
  int add_arrow(int src, int tgt, int coord, int shift, int elt);
  void set_composition(int f, int g, std::vector<Term> result);
  void add_relation(Relation r);
  // Fills composition by summing shift tags (families with thin orbits).
  void compose_by_shift();
  PresentedAlgebra finish();

 private:
  std::unique_ptr<PresentedAlgebra::Core> core_;
};

PresentedAlgebra build(const AlgebraSpec& spec);
PresentedAlgebra opposite(const PresentedAlgebra& alg);
int hom_dim(const PresentedAlgebra& alg, const OrdSeq& v, const OrdSeq& w);
int algebra_dimension(const PresentedAlgebra& alg);

// Mesh-coordinate presentation of the window [a,b] of the l-bounded mesh
// category with slope tuples of length d (ell = 0: unbounded). Vertex labels
// are (slopes..., s). Arrow coord 0 is the connecting arrow b_0, coord i >= 1
// is b_i.
PresentedAlgebra mesh_presentation(int d, int ell, int a, int b);

// Independent path-algebra computation of kQ/I for a finite bound quiver with
// homogeneous relations, built degree by degree: the degree-k piece from u to
// v is spanned by (degree k-1 piece) x (arrows), modulo (degree k-m piece)
// times each relation of length m. Pieces above max_len are not computed.
struct PathQuotient {
  struct Piece {
    int src, tgt, length;
    std::vector<std::vector<int>> basis_paths;  // representatives, one per coordinate
  };
  std::vector<Piece> pieces;  // nonzero pieces only
  std::vector<Arrow> arrows;
  int max_len = 0;
  bool vanishes_at_max_len = true;  // no nonzero path of length max_len

  std::optional<int> piece_index(int src, int tgt, int length) const;
  // Class of a path as (piece, coordinates); nullopt if it is zero.
  std::optional<std::pair<int, std::vector<Rational>>> reduce(int src, const std::vector<int>& path) const;

  // step[{piece, arrow}] maps coordinates of piece to coordinates of the
  // piece one degree up (ending at the arrow's target); absent means zero.
  std::map<std::pair<int, int>, Mat> step;
  std::map<std::tuple<int, int, int>, int> index;  // (src, tgt, length) -> piece
};

PathQuotient path_quotient(int num_vertices, const std::vector<Arrow>& arrows,
                           const std::vector<Relation>& relations, int max_len);

// Bound-quiver algebra with basis read off a PathQuotient; vertex labels and
// spec supplied by the caller.
PresentedAlgebra algebra_from_quotient(const AlgebraSpec& spec, const std::vector<std::vector<int>>& labels,
                                       const std::vector<Arrow>& arrows, const std::vector<Relation>& relations,
                                       const PathQuotient& q);

std::string export_dot(const PresentedAlgebra& alg);
std::string export_qpa(const PresentedAlgebra& alg);
std::string export_json(const PresentedAlgebra& alg);
PresentedAlgebra import_json(const std::string& text);

}  // namespace hinak
