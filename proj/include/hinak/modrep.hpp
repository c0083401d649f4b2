#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hinak/exactla.hpp"
#include "hinak/presentation.hpp"

namespace hinak {

// Right module: an arrow a: v -> w acts M_w -> M_v, so maps[a] has shape
// dims[v] x dims[w]. A path "a then b" acts by maps[a] * maps[b].
struct MatrixModule {
  std::vector<int> dims;
  std::vector<Mat> maps;

  int total() const;
  bool is_zero() const { return total() == 0; }
};

// Homomorphism M -> N; comps[v] has shape N.dims[v] x M.dims[v].
struct ModMap {
  std::vector<Mat> comps;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

MatrixModule zero_module(const PresentedAlgebra& alg);
MatrixModule simple_module(const PresentedAlgebra& alg, int v);
std::optional<std::string> validate_module(const PresentedAlgebra& alg, const MatrixModule& m);
void require_module(const PresentedAlgebra& alg, const MatrixModule& m);

// Action of basis elements, computed from factorizations and memoised.
class Actions {
 public:
  Actions(const PresentedAlgebra& alg, const MatrixModule& m);
  // e: v -> w gives a dims[v] x dims[w] matrix.
  const Mat& operator()(int e);

 private:
  const PresentedAlgebra* alg_;
  const MatrixModule* m_;
  std::vector<std::optional<Mat>> cache_;
};

// Interval module of a tuple of length (vertex length + 1); pushed down to the
// orbit algebra for orbit families. Throws on empty support.
MatrixModule interval_module(const PresentedAlgebra& alg, const OrdSeq& lambda);
MatrixModule projective_module(const PresentedAlgebra& alg, int v);
MatrixModule injective_module(const PresentedAlgebra& alg, int v);
// Direct sums in the given order; at vertex w the basis of summand j is
// hom_basis(w, vertices[j]) (projective) or its dual (injective).
MatrixModule projective_sum(const PresentedAlgebra& alg, const std::vector<int>& vertices);
MatrixModule injective_sum(const PresentedAlgebra& alg, const std::vector<int>& vertices);
MatrixModule direct_sum(const MatrixModule& x, const MatrixModule& y);
// Transposed maps; a module over the opposite algebra.
MatrixModule dualize(const MatrixModule& m);
ModMap dualize(const ModMap& f);

std::vector<ModMap> hom_space(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n);
int hom_dim(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n);
bool is_hom(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n, const ModMap& f);
// g after f.
ModMap compose(const ModMap& f, const ModMap& g);
ModMap identity_map(const MatrixModule& m);
std::vector<Rational> flatten(const ModMap& f);

struct SubModule {
  MatrixModule module;
  ModMap inclusion;
};
struct QuotientModule {
  MatrixModule module;
  ModMap projection;
};
// Subspaces given by independent columns; they must be closed under the action.
SubModule submodule(const PresentedAlgebra& alg, const MatrixModule& m, const std::vector<Mat>& spaces);
QuotientModule quotient(const PresentedAlgebra& alg, const MatrixModule& m, const std::vector<Mat>& spaces);
SubModule kernel(const PresentedAlgebra& alg, const MatrixModule& m, const ModMap& f);
QuotientModule cokernel(const PresentedAlgebra& alg, const MatrixModule& n, const ModMap& f);
SubModule image(const PresentedAlgebra& alg, const MatrixModule& n, const ModMap& f);

SubModule radical(const PresentedAlgebra& alg, const MatrixModule& m);
QuotientModule top(const PresentedAlgebra& alg, const MatrixModule& m);
SubModule socle(const PresentedAlgebra& alg, const MatrixModule& m);
int loewy_length(const PresentedAlgebra& alg, const MatrixModule& m);

// Homomorphism from projective_sum(vertices) to m sending generator j to
// gens[j] (coordinates in m at vertices[j]).
ModMap map_from_projective(const PresentedAlgebra& alg, const std::vector<int>& vertices,
                           const std::vector<std::vector<Rational>>& gens, const MatrixModule& m);

struct ProjectiveCover {
  std::vector<int> vertices;
  std::vector<std::vector<Rational>> gens;
  MatrixModule P;
  ModMap epi;
};
ProjectiveCover projective_cover(const PresentedAlgebra& alg, const MatrixModule& m);

struct InjectiveEnvelope {
  std::vector<int> vertices;
  MatrixModule I;
  ModMap mono;
};
InjectiveEnvelope injective_envelope(const PresentedAlgebra& alg, const MatrixModule& m);

bool is_projective(const PresentedAlgebra& alg, const MatrixModule& m);
bool is_injective(const PresentedAlgebra& alg, const MatrixModule& m);

// Minimal projective resolution P_0 <- P_1 <- ... computed for at most
// cap + 1 terms. diffs[k][j] are the coordinates, in P_k at vertex
// terms[k+1][j], of the image of generator j of P_{k+1}.
struct ProjectiveResolution {
  std::vector<std::vector<int>> terms;
  std::vector<std::vector<std::vector<Rational>>> diffs;
  std::vector<std::vector<Rational>> augmentation;  // cover generators in M
  bool complete = false;                            // a zero syzygy was reached
  MatrixModule last_syzygy;                         // Omega^{terms.size()} M
  int proj_dim() const { return complete ? static_cast<int>(terms.size()) - 1 : -1; }
};
ProjectiveResolution min_proj_resolution(const PresentedAlgebra& alg, const MatrixModule& m, int cap);
MatrixModule syzygy(const PresentedAlgebra& alg, const MatrixModule& m, int k);
MatrixModule cosyzygy(const PresentedAlgebra& alg, const MatrixModule& m, int k);

// Minimal injective coresolution M -> I^0 -> I^1 -> ...: vertex lists of the
// terms (from the projective resolution of D M over the opposite algebra).
struct InjectiveCoresolution {
  std::vector<std::vector<int>> terms;
  bool complete = false;
};
InjectiveCoresolution min_inj_coresolution(const PresentedAlgebra& alg, const MatrixModule& m, int cap);

// dim Ext^i(m, n) from the Hom complex of a minimal projective resolution.
int ext_dim(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n, int i);
// Reuses a resolution computed with cap >= i + 1 (or complete).
int ext_dim(const PresentedAlgebra& alg, const ProjectiveResolution& res, const MatrixModule& n, int i);

// Nakayama functor on a projective sum: the injective sum on the same vertices.
MatrixModule nakayama_functor(const PresentedAlgebra& alg, const std::vector<int>& vertices);
// nu applied to a map between projective sums given by generator images.
ModMap nakayama_map(const PresentedAlgebra& alg, const std::vector<int>& from, const std::vector<int>& to,
                    const std::vector<std::vector<Rational>>& gens);

// Tr M over the opposite algebra, from a minimal presentation.
MatrixModule transpose(const PresentedAlgebra& alg, const MatrixModule& m);
MatrixModule ar_translate(const PresentedAlgebra& alg, const MatrixModule& m);
MatrixModule ar_translate_inv(const PresentedAlgebra& alg, const MatrixModule& m);
MatrixModule tau_d(const PresentedAlgebra& alg, int d, const MatrixModule& m);
MatrixModule tau_d_inv(const PresentedAlgebra& alg, int d, const MatrixModule& m);

int stable_hom_dim(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n);
int costable_hom_dim(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n);

struct DimResult {
  int value = 0;
  bool capped = false;  // gldim: exceeds cap; domdim: value is only a lower bound
  std::string to_string() const;
};
DimResult gldim(const PresentedAlgebra& alg, int cap);
DimResult domdim(const PresentedAlgebra& alg, int cap);

enum class IsoResult { Isomorphic, NotIsomorphic, Undetermined };
std::string to_string(IsoResult r);
IsoResult is_isomorphic(const PresentedAlgebra& alg, const MatrixModule& m, const MatrixModule& n);

// Endomorphism category of a list of pairwise non-isomorphic modules with
// local endomorphism rings. Basis elements v -> w are homomorphisms
// modules[v] -> modules[w]; arrows span rad / rad^2.
struct EndoAlgebra {
  PresentedAlgebra alg;
  std::vector<ModMap> maps;  // the homomorphism behind each basis element
};
EndoAlgebra endomorphism_algebra(const PresentedAlgebra& alg, const std::vector<MatrixModule>& modules,
                                 const std::vector<OrdSeq>& labels);

// Module over `outer` agreeing with m on the vertices of `inner` (matched by
// label) and zero elsewhere.
MatrixModule extend_by_zero(const PresentedAlgebra& inner, const PresentedAlgebra& outer, const MatrixModule& m);

std::string module_to_json(const PresentedAlgebra& alg, const MatrixModule& m);
MatrixModule module_from_json(const PresentedAlgebra& alg, const std::string& text);

// ---- closed forms ----

// Summand index set: tuples of length (vertex length + 1) admitted by the
// family; canonical representatives for orbit families.
std::vector<OrdSeq> ct_summands(const AlgebraSpec& spec);
bool closed_is_projective(const AlgebraSpec& spec, const OrdSeq& lambda);
bool closed_is_injective(const AlgebraSpec& spec, const OrdSeq& lambda);
// P_v = M(x, v) and I_v = M(v, y).
OrdSeq closed_projective(const AlgebraSpec& spec, const OrdSeq& v);
OrdSeq closed_injective(const AlgebraSpec& spec, const OrdSeq& v);
// Vertices of P^0, P^{-1}, ..., P^{-d} for a non-projective M(lambda).
std::vector<OrdSeq> closed_resolution_vertices(const OrdSeq& lambda);
// Vertices of I^0, ..., I^d for a non-injective M(lambda).
std::vector<OrdSeq> closed_coresolution_vertices(const OrdSeq& lambda);
OrdSeq closed_omega_d(const AlgebraSpec& spec, const OrdSeq& lambda);
std::pair<OrdSeq, OrdSeq> image_interval(const OrdSeq& lambda, const OrdSeq& mu);
std::vector<OrdSeq> d_almost_split_summands(const AlgebraSpec& spec, const OrdSeq& lambda);
int hom_formula(const AlgebraSpec& spec, const OrdSeq& lambda, const OrdSeq& mu);
int ext_d_formula(const AlgebraSpec& spec, const OrdSeq& lambda, const OrdSeq& mu);
// tau_d(lambda) as a canonical summand index; nullopt for projectives.
std::optional<OrdSeq> closed_tau_d(const AlgebraSpec& spec, const OrdSeq& lambda);
OrdSeq canonical_summand(const AlgebraSpec& spec, const OrdSeq& lambda);

int orbit_hom_dim(const AlgebraSpec& spec, const OrdSeq& lambda, const OrdSeq& mu);
struct OrbitExt {
  int value = 0;
  bool stable = true;
};
OrbitExt orbit_ext_dim(const AlgebraSpec& spec, const OrdSeq& lambda, const OrdSeq& mu, int i);

}  // namespace hinak
