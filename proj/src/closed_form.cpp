#include <algorithm>
#include <climits>

#include "hinak/modrep.hpp"

namespace hinak {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int summand_length(const AlgebraSpec& spec) { return spec.d + 1; }

void require_summand(const AlgebraSpec& spec, const OrdSeq& lambda) {
  require_ordseq(lambda);
  if (static_cast<int>(lambda.size()) != summand_length(spec))
    throw std::invalid_argument("expected a tuple of length " + std::to_string(summand_length(spec)));
  if (!spec.admits(lambda)) throw std::invalid_argument(format_tuple(lambda) + " is not a summand index of " + spec.describe());
}

int max_entry_span(const AlgebraSpec& spec) {
  switch (spec.family) {
    case Family::SelfinjAtilde: return spec.ell;
    case Family::TubeTrunc: return spec.L;
    case Family::AtildeKupisch: return spec.series.max_length();
    default: return INT_MAX / 4;
  }
}

}  // namespace

OrdSeq canonical_summand(const AlgebraSpec& spec, const OrdSeq& lambda) {
  if (auto n = spec.orbit_modulus()) return canonical_orbit_rep(lambda, *n).first;
  return lambda;
}

std::vector<OrdSeq> ct_summands(const AlgebraSpec& spec) {
  spec.validate();
  const int k = summand_length(spec);
  std::vector<OrdSeq> out;
  switch (spec.family) {
    case Family::LinearAn: return enumerate_os(spec.n, k);
    case Family::KupischA: return restrict_os(spec.series, k);
    case Family::Window: return enumerate_os_range(spec.a, spec.b, k);
    case Family::ZlWindow: return restrict_os(KupischSeries::constant(spec.ell), k, spec.a, spec.b);
    case Family::SelfinjAtilde:
    case Family::AtildeKupisch:
    case Family::TubeTrunc:
      for (auto& l : enumerate_os_range(0, spec.n - 1 + max_entry_span(spec) - 1, k))
        if (l.front() < spec.n && spec.admits(l)) out.push_back(l);
      return out;
    default: throw std::invalid_argument("ct_summands: unsupported family");
  }
}

OrdSeq closed_projective(const AlgebraSpec& spec, const OrdSeq& v) {
  require_ordseq(v);
  OrdSeq out{v.back() + 1 - spec.bound(v.back())};
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

OrdSeq closed_injective(const AlgebraSpec& spec, const OrdSeq& v) {
  require_ordseq(v);
  OrdSeq t = v;
  t.push_back(v.back());
  if (!spec.admits(t)) throw std::invalid_argument("closed_injective: " + format_tuple(v) + " is not a vertex");
  // Admissible last entries form an interval starting at v_last.
  for (int guard = 0; guard < 100000; ++guard) {
    t.back() += 1;
    if (!spec.admits(t)) {
      t.back() -= 1;
      return t;
    }
  }
  throw std::logic_error("closed_injective: unbounded family");
}

bool closed_is_projective(const AlgebraSpec& spec, const OrdSeq& lambda) {
  require_summand(spec, lambda);
  OrdSeq v(lambda.begin() + 1, lambda.end());
  return closed_projective(spec, v).front() == lambda.front();
}

bool closed_is_injective(const AlgebraSpec& spec, const OrdSeq& lambda) {
  require_summand(spec, lambda);
  OrdSeq v(lambda.begin(), lambda.end() - 1);
  return closed_injective(spec, v).back() == lambda.back();
}

std::vector<OrdSeq> closed_resolution_vertices(const OrdSeq& lambda) {
  const int D = static_cast<int>(lambda.size()) - 1;
  std::vector<OrdSeq> out;
  for (int i = 0; i <= D; ++i) {
    OrdSeq v;
    for (int j = 0; j < i; ++j) v.push_back(lambda[j] - 1);
    for (int j = i + 1; j <= D; ++j) v.push_back(lambda[j]);
    out.push_back(v);
  }
  return out;
}

std::vector<OrdSeq> closed_coresolution_vertices(const OrdSeq& lambda) {
  const int D = static_cast<int>(lambda.size()) - 1;
  std::vector<OrdSeq> out;
  for (int i = 0; i <= D; ++i) {
    OrdSeq v;
    for (int j = 0; j < D - i; ++j) v.push_back(lambda[j]);
    for (int j = D - i + 1; j <= D; ++j) v.push_back(lambda[j] + 1);
    out.push_back(v);
  }
  return out;
}

OrdSeq closed_omega_d(const AlgebraSpec& spec, const OrdSeq& lambda) {
  const int D = static_cast<int>(lambda.size()) - 1;
  OrdSeq out{lambda[D] + 1 - spec.bound(lambda[D])};
  for (int j = 0; j < D; ++j) out.push_back(lambda[j] - 1);
  return out;
}

std::pair<OrdSeq, OrdSeq> image_interval(const OrdSeq& lambda, const OrdSeq& mu) {
  if (!interlaces(lambda, mu))
    throw std::invalid_argument("image_interval: " + format_tuple(lambda) + " does not interlace " + format_tuple(mu));
  const std::size_t D = lambda.size() - 1;
  return {OrdSeq(mu.begin(), mu.begin() + D), OrdSeq(lambda.begin() + 1, lambda.end())};
}

std::vector<OrdSeq> d_almost_split_summands(const AlgebraSpec& spec, const OrdSeq& lambda) {
  if (closed_is_projective(spec, lambda))
    throw std::invalid_argument("d_almost_split_summands: M(" + format_tuple(lambda) + ") is projective");
  std::vector<OrdSeq> out;
  for (auto& mu : enumerate_box(tau_tuple(lambda, 1), lambda))
    if (is_ordseq(mu) && spec.admits(mu)) out.push_back(mu);
  return out;
}

namespace {

// Shifts k with mu + k n (1,...,1) relevant for lambda: all k for which the
// first entry lands in [lo, hi].
std::vector<OrdSeq> shifted_copies(const AlgebraSpec& spec, const OrdSeq& mu, long lo, long hi) {
  std::vector<OrdSeq> out;
  auto n = spec.orbit_modulus();
  if (!n) {
    out.push_back(mu);
    return out;
  }
  for (long k = floor_div(lo - mu.front(), *n) - 1; k <= floor_div(hi - mu.front(), *n) + 1; ++k)
    out.push_back(tau_tuple(mu, static_cast<int>(-k * *n)));
  return out;
}

}  // namespace

int hom_formula(const AlgebraSpec& spec, const OrdSeq& lambda, const OrdSeq& mu) {
  require_summand(spec, lambda);
  require_summand(spec, mu);
  int count = 0;
  for (auto& m : shifted_copies(spec, mu, lambda.front(), lambda[1]))
    if (interlaces(lambda, m)) ++count;
  return count;
}

int ext_d_formula(const AlgebraSpec& spec, const OrdSeq& lambda, const OrdSeq& mu) {
  require_summand(spec, lambda);
  require_summand(spec, mu);
  if (closed_is_projective(spec, lambda)) return 0;
  OrdSeq t = tau_tuple(lambda, 1);
  int count = 0;
  // Ext^d(M(lambda), M(mu)) is dual to Hom(M(mu), M(tau lambda)) modulo maps
  // through injectives; the nonzero map M(mu) -> M(tau lambda) factors
  // through the injective envelope M(mu_1..mu_d, y) exactly when y reaches
  // the last entry of tau lambda.
  for (auto& m : shifted_copies(spec, mu, static_cast<long>(t.front()) - max_entry_span(spec) - 1, t.front())) {
    if (!interlaces(m, t)) continue;
    OrdSeq head(m.begin(), m.end() - 1);
    int y = closed_injective(spec, head).back();
    if (y <= t.back()) continue;
    ++count;
  }
  return count;
}

std::optional<OrdSeq> closed_tau_d(const AlgebraSpec& spec, const OrdSeq& lambda) {
  if (closed_is_projective(spec, lambda)) return std::nullopt;
  return canonical_summand(spec, tau_tuple(lambda, 1));
}

int orbit_hom_dim(const AlgebraSpec& spec, const OrdSeq& lambda, const OrdSeq& mu) {
  auto n = spec.orbit_modulus();
  if (!n) throw std::invalid_argument("orbit_hom_dim: not an orbit family");
  for (const auto* t : {&lambda, &mu})
    if (t->empty() || t->front() < 0 || t->front() >= *n)
      throw std::invalid_argument("orbit_hom_dim: " + format_tuple(*t) + " is not a canonical representative");
  return hom_formula(spec, lambda, mu);
}

OrbitExt orbit_ext_dim(const AlgebraSpec& spec, const OrdSeq& lambda, const OrdSeq& mu, int i) {
  auto n = spec.orbit_modulus();
  if (!n) throw std::invalid_argument("orbit_ext_dim: not an orbit family");
  for (const auto* t : {&lambda, &mu})
    if (t->empty() || t->front() < 0 || t->front() >= *n)
      throw std::invalid_argument("orbit_ext_dim: " + format_tuple(*t) + " is not a canonical representative");
  auto compute = [&](const AlgebraSpec& s) {
    auto alg = build(s);
    return ext_dim(alg, interval_module(alg, lambda), interval_module(alg, mu), i);
  };
  OrbitExt out;
  out.value = compute(spec);
  if (spec.family == Family::TubeTrunc) {
    AlgebraSpec wider = spec;
    wider.L = spec.L + spec.d + 1;
    out.stable = compute(wider) == out.value;
  }
  return out;
}

}  // namespace hinak
