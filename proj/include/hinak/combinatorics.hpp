#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hinak {

// Weakly increasing integer tuple. Stored as a plain vector; use
// is_ordseq() / require_ordseq() where the invariant matters.
using OrdSeq = std::vector<int>;

bool is_ordseq(const std::vector<int>& t);
void require_ordseq(const std::vector<int>& t);

bool interlaces(const OrdSeq& x, const OrdSeq& y);
int loewy_len(const OrdSeq& lambda);
OrdSeq tau_tuple(const OrdSeq& lambda, int k);

// Componentwise order on tuples of equal length.
bool product_leq(const std::vector<int>& x, const std::vector<int>& y);

// All weakly increasing k-tuples with entries in {0,...,n-1}, lexicographic.
std::vector<OrdSeq> enumerate_os(int n, int k);
// Same with entries in [a,b].
std::vector<OrdSeq> enumerate_os_range(int a, int b, int k);
// Every tuple z with lo <= z <= hi componentwise that is weakly increasing,
// lexicographic.
std::vector<OrdSeq> enumerate_box(const std::vector<int>& lo, const std::vector<int>& hi);

enum class KupischVariant { LinearA, CyclicA, ConstantZ, PeriodicInf };

struct KupischSeries {
  KupischVariant variant = KupischVariant::LinearA;
  std::vector<int> lengths;

  static KupischSeries linear(std::vector<int> l);
  static KupischSeries cyclic(std::vector<int> l);
  static KupischSeries constant(int ell);
  static KupischSeries periodic(std::vector<int> period);

  int size() const { return static_cast<int>(lengths.size()); }
  // l_t, with the index taken mod the period for cyclic and periodic series.
  int at(long t) const;
  int max_length() const;
  bool operator==(const KupischSeries&) const = default;
};

struct KupischViolation {
  int index;
  std::string message;
};

std::optional<KupischViolation> validate_kupisch(const KupischSeries& s);
void require_valid(const KupischSeries& s);

// Whether len(lambda) <= l_{lambda_last}; for LinearA also requires entries in
// {0,...,n-1}.
bool in_restriction(const KupischSeries& s, const OrdSeq& lambda);

// LinearA: subset of enumerate_os(n,k). CyclicA: canonical orbit
// representatives (lambda_1 in [0,n)) whose length is bounded by the series.
// ConstantZ and PeriodicInf need a window, see the overload.
std::vector<OrdSeq> restrict_os(const KupischSeries& s, int k);
std::vector<OrdSeq> restrict_os(const KupischSeries& s, int k, int a, int b);

std::vector<KupischSeries> kupisch_hasse_path(const KupischSeries& s);

OrdSeq nakayama_permutation(const OrdSeq& lambda, int ell);

std::pair<OrdSeq, int> canonical_orbit_rep(const OrdSeq& lambda, int n);

std::pair<OrdSeq, int> mesh_coordinates(const OrdSeq& lambda);
OrdSeq mesh_from_coordinates(const OrdSeq& slopes, int s);

long binomial(int n, int k);

// "1,2,3" style formatting and parsing (entries are printed as stored).
std::string format_tuple(const std::vector<int>& t);
std::vector<int> parse_tuple(const std::string& text);

std::string to_string(KupischVariant v);
KupischVariant kupisch_variant_from_string(const std::string& name);
std::string kupisch_to_json(const KupischSeries& s);
KupischSeries kupisch_from_json(const std::string& text);

}  // namespace hinak
