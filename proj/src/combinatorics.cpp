#include "hinak/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hinak {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long pos_mod(long a, long n) { return a - floor_div(a, n) * n; }

void append_os(int lo, int hi, int k, std::vector<int>& cur, std::vector<OrdSeq>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() ? lo : cur.back();
  for (int v = start; v <= hi; ++v) {
    cur.push_back(v);
    append_os(lo, hi, k, cur, out);
    cur.pop_back();
  }
}

void append_box(const std::vector<int>& lo, const std::vector<int>& hi, std::vector<int>& cur,
                std::vector<OrdSeq>& out) {
  std::size_t i = cur.size();
  if (i == lo.size()) {
    out.push_back(cur);
    return;
  }
  int start = lo[i];
  if (!cur.empty()) start = std::max(start, cur.back());
  for (int v = start; v <= hi[i]; ++v) {
    cur.push_back(v);
    append_box(lo, hi, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool is_ordseq(const std::vector<int>& t) {
  if (t.empty()) return false;
  return std::is_sorted(t.begin(), t.end());
}

void require_ordseq(const std::vector<int>& t) {
  if (!is_ordseq(t)) throw std::invalid_argument("not a weakly increasing tuple: " + format_tuple(t));
}

bool interlaces(const OrdSeq& x, const OrdSeq& y) {
  if (x.size() != y.size()) throw std::invalid_argument("interlaces: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
    if (i + 1 < x.size() && y[i] > x[i + 1]) return false;
  }
  return true;
}

int loewy_len(const OrdSeq& lambda) {
  if (lambda.empty()) throw std::invalid_argument("loewy_len: empty tuple");
  return lambda.back() - lambda.front() + 1;
}

OrdSeq tau_tuple(const OrdSeq& lambda, int k) {
  OrdSeq out = lambda;
  for (int& v : out) v -= k;
  return out;
}

bool product_leq(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("product_leq: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

std::vector<OrdSeq> enumerate_os(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("enumerate_os: need n >= 1 and k >= 1");
  return enumerate_os_range(0, n - 1, k);
}

std::vector<OrdSeq> enumerate_os_range(int a, int b, int k) {
  if (k < 1) throw std::invalid_argument("enumerate_os_range: need k >= 1");
  std::vector<OrdSeq> out;
  if (a > b) return out;
  std::vector<int> cur;
  append_os(a, b, k, cur, out);
  return out;
}

std::vector<OrdSeq> enumerate_box(const std::vector<int>& lo, const std::vector<int>& hi) {
  if (lo.size() != hi.size()) throw std::invalid_argument("enumerate_box: length mismatch");
  std::vector<OrdSeq> out;
  if (lo.empty() || !product_leq(lo, hi)) return out;
  std::vector<int> cur;
  append_box(lo, hi, cur, out);
  return out;
}

KupischSeries KupischSeries::linear(std::vector<int> l) { return {KupischVariant::LinearA, std::move(l)}; }
KupischSeries KupischSeries::cyclic(std::vector<int> l) { return {KupischVariant::CyclicA, std::move(l)}; }
KupischSeries KupischSeries::constant(int ell) { return {KupischVariant::ConstantZ, {ell}}; }
KupischSeries KupischSeries::periodic(std::vector<int> p) { return {KupischVariant::PeriodicInf, std::move(p)}; }

int KupischSeries::at(long t) const {
  if (lengths.empty()) throw std::logic_error("empty Kupisch series");
  switch (variant) {
    case KupischVariant::LinearA:
      if (t < 0 || t >= size()) throw std::out_of_range("Kupisch index out of range");
      return lengths[static_cast<std::size_t>(t)];
    case KupischVariant::ConstantZ:
      return lengths[0];
    case KupischVariant::CyclicA:
    case KupischVariant::PeriodicInf:
      return lengths[static_cast<std::size_t>(pos_mod(t, size()))];
  }
  return 0;
}

int KupischSeries::max_length() const {
  if (lengths.empty()) return 0;
  return *std::max_element(lengths.begin(), lengths.end());
}

std::optional<KupischViolation> validate_kupisch(const KupischSeries& s) {
  const auto& l = s.lengths;
  if (l.empty()) return KupischViolation{0, "empty series"};
  switch (s.variant) {
    case KupischVariant::LinearA: {
      if (l[0] != 1) return KupischViolation{0, "l_0 = " + std::to_string(l[0]) + " but must equal 1"};
      for (std::size_t i = 1; i < l.size(); ++i) {
        if (l[i] < 2) return KupischViolation{int(i), "l_" + std::to_string(i) + " = " + std::to_string(l[i]) + " < 2"};
        if (l[i] > l[i - 1] + 1)
          return KupischViolation{int(i), "l_" + std::to_string(i) + " = " + std::to_string(l[i]) + " > l_" +
                                              std::to_string(i - 1) + " + 1 = " + std::to_string(l[i - 1] + 1)};
      }
      return std::nullopt;
    }
    case KupischVariant::ConstantZ:
      if (l.size() != 1) return KupischViolation{0, "constant series takes exactly one length"};
      if (l[0] < 2) return KupischViolation{0, "l = " + std::to_string(l[0]) + " < 2"};
      return std::nullopt;
    case KupischVariant::CyclicA:
    case KupischVariant::PeriodicInf: {
      int n = static_cast<int>(l.size());
      for (int i = 0; i < n; ++i) {
        int prev = l[static_cast<std::size_t>(pos_mod(i - 1, n))];
        if (l[i] < 2) return KupischViolation{i, "l_" + std::to_string(i) + " = " + std::to_string(l[i]) + " < 2"};
        if (l[i] > prev + 1)
          return KupischViolation{i, "l_" + std::to_string(i) + " = " + std::to_string(l[i]) + " > l_" +
                                         std::to_string(pos_mod(i - 1, n)) + " + 1 = " + std::to_string(prev + 1)};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

void require_valid(const KupischSeries& s) {
  if (auto v = validate_kupisch(s))
    throw std::invalid_argument("invalid Kupisch series at index " + std::to_string(v->index) + ": " + v->message);
}

bool in_restriction(const KupischSeries& s, const OrdSeq& lambda) {
  if (!is_ordseq(lambda)) return false;
  if (s.variant == KupischVariant::LinearA && (lambda.front() < 0 || lambda.back() >= s.size())) return false;
  return loewy_len(lambda) <= s.at(lambda.back());
}

std::vector<OrdSeq> restrict_os(const KupischSeries& s, int k) {
  require_valid(s);
  std::vector<OrdSeq> out;
  switch (s.variant) {
    case KupischVariant::LinearA:
      for (auto& lam : enumerate_os(s.size(), k))
        if (in_restriction(s, lam)) out.push_back(lam);
      return out;
    case KupischVariant::CyclicA: {
      int n = s.size();
      int span = s.max_length();
      for (auto& lam : enumerate_os_range(0, n - 1 + span - 1, k))
        if (lam.front() < n && in_restriction(s, lam)) out.push_back(lam);
      return out;
    }
    default:
      throw std::invalid_argument("restrict_os: this series variant needs a window");
  }
}

std::vector<OrdSeq> restrict_os(const KupischSeries& s, int k, int a, int b) {
  require_valid(s);
  std::vector<OrdSeq> out;
  for (auto& lam : enumerate_os_range(a, b, k))
    if (in_restriction(s, lam)) out.push_back(lam);
  return out;
}

std::vector<KupischSeries> kupisch_hasse_path(const KupischSeries& s) {
  if (s.variant != KupischVariant::LinearA) throw std::invalid_argument("kupisch_hasse_path: LinearA series only");
  require_valid(s);
  std::vector<KupischSeries> path{s};
  KupischSeries cur = s;
  for (;;) {
    bool moved = false;
    for (int i = 0; i < cur.size(); ++i) {
      KupischSeries next = cur;
      next.lengths[i] += 1;
      if (!validate_kupisch(next)) {
        cur = next;
        path.push_back(cur);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return path;
}

OrdSeq nakayama_permutation(const OrdSeq& lambda, int ell) {
  require_ordseq(lambda);
  if (ell < 2) throw std::invalid_argument("nakayama_permutation: need l >= 2");
  if (loewy_len(lambda) > ell) throw std::invalid_argument("nakayama_permutation: length exceeds l");
  OrdSeq out(lambda.begin() + 1, lambda.end());
  out.push_back(lambda.front() + ell - 1);
  return out;
}

std::pair<OrdSeq, int> canonical_orbit_rep(const OrdSeq& lambda, int n) {
  if (n < 1) throw std::invalid_argument("canonical_orbit_rep: need n >= 1");
  if (lambda.empty()) throw std::invalid_argument("canonical_orbit_rep: empty tuple");
  int s = static_cast<int>(floor_div(lambda.front(), n));
  return {tau_tuple(lambda, s * n), s};
}

std::pair<OrdSeq, int> mesh_coordinates(const OrdSeq& lambda) {
  if (lambda.size() < 2) throw std::invalid_argument("mesh_coordinates: need length >= 2");
  OrdSeq slopes;
  for (std::size_t i = 1; i < lambda.size(); ++i) slopes.push_back(lambda[i] - lambda[0]);
  return {slopes, lambda[0]};
}

OrdSeq mesh_from_coordinates(const OrdSeq& slopes, int s) {
  OrdSeq out{s};
  for (int v : slopes) out.push_back(v + s);
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string format_tuple(const std::vector<int>& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  return os.str();
}

std::vector<int> parse_tuple(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad tuple entry '" + part + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad tuple entry '" + part + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty tuple");
  return out;
}

std::string to_string(KupischVariant v) {
  switch (v) {
    case KupischVariant::LinearA: return "linear";
    case KupischVariant::CyclicA: return "cyclic";
    case KupischVariant::ConstantZ: return "constant";
    case KupischVariant::PeriodicInf: return "periodic";
  }
  return "";
}

KupischVariant kupisch_variant_from_string(const std::string& name) {
  if (name == "linear") return KupischVariant::LinearA;
  if (name == "cyclic") return KupischVariant::CyclicA;
  if (name == "constant") return KupischVariant::ConstantZ;
  if (name == "periodic") return KupischVariant::PeriodicInf;
  throw std::invalid_argument("unknown Kupisch variant '" + name + "'");
}

std::string kupisch_to_json(const KupischSeries& s) {
  nlohmann::json j{{"variant", to_string(s.variant)}, {"lengths", s.lengths}};
  return j.dump();
}

KupischSeries kupisch_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  KupischSeries s{kupisch_variant_from_string(j.at("variant").get<std::string>()),
                  j.at("lengths").get<std::vector<int>>()};
  require_valid(s);
  return s;
}

}  // namespace hinak
