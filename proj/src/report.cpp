#include <map>
#include <sstream>

#include <json.hpp>

#include "hinak/verify.hpp"

namespace hinak {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Undetermined: return "undetermined";
    case Status::CapExceeded: return "cap-exceeded";
    case Status::Error: return "error";
  }
  return "?";
}

bool CheckReport::passed() const {
  for (const auto& c : checks)
    if (c.status != Status::Pass) return false;
  return true;
}

int CheckReport::count(Status s) const {
  int k = 0;
  for (const auto& c : checks) k += c.status == s;
  return k;
}

namespace {

nlohmann::ordered_json report_json(const CheckReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["suite"] = r.suite;
  j["subject"] = r.subject;
  j["spec"] = r.spec_json.empty() ? ordered_json(nullptr) : ordered_json::parse(r.spec_json);
  j["passed"] = r.passed();
  ordered_json counts;
  for (Status s : {Status::Pass, Status::Fail, Status::Undetermined, Status::CapExceeded, Status::Error})
    counts[to_string(s)] = r.count(s);
  j["counts"] = counts;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json x;
    x["claim"] = c.claim;
    x["anchor"] = c.anchor;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    x["params"] = params;
    x["status"] = to_string(c.status);
    if (c.status != Status::Pass) {
      x["expected"] = c.expected;
      x["actual"] = c.actual;
    }
    if (!c.note.empty()) x["note"] = c.note;
    checks.push_back(x);
  }
  j["checks"] = checks;
  return j;
}

std::string params_text(const CheckResult& c) {
  std::string s;
  for (const auto& [k, v] : c.params) s += (s.empty() ? "" : " ") + k + "=" + v;
  return s;
}

}  // namespace

std::string CheckReport::to_json() const { return report_json(*this).dump(1); }

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " on " << subject << ": " << (passed() ? "PASS" : "FAIL") << " (" << count(Status::Pass)
     << "/" << checks.size() << ")\n";
  // Per-claim tally in order of first appearance.
  std::vector<std::string> order;
  std::map<std::string, std::pair<int, int>> tally;
  std::map<std::string, std::string> anchors;
  for (const auto& c : checks) {
    if (!tally.count(c.claim)) {
      order.push_back(c.claim);
      anchors[c.claim] = c.anchor;
    }
    auto& t = tally[c.claim];
    ++t.first;
    t.second += c.status == Status::Pass;
  }
  for (const auto& cl : order)
    os << "  " << cl << "  " << tally[cl].second << "/" << tally[cl].first << "  [" << anchors[cl] << "]\n";
  for (const auto& c : checks) {
    if (c.status == Status::Pass) continue;
    os << "  " << to_string(c.status) << " " << c.claim << " " << params_text(c) << ": expected " << c.expected
       << ", got " << c.actual;
    if (!c.note.empty()) os << " (" << c.note << ")";
    os << "\n";
  }
  return os.str();
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json j;
  bool all = true;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    all = all && r.passed();
    arr.push_back(report_json(r));
  }
  j["passed"] = all;
  j["reports"] = arr;
  return j.dump(1);
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
  std::string s;
  bool all = true;
  for (const auto& r : reports) {
    s += r.to_text();
    all = all && r.passed();
  }
  s += all ? "all suites passed\n" : "some checks failed\n";
  return s;
}

int effective_cap(const AlgebraSpec& spec, const SuiteOptions& opt) {
  return opt.cap > 0 ? opt.cap : 2 * (spec.d + 1);
}

std::vector<CheckResult> run_items(int n, ExecPolicy policy, const std::function<void(int, CheckResult&)>& item) {
  std::vector<CheckResult> out(static_cast<std::size_t>(n));
  auto one = [&](int i) {
    CheckResult& r = out[static_cast<std::size_t>(i)];
    try {
      item(i, r);
    } catch (const CapExceeded& e) {
      r.status = Status::CapExceeded;
      r.actual = e.what();
    } catch (const std::exception& e) {
      r.status = Status::Error;
      r.actual = e.what();
    }
  };
  if (policy == ExecPolicy::Serial) {
    for (int i = 0; i < n; ++i) one(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) one(i);
  }
  return out;
}

std::optional<std::string> desk_scale_warning(const AlgebraSpec& spec) {
  std::vector<std::string> over;
  int n = spec.has_series() && spec.series.size() > 0 ? spec.series.size() : spec.n;
  if (n > 5) over.push_back("n=" + std::to_string(n));
  if (spec.d > 3) over.push_back("d=" + std::to_string(spec.d));
  if (spec.ell > 4) over.push_back("l=" + std::to_string(spec.ell));
  if (spec.L > 6) over.push_back("L=" + std::to_string(spec.L));
  if (over.empty()) return std::nullopt;
  std::string s = "beyond desk scale (";
  for (std::size_t i = 0; i < over.size(); ++i) s += (i ? ", " : "") + over[i];
  return s + "); computations may be slow";
}

}  // namespace hinak
