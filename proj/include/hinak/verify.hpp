#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hinak/modrep.hpp"
#include "hinak/presentation.hpp"

namespace hinak {

// Undetermined (iso search gave up) and cap/error outcomes all count as
// failures, but keep their own status in reports.
enum class Status { Pass, Fail, Undetermined, CapExceeded, Error };
std::string to_string(Status s);

struct CheckResult {
  std::string claim;   // short id, e.g. "hom-formula"
  std::string anchor;  // the statement being tested, named by content
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::Pass;
  std::string expected, actual;  // filled for every non-pass result
  std::string note;
};

// No timing fields: reports are byte-stable across runs.
struct CheckReport {
  std::string suite;
  std::string subject;  // describe() of the algebra(s) under test
  std::string spec_json;
  std::vector<CheckResult> checks;

  bool passed() const;
  int count(Status s) const;
  std::string to_json() const;
  std::string to_text() const;
};

enum class ExecPolicy { Serial, Parallel };

struct SuiteOptions {
  ExecPolicy policy = ExecPolicy::Parallel;
  int cap = 0;  // resolution cap; 0 means 2(d+1)
};
int effective_cap(const AlgebraSpec& spec, const SuiteOptions& opt);

// Evaluate n independent items; results keep index order. An item fills in
// claim and params before computing, so an exception still leaves a labelled
// Error (or CapExceeded) result.
std::vector<CheckResult> run_items(int n, ExecPolicy policy, const std::function<void(int, CheckResult&)>& item);

CheckReport check_hom_ext_formulas(const AlgebraSpec& spec, const SuiteOptions& opt = {});
CheckReport check_resolutions(const AlgebraSpec& spec, const SuiteOptions& opt = {});
CheckReport check_proj_inj(const AlgebraSpec& spec, const SuiteOptions& opt = {});
CheckReport check_kupisch_lengths(const AlgebraSpec& spec, const SuiteOptions& opt = {});
CheckReport check_cluster_tilting(const AlgebraSpec& spec, const SuiteOptions& opt = {});
CheckReport check_endo_tower(int n, int d, const SuiteOptions& opt = {});
// m = 0 compares Hom. The test set is the interval modules of ct_summands(inner).
CheckReport check_homological_embedding(const AlgebraSpec& inner, const AlgebraSpec& outer, int m,
                                         const SuiteOptions& opt = {});
CheckReport check_selfinjective(const AlgebraSpec& spec, const SuiteOptions& opt = {});
CheckReport check_orbit_periodicity(const AlgebraSpec& spec, const SuiteOptions& opt = {});
// Mesh presentation with d slopes against ZlWindow(ell, a, b, d+1).
CheckReport check_mesh_iso(int d, int ell, int a, int b, const SuiteOptions& opt = {});
CheckReport check_gldim(const AlgebraSpec& spec, const SuiteOptions& opt = {});
CheckReport check_tau(const AlgebraSpec& spec, const SuiteOptions& opt = {});
CheckReport check_ar_formula(const AlgebraSpec& spec, const SuiteOptions& opt = {});

// Suite registry used by the CLI: "all" expands to the applicable suites.
std::vector<std::string> suite_names();
bool suite_applies(const std::string& suite, const AlgebraSpec& spec);
CheckReport run_suite(const std::string& suite, const AlgebraSpec& spec, const SuiteOptions& opt = {});
std::vector<CheckReport> run_suites(const std::string& suite_or_all, const AlgebraSpec& spec,
                                    const SuiteOptions& opt = {});
std::string reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports);

// Warning text when the spec is beyond n <= 5, d <= 3, l <= 4, L <= 6.
std::optional<std::string> desk_scale_warning(const AlgebraSpec& spec);

}  // namespace hinak
