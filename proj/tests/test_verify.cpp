#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "hinak/verify.hpp"

using namespace hinak;

namespace {

SuiteOptions serial() {
  SuiteOptions o;
  o.policy = ExecPolicy::Serial;
  return o;
}

}  // namespace

TEST_CASE("run_items keeps order and labels failures") {
  auto rs = run_items(6, ExecPolicy::Parallel, [](int k, CheckResult& r) {
    r.claim = "item";
    r.params = {{"k", std::to_string(k)}};
    if (k == 2) throw std::runtime_error("boom");
    if (k == 4) throw CapExceeded("too deep");
    if (k == 5) {
      r.status = Status::Fail;
      r.expected = "1";
      r.actual = "0";
    }
  });
  REQUIRE(rs.size() == 6);
  for (int k = 0; k < 6; ++k) CHECK(rs[static_cast<std::size_t>(k)].params[0].second == std::to_string(k));
  CHECK(rs[0].status == Status::Pass);
  CHECK(rs[2].status == Status::Error);
  CHECK(rs[2].claim == "item");
  CHECK(rs[2].actual.find("boom") != std::string::npos);
  CHECK(rs[4].status == Status::CapExceeded);
  CHECK(rs[5].status == Status::Fail);

  CheckReport rep;
  rep.suite = "demo";
  rep.checks = rs;
  CHECK_FALSE(rep.passed());
  CHECK(rep.count(Status::Pass) == 3);
  CHECK(rep.to_text().find("boom") != std::string::npos);
  CHECK(rep.to_json().find("cap-exceeded") != std::string::npos);
}

TEST_CASE("serial and parallel reports agree byte for byte") {
  for (const auto& [suite, spec] :
       std::vector<std::pair<std::string, AlgebraSpec>>{{"hom-ext", AlgebraSpec::linear_an(4, 2)},
                                                        {"tau", AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 2)},
                                                        {"orbit-periodicity", AlgebraSpec::selfinj_atilde(3, 3, 2)}}) {
    auto a = run_suite(suite, spec, serial()).to_json();
    auto b = run_suite(suite, spec).to_json();
    auto c = run_suite(suite, spec).to_json();
    CHECK(a == b);
    CHECK(b == c);
  }
}

TEST_CASE("hom-ext suite on LinearAn(4,2)") {
  auto rep = check_hom_ext_formulas(AlgebraSpec::linear_an(4, 2));
  // 20 summands, one item per ordered pair.
  CHECK(rep.checks.size() == 400);
  CHECK(rep.passed());
  CHECK(rep.to_json().find("\"expected\"") == std::string::npos);
}

TEST_CASE("every applicable suite passes on small algebras") {
  for (const auto& spec :
       {AlgebraSpec::linear_an(2, 1), AlgebraSpec::linear_an(3, 2), AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2}), 2),
        AlgebraSpec::window(1, 3, 2), AlgebraSpec::selfinj_atilde(2, 3, 2), AlgebraSpec::tube_trunc(2, 2, 4)}) {
    for (const auto& rep : run_suites("all", spec)) {
      CAPTURE(spec.describe());
      CAPTURE(rep.suite);
      CHECK_MESSAGE(rep.passed(), rep.to_text());
    }
  }
}

TEST_CASE("cluster tilting along the Kupisch Hasse path") {
  for (const auto& s : kupisch_hasse_path(KupischSeries::linear({1, 2, 2, 3}))) {
    auto rep = check_cluster_tilting(AlgebraSpec::kupisch_a(s, 2));
    CAPTURE(format_tuple(s.lengths));
    CHECK_MESSAGE(rep.passed(), rep.to_text());
  }
}

TEST_CASE("gldim of a point") {
  auto rep = check_gldim(AlgebraSpec::linear_an(1, 3));
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.passed());
}

TEST_CASE("registry") {
  auto names = suite_names();
  CHECK(std::find(names.begin(), names.end(), "hom-ext") != names.end());
  CHECK(suite_applies("endo-tower", AlgebraSpec::linear_an(3, 2)));
  CHECK_FALSE(suite_applies("endo-tower", AlgebraSpec::selfinj_atilde(3, 3, 2)));
  CHECK(suite_applies("selfinjective", AlgebraSpec::selfinj_atilde(3, 3, 2)));
  CHECK_FALSE(suite_applies("selfinjective", AlgebraSpec::linear_an(3, 2)));
  CHECK(suite_applies("mesh-iso", AlgebraSpec::zl_window(3, 0, 6, 2)));
  CHECK_FALSE(suite_applies("mesh-iso", AlgebraSpec::window(0, 3, 2)));
  CHECK(suite_applies("kupisch-lengths", AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 2)));
  CHECK_THROWS_AS(run_suite("no-such-suite", AlgebraSpec::linear_an(2, 1)), std::invalid_argument);
}

TEST_CASE("effective cap and desk scale") {
  CHECK(effective_cap(AlgebraSpec::linear_an(4, 2), {}) == 6);
  SuiteOptions o;
  o.cap = 3;
  CHECK(effective_cap(AlgebraSpec::linear_an(4, 2), o) == 3);
  CHECK_FALSE(desk_scale_warning(AlgebraSpec::linear_an(5, 3)));
  CHECK(desk_scale_warning(AlgebraSpec::linear_an(6, 2)));
  CHECK(desk_scale_warning(AlgebraSpec::linear_an(3, 4)));
  CHECK(desk_scale_warning(AlgebraSpec::tube_trunc(3, 2, 7)));
}

TEST_CASE("json report shape") {
  auto reps = run_suites("gldim", AlgebraSpec::linear_an(3, 2));
  auto j = reports_to_json(reps);
  CHECK(j.find("\"suite\"") != std::string::npos);
  CHECK(j.find("\"pass\"") != std::string::npos);
  CHECK(j.find("time") == std::string::npos);
  CHECK(reports_to_text(reps).find("gldim") != std::string::npos);
}
