#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hinak/modrep.hpp"
#include "hinak/presentation.hpp"
#include "hinak/verify.hpp"

using namespace hinak;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, capped = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyFlags {
  std::string family;
  int n = 0, d = 0, a = 0, b = 0, ell = 0, L = 0;
  std::string series;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--family", f.family, "an|kupisch-a|window|zl-window|selfinj-atilde|atilde-kupisch|tube")
      ->required()
      ->check(CLI::IsMember({"an", "kupisch-a", "window", "zl-window", "selfinj-atilde", "atilde-kupisch", "tube"}));
  cmd->add_option("--n", f.n, "number of vertices / orbit modulus");
  cmd->add_option("--d", f.d, "vertex tuple length")->required();
  cmd->add_option("--series", f.series, "Kupisch series, e.g. 1,2,2,3");
  cmd->add_option("--a", f.a, "window start");
  cmd->add_option("--b", f.b, "window end");
  cmd->add_option("--ell", f.ell, "Loewy bound");
  cmd->add_option("--L", f.L, "tube truncation");
}

AlgebraSpec make_spec(const FamilyFlags& f) {
  auto need = [&](bool have, const char* flag) {
    if (!have) throw UsageError("--family " + f.family + " needs " + flag);
  };
  AlgebraSpec s;
  if (f.family == "an") {
    need(f.n > 0, "--n");
    s = AlgebraSpec::linear_an(f.n, f.d);
  } else if (f.family == "kupisch-a") {
    need(!f.series.empty(), "--series");
    s = AlgebraSpec::kupisch_a(KupischSeries::linear(parse_tuple(f.series)), f.d);
  } else if (f.family == "window") {
    s = AlgebraSpec::window(f.a, f.b, f.d);
  } else if (f.family == "zl-window") {
    need(f.ell > 0, "--ell");
    s = AlgebraSpec::zl_window(f.ell, f.a, f.b, f.d);
  } else if (f.family == "selfinj-atilde") {
    need(f.n > 0 && f.ell > 0, "--n and --ell");
    s = AlgebraSpec::selfinj_atilde(f.n, f.ell, f.d);
  } else if (f.family == "atilde-kupisch") {
    need(!f.series.empty(), "--series");
    s = AlgebraSpec::atilde_kupisch(KupischSeries::cyclic(parse_tuple(f.series)), f.d);
  } else {
    need(f.n > 0 && f.L > 0, "--n and --L");
    s = AlgebraSpec::tube_trunc(f.n, f.d, f.L);
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (auto w = desk_scale_warning(s)) std::cerr << "warning: " << *w << "\n";
  return s;
}

int cap_from_env(const AlgebraSpec& s) {
  if (const char* v = std::getenv("HINAK_CAP")) {
    char* end = nullptr;
    long c = std::strtol(v, &end, 10);
    if (!*v || *end || c < 1 || c > 1000) throw UsageError(std::string("HINAK_CAP must be a positive integer, got ") + v);
    return static_cast<int>(c);
  }
  return 2 * (s.d + 1);
}

OrdSeq parse_summand(const AlgebraSpec& s, const std::string& text) {
  OrdSeq l;
  try {
    l = parse_tuple(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (static_cast<int>(l.size()) != s.d + 1 || !is_ordseq(l) || !s.admits(l))
    throw UsageError(text + " is not a cluster-tilting summand index of " + s.describe());
  return canonical_summand(s, l);
}

// Summand index of a module, "0" for the zero module, or its JSON.
std::string identify(const PresentedAlgebra& alg, const MatrixModule& m) {
  if (m.is_zero()) return "0";
  for (const auto& l : ct_summands(alg.spec())) {
    MatrixModule x = interval_module(alg, l);
    if (x.dims == m.dims && is_isomorphic(alg, m, x) == IsoResult::Isomorphic) return format_tuple(l);
  }
  return module_to_json(alg, m);
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string terms_line(const PresentedAlgebra& alg, const std::vector<int>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " + " : "") + format_tuple(alg.vertex(vs[i]));
  return s.empty() ? "0" : s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"higher Nakayama algebras: construction, homological computations, verification"};
  app.require_subcommand(1);
  FamilyFlags f;
  std::string out, format = "dot", ct_format = "text", presentation = "standard", report = "text", suite = "all";
  std::string mod, from, to, canon;
  int cap = 0, degree = 1, power = 1, modulus = 0;
  bool injective = false, serial = false;

  auto* c_build = app.add_subcommand("build", "write the algebra as JSON");
  add_family_flags(c_build, f);
  c_build->add_option("--out", out, "output file (default stdout)");

  auto* c_quiver = app.add_subcommand("quiver", "export the bound quiver");
  add_family_flags(c_quiver, f);
  c_quiver->add_option("--format", format)->check(CLI::IsMember({"dot", "qpa", "json"}));
  c_quiver->add_option("--presentation", presentation, "standard|mesh (mesh needs zl-window)")
      ->check(CLI::IsMember({"standard", "mesh"}));
  c_quiver->add_option("--out", out);

  auto* c_ct = app.add_subcommand("ct-module", "list the cluster-tilting summands");
  add_family_flags(c_ct, f);
  c_ct->add_option("--format", ct_format)->check(CLI::IsMember({"text", "json"}));

  auto* c_res = app.add_subcommand("resolve", "minimal projective resolution (or injective coresolution)");
  add_family_flags(c_res, f);
  c_res->add_option("--module", mod)->required();
  c_res->add_option("--cap", cap, "number of syzygies to compute");
  c_res->add_flag("--injective", injective, "injective coresolution instead");

  auto* c_ext = app.add_subcommand("ext", "dim Ext^i between summands");
  add_family_flags(c_ext, f);
  c_ext->add_option("--from", from)->required();
  c_ext->add_option("--to", to)->required();
  c_ext->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);

  auto* c_tau = app.add_subcommand("tau", "tau_d^k of a summand (negative k: inverse)");
  add_family_flags(c_tau, f);
  c_tau->add_option("--module", mod)->required();
  c_tau->add_option("--power", power);

  auto* c_hom = app.add_subcommand("hom", "dim Hom between summands");
  add_family_flags(c_hom, f);
  c_hom->add_option("--from", from)->required();
  c_hom->add_option("--to", to)->required();

  auto* c_check = app.add_subcommand("check", "run verification suites");
  add_family_flags(c_check, f);
  c_check->add_option("--suite", suite, "suite name or all");
  c_check->add_option("--report", report)->check(CLI::IsMember({"json", "text"}));
  c_check->add_flag("--serial", serial, "evaluate check items serially");

  auto* c_orbit = app.add_subcommand("orbit", "canonical orbit representative");
  c_orbit->add_option("--canonicalize", canon)->required();
  c_orbit->add_option("--n", modulus)->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (c_orbit->parsed()) {
      auto [rep, shift] = canonical_orbit_rep(parse_tuple(canon), modulus);
      std::cout << format_tuple(rep) << " " << shift << "\n";
      return ok;
    }
    const AlgebraSpec spec = make_spec(f);

    if (c_check->parsed()) {
      SuiteOptions opt;
      opt.policy = serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
      opt.cap = cap_from_env(spec);
      if (suite != "all") {
        auto names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite " + suite);
        if (!suite_applies(suite, spec)) throw UsageError("suite " + suite + " does not apply to " + spec.describe());
      }
      auto reps = run_suites(suite, spec, opt);
      std::cout << (report == "json" ? reports_to_json(reps) + "\n" : reports_to_text(reps));
      bool fail = false, cap_hit = false;
      for (const auto& r : reps)
        for (const auto& c : r.checks) {
          fail = fail || (c.status != Status::Pass && c.status != Status::CapExceeded);
          cap_hit = cap_hit || c.status == Status::CapExceeded;
        }
      return fail ? failed : cap_hit ? capped : ok;
    }

    if (c_quiver->parsed() && presentation == "mesh") {
      if (spec.family != Family::ZlWindow) throw UsageError("--presentation mesh needs --family zl-window");
      PresentedAlgebra m = mesh_presentation(spec.d - 1, spec.ell, spec.a, spec.b);
      write_out(out, format == "dot" ? export_dot(m) : format == "qpa" ? export_qpa(m) : export_json(m) + "\n");
      return ok;
    }

    const PresentedAlgebra alg = build(spec);
    if (c_build->parsed()) {
      write_out(out, export_json(alg) + "\n");
      return ok;
    }
    if (c_quiver->parsed()) {
      write_out(out, format == "dot" ? export_dot(alg) : format == "qpa" ? export_qpa(alg) : export_json(alg) + "\n");
      return ok;
    }
    if (c_ct->parsed()) {
      auto S = ct_summands(spec);
      if (ct_format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& l : S)
          j.push_back({{"lambda", l},
                       {"loewy_length", loewy_len(l)},
                       {"projective", closed_is_projective(spec, l)},
                       {"injective", closed_is_injective(spec, l)}});
        std::cout << j.dump(1) << "\n";
      } else {
        for (const auto& l : S) {
          std::cout << format_tuple(l) << "\t" << loewy_len(l);
          if (closed_is_projective(spec, l)) std::cout << "\tP";
          if (closed_is_injective(spec, l)) std::cout << "\tI";
          std::cout << "\n";
        }
      }
      return ok;
    }
    if (c_res->parsed()) {
      const int k = cap > 0 ? cap : cap_from_env(spec);
      MatrixModule m = interval_module(alg, parse_summand(spec, mod));
      std::vector<std::vector<int>> terms;
      bool complete;
      if (injective) {
        auto co = min_inj_coresolution(alg, m, k);
        terms = co.terms;
        complete = co.complete;
      } else {
        auto res = min_proj_resolution(alg, m, k);
        terms = res.terms;
        complete = res.complete;
      }
      for (std::size_t i = 0; i < terms.size(); ++i)
        std::cout << (injective ? "I" : "P") << i << ": " << terms_line(alg, terms[i]) << "\n";
      if (!complete) {
        std::cerr << "cap " << k << " reached before the " << (injective ? "coresolution" : "resolution") << " ended\n";
        return capped;
      }
      return ok;
    }
    if (c_ext->parsed()) {
      const int k = cap_from_env(spec);
      if (degree > k) throw CapExceeded("degree " + std::to_string(degree) + " above cap " + std::to_string(k));
      std::cout << ext_dim(alg, interval_module(alg, parse_summand(spec, from)), interval_module(alg, parse_summand(spec, to)), degree)
                << "\n";
      return ok;
    }
    if (c_hom->parsed()) {
      std::cout << hom_dim(alg, interval_module(alg, parse_summand(spec, from)), interval_module(alg, parse_summand(spec, to)))
                << "\n";
      return ok;
    }
    if (c_tau->parsed()) {
      MatrixModule m = interval_module(alg, parse_summand(spec, mod));
      for (int i = 0; i < std::abs(power) && !m.is_zero(); ++i)
        m = power > 0 ? tau_d(alg, spec.d, m) : tau_d_inv(alg, spec.d, m);
      std::cout << identify(alg, m) << "\n";
      return ok;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return capped;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  }
  return usage;
}
