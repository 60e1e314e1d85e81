#include "ikeda/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <set>

#include "ikeda/arith.hpp"
#include "ikeda/error.hpp"
#include "ikeda/fixtures.hpp"
#include "ikeda/kohnen.hpp"
#include "ikeda/lift.hpp"
#include "ikeda/theta.hpp"
#include "ikeda/verify.hpp"

namespace ikeda {
namespace {

using Json = nlohmann::ordered_json;

const std::vector<unsigned> kAllKappa = {6, 8, 9, 10, 11, 13};

struct JobConfig {
  unsigned kappa = 0;
  unsigned degree = 2;
  long maxDet = 0;
  long maxTrace = 0;
  long limit = 500;
  int samples = 50;
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::string fixtures;
  bool recheck = false;
};

unsigned half_degree(unsigned degree) {
  if (degree == 0 || degree % 2 != 0)
    throw ConfigError("--degree must be even and positive, got " + std::to_string(degree));
  return degree / 2;
}

std::filesystem::path fixture_dir(const JobConfig& cfg) {
  return cfg.fixtures.empty() ? FixtureStore::default_dir() : std::filesystem::path(cfg.fixtures);
}

std::vector<HalfIntegralMatrix> forms_for(const JobConfig& cfg) {
  const unsigned m = cfg.degree;
  if (m == 2) {
    if (cfg.maxTrace > 0 && cfg.maxDet == 0) return enumerate_by_trace(2, cfg.maxTrace);
    return enumerate_binary(cfg.maxDet > 0 ? cfg.maxDet : 50);
  }
  if (m == 4) return enumerate_by_trace(4, cfg.maxTrace > 0 ? cfg.maxTrace : 8);
  throw ConfigError("form enumeration supports degree 2 and 4, got " + std::to_string(m));
}

LiftJob job_for(unsigned kappa, unsigned n, const std::vector<HalfIntegralMatrix>& forms) {
  long maxDet = 4;
  for (const auto& T : forms) maxDet = std::max(maxDet, T.det_two_t().get_si());
  return make_job(kappa, n, maxDet, maxDet);
}

Json report_json(const Report& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(
        {{"subject", f.subject}, {"expected", f.expected}, {"actual", f.actual}, {"reason", f.reason}});
  return {{"suite", r.suite}, {"cases", r.cases}, {"failures", failures}};
}

Json coeff_json(const LiftCoefficient& c) {
  Json local = Json::object();
  for (const auto& [p, g] : c.localFactors) local[std::to_string(p)] = to_string(g);
  return {{"gram", c.T.to_string()}, {"det2T", c.det2T}, {"D", c.D},     {"d", c.d},
          {"f", c.f},                {"c_arg", c.cArg},  {"local", local}, {"a", to_string(c.value)}};
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

int cmd_lift(const JobConfig& cfg, std::ostream& out) {
  if (cfg.kappa == 0) throw ConfigError("--kappa is required");
  const unsigned n = half_degree(cfg.degree);
  if ((cfg.kappa + n) % 2 != 0)
    throw ConfigError("kappa + n must be even (kappa=" + std::to_string(cfg.kappa) +
                      ", n=" + std::to_string(n) + ")");
  auto forms = forms_for(cfg);
  LiftJob job = job_for(cfg.kappa, n, forms);
  auto table = fourier_table(job, forms, cfg.jobs);
  if (cfg.format == "csv") {
    out << "gram,det2T,D,d,f,c_arg,a\n";
    for (const auto& c : table)
      out << csv_quote(c.T.to_string()) << ',' << c.det2T << ',' << c.D << ',' << c.d << ','
          << c.f << ',' << c.cArg << ',' << to_string(c.value) << '\n';
  } else {
    Json records = Json::array();
    for (const auto& c : table) records.push_back(coeff_json(c));
    Json doc = {{"kappa", cfg.kappa},
                {"n", n},
                {"weight", cfg.kappa + n},
                {"normalization", job.h.normalization()},
                {"records", records}};
    out << doc.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const JobConfig& cfg, std::ostream& out) {
  static const std::set<std::string> kSuites = {"shimura", "maass", "schottky",
                                                "funceq",  "oracle", "invariance"};
  if (!kSuites.count(suite)) throw ConfigError("unknown suite '" + suite + "'");
  Json doc;
  bool ok = true;
  if (suite == "shimura") {
    Report all{"shimura", 0, {}};
    std::vector<unsigned> kappas = cfg.kappa ? std::vector<unsigned>{cfg.kappa} : kAllKappa;
    for (unsigned k : kappas) {
      // kappa + n even forces the sign (-1)^n = (-1)^kappa.
      const unsigned n = k % 2 ? 1 : 2;
      PlusSpaceForm h = plus_space_eigenform(k, n, cfg.limit);
      all.merge(shimura_consistency(h, eigenform(2 * k), cfg.limit));
    }
    doc = report_json(all);
    ok = all.ok();
  } else if (suite == "maass") {
    const long bound = cfg.maxDet > 0 ? cfg.maxDet : 200;
    LiftJob job = make_job(cfg.kappa ? cfg.kappa : 9, 1, bound, bound);
    Report r = maass_check(job, bound);
    doc = report_json(r);
    ok = r.ok();
  } else if (suite == "funceq") {
    Report r = funceq_check(forms_for(cfg));
    doc = report_json(r);
    ok = r.ok();
  } else if (suite == "oracle") {
    FixtureStore store(fixture_dir(cfg));
    auto cases = cfg.degree == 4 ? quaternary_oracle_cases()
                                 : binary_oracle_cases(cfg.maxDet > 0 ? cfg.maxDet : 120,
                                                       {2, 3, 5}, 16);
    Report r = oracle_check(cases, store, cfg.recheck);
    if (cfg.degree == 4) store.save();
    doc = report_json(r);
    ok = r.ok();
  } else if (suite == "invariance") {
    if (cfg.kappa == 0) throw ConfigError("--kappa is required");
    auto forms = forms_for(cfg);
    LiftJob job = job_for(cfg.kappa, half_degree(cfg.degree), forms);
    Report r = invariance_check(job, forms, cfg.samples, cfg.seed);
    doc = report_json(r);
    ok = r.ok();
  } else {
    JobConfig c = cfg;
    c.degree = 4;
    auto forms = forms_for(c);
    LiftJob job = job_for(6, 2, forms);
    FixtureStore store(fixture_dir(cfg));
    SchottkyResult res = schottky_check(job, forms, &store, cfg.recheck);
    store.save();
    if (!res.ratio || res.bothNonzero < 1)
      res.report.failures.push_back({"ratio", "", "", "no form with both values nonzero"});
    doc = report_json(res.report);
    doc["ratio"] = res.ratio ? to_string(*res.ratio) : "";
    doc["both_nonzero"] = res.bothNonzero;
    ok = res.report.ok();
  }
  out << doc.dump(2) << '\n';
  return ok ? kExitOk : kExitConsistency;
}

int cmd_kohnen(unsigned kappa, int sign, long limit, const std::string& format, std::ostream& out) {
  if (kappa == 0) throw ConfigError("--kappa is required");
  if (sign != 1 && sign != -1) throw ConfigError("--sign must be 1 or -1");
  if (limit < 1) throw ConfigError("--limit must be positive");
  const unsigned n = sign == -1 ? 1 : 2;
  if ((kappa + n) % 2 != 0)
    throw ConfigError("sign " + std::to_string(sign) + " is incompatible with kappa=" +
                      std::to_string(kappa) + " (kappa + n must be even)");
  PlusSpaceForm h = plus_space_eigenform(kappa, n, limit);
  if (format == "csv") {
    out << "t,c\n";
    for (long t = 1; t <= limit; ++t)
      if (h.in_support(t)) out << t << ',' << to_string(h.coeff(t)) << '\n';
    return kExitOk;
  }
  Json coeffs = Json::array();
  for (long t = 1; t <= limit; ++t)
    if (h.in_support(t)) coeffs.push_back({{"t", t}, {"c", to_string(h.coeff(t))}});
  Json doc = {{"kappa", kappa},
              {"sign", sign},
              {"normalization", h.normalization()},
              {"coeffs", coeffs}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_siegel(long p, const std::string& gram, bool oracle, std::ostream& out) {
  if (!is_prime(p)) throw ConfigError("-p must be prime, got " + std::to_string(p));
  HalfIntegralMatrix T = parse_gram(gram);
  SiegelOptions opt;
  opt.oracle = oracle;
  SiegelPoly F = siegel_poly(T, p, opt);
  Json coeffs = Json::array();
  // Exact integers; emitted as JSON numbers when they fit in 64 bits.
  for (const auto& b : F.coeffs) {
    if (b.fits_slong_p())
      coeffs.push_back(b.get_si());
    else
      coeffs.push_back(b.get_str());
  }
  Json doc = {{"p", p},
              {"gram", T.to_string()},
              {"coeffs", coeffs},
              {"degree", F.degree()},
              {"oracle_checked", F.oracleChecked}};
  out << doc.dump() << '\n';
  return kExitOk;
}

int cmd_theta(const std::string& lattice, const std::string& gram, long norm, std::ostream& out) {
  const EvenLattice& L = EvenLattice::by_name(lattice);
  if (gram.empty() && norm < 0) throw ConfigError("theta needs --gram or --norm");
  Json doc = {{"lattice", L.name()}};
  if (!gram.empty()) {
    HalfIntegralMatrix T = parse_gram(gram);
    doc["gram"] = T.to_string();
    doc["count"] = theta_coefficient(L, T).get_str();
  } else {
    if (norm < 0 || norm % 2 != 0) throw ConfigError("--norm must be even and non-negative");
    HalfIntegralMatrix T = parse_gram(std::to_string(norm));
    doc["norm"] = norm;
    doc["count"] = norm == 0 ? "1" : theta_coefficient(L, T).get_str();
  }
  out << doc.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fourier coefficients of Ikeda lifts"};
  app.require_subcommand(1);

  JobConfig cfg;
  auto add_job_flags = [&cfg](CLI::App* sub) {
    sub->add_option("--kappa", cfg.kappa, "kappa (h has weight kappa + 1/2)");
    sub->add_option("--degree", cfg.degree, "Siegel degree 2n");
    sub->add_option("--max-det", cfg.maxDet, "bound on det(2T) for binary forms");
    sub->add_option("--max-trace", cfg.maxTrace, "bound on tr(2T)");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--seed", cfg.seed);
    sub->add_option("--fixtures", cfg.fixtures, "fixture directory");
    sub->add_flag("--recheck", cfg.recheck, "ignore stored fixtures");
  };

  auto* lift = app.add_subcommand("lift", "tabulate a(T)");
  add_job_flags(lift);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required();
  add_job_flags(verify);
  verify->add_option("--limit", cfg.limit, "shimura: largest t");
  verify->add_option("--samples", cfg.samples, "invariance: matrices per form");

  int sign = 0;
  auto* kohnen = app.add_subcommand("kohnen", "plus-space coefficients c(t)");
  kohnen->add_option("--kappa", cfg.kappa)->required();
  kohnen->add_option("--sign", sign)->required();
  kohnen->add_option("--limit", cfg.limit);
  kohnen->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));

  long p = 0;
  std::string gram;
  bool oracle = false;
  auto* siegel = app.add_subcommand("siegel", "Siegel series polynomial F_p(T, X)");
  siegel->add_option("-p", p)->required();
  siegel->add_option("--gram", gram, "2T as \"a,b;b,c\"")->required();
  siegel->add_flag("--oracle", oracle, "check against the density oracle");

  std::string lattice;
  long norm = -1;
  auto* theta = app.add_subcommand("theta", "representation counts by E8+E8 or D16+");
  theta->add_option("--lattice", lattice)->required();
  auto* gramOpt = theta->add_option("--gram", gram);
  auto* normOpt = theta->add_option("--norm", norm);
  gramOpt->excludes(normOpt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*lift) return cmd_lift(cfg, out);
    if (*verify) return cmd_verify(suite, cfg, out);
    if (*kohnen) return cmd_kohnen(cfg.kappa, sign, cfg.limit, cfg.format, out);
    if (*siegel) return cmd_siegel(p, gram, oracle, out);
    if (*theta) return cmd_theta(lattice, gram, norm, out);
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace ikeda
