// Command-line front door: point evaluation against the oracle and the
// asymptotic assemblies, invariant verification, convergence tables, and the
// fixed-argument limit study.  Output is deterministic CSV or JSON.

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hahn/asymptotics.hpp"
#include "hahn/oracle.hpp"
#include "hahn/verify.hpp"

namespace {

using cplx = std::complex<double>;
using nlohmann::json;

constexpr const char* kHeader = "# hahn-asym v0.1.0 schema=1";
constexpr const char* kColumns =
    "z_re,z_im,n,N,alpha,beta,region,exact_logmag,exact_phase,asym_logmag,asym_phase,rel_error";

// 17 significant digits, lowercase exponent: round-trip exact for doubles
std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

struct Row {
  cplx z;
  long n = 0, N = 0;
  double alpha = 0, beta = 0;
  std::string region;
  double exact_logmag = NAN, exact_phase = NAN;
  double asym_logmag = NAN, asym_phase = NAN;
  double rel_error = NAN;
};

std::string row_csv(const Row& r) {
  std::string s;
  s += fmt17(r.z.real()) + "," + fmt17(r.z.imag()) + ",";
  s += std::to_string(r.n) + "," + std::to_string(r.N) + ",";
  s += fmt17(r.alpha) + "," + fmt17(r.beta) + "," + r.region + ",";
  s += fmt17(r.exact_logmag) + "," + fmt17(r.exact_phase) + ",";
  s += fmt17(r.asym_logmag) + "," + fmt17(r.asym_phase) + "," + fmt17(r.rel_error);
  return s;
}

json row_json(const Row& r) {
  return {{"z_re", r.z.real()},       {"z_im", r.z.imag()},
          {"n", r.n},                 {"N", r.N},
          {"alpha", r.alpha},         {"beta", r.beta},
          {"region", r.region},       {"exact_logmag", r.exact_logmag},
          {"exact_phase", r.exact_phase}, {"asym_logmag", r.asym_logmag},
          {"asym_phase", r.asym_phase},   {"rel_error", r.rel_error}};
}

std::pair<double, double> logmag_phase(const hahn::LogComplex& v) {
  if (v.is_zero()) return {-INFINITY, 0.0};
  return {v.logmag + std::log(std::abs(v.unit)), std::arg(v.unit)};
}

// run tasks 0..count-1 on a pool and keep results indexable (input order)
template <typename F>
void pool_run(long count, int jobs, F&& task) {
  if (jobs <= 1) {
    for (long i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (long i = next++; i < count; i = next++) task(i);
    });
  for (auto& th : pool) th.join();
}

struct CommonConfig {
  double alpha = 0.0, beta = 0.0;
  double c = 0.5;
  std::vector<long> n_list;
  std::vector<std::string> z_specs;
  std::string mode = "both";
  std::string output = "csv";
  long precision_bits = 0;
  int jobs = 1;
  std::string config_file;
  std::optional<long> bigN;  // explicit N for single-degree runs
};

// config file supplies defaults; flags win on conflict (CLI11 reports which
// options the user actually passed)
void merge_config_file(CLI::App* cmd, CommonConfig& cfg) {
  if (cfg.config_file.empty()) return;
  std::ifstream in(cfg.config_file);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + cfg.config_file);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--config", std::string("parse error: ") + e.what());
  }
  auto unseen = [&](const std::string& flag) {
    auto* o = cmd->get_option_no_throw(flag);
    return o != nullptr && o->count() == 0;
  };
  if (j.contains("alpha") && unseen("--alpha")) cfg.alpha = j["alpha"].get<double>();
  if (j.contains("beta") && unseen("--beta")) cfg.beta = j["beta"].get<double>();
  if (j.contains("c") && unseen("--c")) cfg.c = j["c"].get<double>();
  if (j.contains("n_list") && unseen("--n"))
    cfg.n_list = j["n_list"].get<std::vector<long>>();
  if (j.contains("grid") && unseen("--z"))
    cfg.z_specs = j["grid"].get<std::vector<std::string>>();
  if (j.contains("mode") && unseen("--mode")) cfg.mode = j["mode"].get<std::string>();
  if (j.contains("output") && unseen("--output")) cfg.output = j["output"].get<std::string>();
  if (j.contains("precision_bits") && unseen("--precision-bits"))
    cfg.precision_bits = j["precision_bits"].get<long>();
  if (j.contains("jobs") && unseen("--jobs")) cfg.jobs = j["jobs"].get<int>();
  if (j.contains("N") && unseen("--N")) cfg.bigN = j["N"].get<long>();
}

void apply_precision(const CommonConfig& cfg) {
  long bits = cfg.precision_bits;
  if (bits == 0) {
    if (const char* env = std::getenv("HAHN_ASYM_PRECISION_BITS")) bits = std::atol(env);
  }
  if (bits < 0) throw CLI::ValidationError("--precision-bits", "must be positive");
  hahn::precision_override() = bits;
}

cplx parse_z(const std::string& spec) {
  double re = 0, im = 0;
  char trail = 0;
  int got = std::sscanf(spec.c_str(), "%lf,%lf%c", &re, &im, &trail);
  if (got == 2) return {re, im};
  if (std::sscanf(spec.c_str(), "%lf%c", &re, &trail) == 1) return {re, 0.0};
  throw CLI::ValidationError("--z", "malformed point '" + spec + "' (expected re or re,im)");
}

long n_to_N(long n, double c) { return std::lround(static_cast<double>(n) / c); }

void emit(const std::vector<Row>& rows, const std::string& output,
          const std::vector<std::string>& trailer = {}) {
  if (output == "json") {
    json out;
    out["schema"] = 1;
    out["version"] = "0.1.0";
    out["rows"] = json::array();
    for (const auto& r : rows) out["rows"].push_back(row_json(r));
    if (!trailer.empty()) out["summary"] = trailer;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << kHeader << "\n" << kColumns << "\n";
  for (const auto& r : rows) std::cout << row_csv(r) << "\n";
  for (const auto& t : trailer) std::cout << "# " << t << "\n";
}

Row compute_row(const CommonConfig& cfg, cplx z, long n, long N, const std::string& mode) {
  hahn::HahnParams p{cfg.alpha, cfg.beta, N, n};
  Row r;
  r.z = z;
  r.n = n;
  r.N = N;
  r.alpha = cfg.alpha;
  r.beta = cfg.beta;
  hahn::MapBundle bundle = hahn::make_bundle(p);
  r.region = hahn::region_name(hahn::classify(bundle, z).region);
  hahn::LogComplex exact, asym;
  bool have_exact = false, have_asym = false;
  if (mode == "exact" || mode == "both") {
    exact = hahn::eval_monic_exact(p, z, hahn::effective_precision(n));
    std::tie(r.exact_logmag, r.exact_phase) = logmag_phase(exact);
    have_exact = true;
  }
  if (mode == "asym" || mode == "both") {
    asym = hahn::asym_auto(bundle, z).value;
    std::tie(r.asym_logmag, r.asym_phase) = logmag_phase(asym);
    have_asym = true;
  }
  if (have_exact && have_asym) r.rel_error = hahn::relative_error(asym, exact);
  return r;
}

int cmd_eval(const CommonConfig& cfg) {
  if (cfg.n_list.empty()) throw CLI::ValidationError("--n", "at least one degree required");
  if (cfg.z_specs.empty()) throw CLI::ValidationError("--z", "at least one point required");
  if (cfg.mode != "exact" && cfg.mode != "asym" && cfg.mode != "both")
    throw CLI::ValidationError("--mode", "expected exact|asym|both");
  std::vector<cplx> pts;
  for (const auto& s : cfg.z_specs) pts.push_back(parse_z(s));
  std::vector<std::pair<cplx, long>> tasks;
  for (long n : cfg.n_list)
    for (cplx z : pts) tasks.emplace_back(z, n);
  std::vector<Row> rows(tasks.size());
  std::atomic<bool> precision_failed{false};
  pool_run(static_cast<long>(tasks.size()), cfg.jobs, [&](long i) {
    auto [z, n] = tasks[i];
    long N = cfg.bigN ? *cfg.bigN : n_to_N(n, cfg.c);
    try {
      rows[i] = compute_row(cfg, z, n, N, cfg.mode);
    } catch (const hahn::PrecisionFailure&) {
      precision_failed = true;
    }
  });
  if (precision_failed) {
    std::cerr << "error: oracle precision exhausted; raise --precision-bits\n";
    return 3;
  }
  emit(rows, cfg.output);
  return 0;
}

int cmd_convergence(const CommonConfig& cfg) {
  std::vector<long> ns = cfg.n_list.empty() ? std::vector<long>{32, 64, 128, 256} : cfg.n_list;
  if (ns.size() < 3)
    throw CLI::ValidationError("--n", "convergence fit needs at least 3 degrees");
  if (cfg.z_specs.empty()) throw CLI::ValidationError("--z", "at least one point required");
  std::vector<cplx> pts;
  for (const auto& s : cfg.z_specs) pts.push_back(parse_z(s));
  std::vector<std::pair<cplx, long>> tasks;
  for (cplx z : pts)
    for (long n : ns) tasks.emplace_back(z, n);
  std::vector<Row> rows(tasks.size());
  std::vector<char> flagged(tasks.size(), 0);
  pool_run(static_cast<long>(tasks.size()), cfg.jobs, [&](long i) {
    auto [z, n] = tasks[i];
    try {
      rows[i] = compute_row(cfg, z, n, n_to_N(n, cfg.c), "both");
    } catch (const hahn::PrecisionFailure&) {
      rows[i] = Row{};
      rows[i].z = z;
      rows[i].n = n;
      rows[i].N = n_to_N(n, cfg.c);
      rows[i].alpha = cfg.alpha;
      rows[i].beta = cfg.beta;
      rows[i].region = "precision-failure";
      flagged[i] = 1;
    }
  });
  // per-point log-log slope of rel_error vs n, precision failures excluded
  std::vector<std::string> summary;
  for (size_t pi = 0; pi < pts.size(); ++pi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (size_t k = 0; k < ns.size(); ++k) {
      size_t i = pi * ns.size() + k;
      if (flagged[i] || !(rows[i].rel_error > 0.0)) continue;
      double x = std::log(static_cast<double>(rows[i].n));
      double y = std::log(rows[i].rel_error);
      sx += x; sy += y; sxx += x * x; sxy += x * y;
      ++m;
    }
    std::string tag = "slope z=" + fmt17(pts[pi].real()) + "," + fmt17(pts[pi].imag());
    if (m >= 2) {
      double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
      summary.push_back(tag + " slope=" + fmt17(slope) + " points=" + std::to_string(m));
    } else {
      summary.push_back(tag + " slope=nan points=" + std::to_string(m));
    }
  }
  emit(rows, cfg.output, summary);
  return 0;
}

int cmd_fixed_x(const CommonConfig& cfg, const std::vector<double>& xs) {
  std::vector<long> ns = cfg.n_list.empty() ? std::vector<long>{32, 64, 128, 256} : cfg.n_list;
  if (xs.empty()) throw CLI::ValidationError("--x", "at least one point required");
  std::vector<std::pair<double, long>> tasks;
  for (double x : xs)
    for (long n : ns) tasks.emplace_back(x, n);
  std::vector<Row> rows(tasks.size());
  std::atomic<bool> precision_failed{false};
  pool_run(static_cast<long>(tasks.size()), cfg.jobs, [&](long i) {
    auto [x, n] = tasks[i];
    long N = n_to_N(n, cfg.c);
    hahn::HahnParams p{cfg.alpha, cfg.beta, N, n};
    Row r;
    r.z = {x, 0.0};
    r.n = n;
    r.N = N;
    r.alpha = cfg.alpha;
    r.beta = cfg.beta;
    r.region = "fixed";
    try {
      // the limit formulas target the family on N-1 nodes
      hahn::HahnParams shifted = p;
      shifted.bigN = N - 1;
      hahn::BigComplex q = hahn::eval_Q_exact(
          shifted, hahn::BigComplex(x, 0.0, hahn::effective_precision(n).bits),
          hahn::effective_precision(n));
      hahn::LogComplex exact = hahn::LogComplex::from_big(q);
      hahn::LogComplex asym = hahn::asym_fixed_x(p, x);
      std::tie(r.exact_logmag, r.exact_phase) = logmag_phase(exact);
      std::tie(r.asym_logmag, r.asym_phase) = logmag_phase(asym);
      r.rel_error = hahn::relative_error(exact, asym);  // |exact/formula - 1|
      rows[i] = r;
    } catch (const hahn::PrecisionFailure&) {
      precision_failed = true;
    }
  });
  if (precision_failed) {
    std::cerr << "error: oracle precision exhausted; raise --precision-bits\n";
    return 3;
  }
  emit(rows, cfg.output);
  return 0;
}

int cmd_verify(const CommonConfig& cfg, const std::string& filter, bool inject_bug) {
  hahn::VerifyOptions opt;
  opt.filter = filter;
  opt.inject_bug = inject_bug;
  auto results = hahn::run_verification(opt);
  bool all_pass = true;
  if (cfg.output == "json") {
    json out = json::array();
    for (const auto& r : results) {
      out.push_back({{"id", r.id},
                     {"residual", r.residual},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass}});
      all_pass = all_pass && r.pass;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id
                << " residual=" << fmt17(r.residual) << " tol=" << fmt17(r.tolerance) << "\n";
      all_pass = all_pass && r.pass;
    }
  }
  if (results.empty()) {
    std::cerr << "error: filter matched no invariants\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}

void add_common(CLI::App* cmd, CommonConfig& cfg, bool with_grid) {
  cmd->add_option("--alpha", cfg.alpha, "left weight exponent (> -1)");
  cmd->add_option("--beta", cfg.beta, "right weight exponent (> -1)");
  cmd->add_option("--c", cfg.c, "degree ratio n/N in (0,1)");
  cmd->add_option("--n", cfg.n_list, "degree(s)");
  if (with_grid) cmd->add_option("--z", cfg.z_specs, "evaluation point(s), re or re,im");
  cmd->add_option("--N", cfg.bigN, "explicit node count (overrides --c)");
  cmd->add_option("--output", cfg.output, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--precision-bits", cfg.precision_bits,
                  "oracle working precision override (0 = auto)");
  cmd->add_option("--jobs", cfg.jobs, "worker pool size")->check(CLI::PositiveNumber);
  cmd->add_option("--config", cfg.config_file, "JSON config file (flags win on conflict)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hahn-asym: exact and asymptotic evaluation of a discrete orthogonal family"};
  app.require_subcommand(1);

  CommonConfig cfg;
  std::vector<double> xs;
  std::string filter;
  bool inject_bug = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate at points");
  add_common(eval, cfg, true);
  eval->add_option("--mode", cfg.mode, "exact, asym, or both")
      ->check(CLI::IsMember({"exact", "asym", "both"}));

  CLI::App* conv = app.add_subcommand("convergence", "error table and log-log slopes");
  add_common(conv, cfg, true);

  CLI::App* fixed = app.add_subcommand("fixed-x", "fixed-argument limit study");
  add_common(fixed, cfg, false);
  fixed->add_option("--x", xs, "fixed argument(s)");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  add_common(verify, cfg, false);
  verify->add_option("--filter", filter, "substring filter on invariant ids");
  verify->add_flag("--inject-bug", inject_bug,
                   "negative control: flip a cut-side sign (must fail)");

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    merge_config_file(sub, cfg);
    apply_precision(cfg);
    if (sub == eval) return cmd_eval(cfg);
    if (sub == conv) return cmd_convergence(cfg);
    if (sub == fixed) return cmd_fixed_x(cfg, xs);
    return cmd_verify(cfg, filter, inject_bug);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hahn::PrecisionFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
