// turan: constructions, evaluation, certification and sweeps from the shell.
//
// Exit codes: 0 all certified inequalities hold, 1 one failed, 2 bad input.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "turan.hpp"

using nlohmann::json;
using namespace turan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string kind;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  double alpha = 0.0;
  std::uint64_t nu_max = 0;
  std::uint64_t trials = 1000;
  unsigned N = 3;
  std::uint64_t seed = 1;
  std::string strategy = "auto";
  std::string method = "fft";
  std::vector<std::string> methods{"theorem1"};
  std::uint64_t n_lo = 2;
  std::uint64_t n_hi = 100;
  std::uint64_t pmax = 97;
  unsigned retries = kDefaultErdosRenyiRetries;
  unsigned threads = 1;
  std::string tuple;
  std::string output;
  std::string format = "human";
  bool deterministic = false;

  bool operator==(const RunConfig&) const = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(RunConfig, command, kind, n, m, p, q, alpha, nu_max, trials, N, seed,
                                                strategy, method, methods, n_lo, n_hi, pmax, retries, threads, tuple,
                                                output, format, deterministic)

EvalConfig eval_config() {
  EvalConfig cfg;
  if (const char* env = std::getenv("TURAN_FFT_MAX_LENGTH")) {
    try {
      cfg.max_fft_length = std::stoull(env);
    } catch (const std::exception&) {
      throw usage_error(std::string("TURAN_FFT_MAX_LENGTH is not a number: ") + env);
    }
  }
  return cfg;
}

SearchConfig search_config(const RunConfig& rc) {
  SearchConfig s;
  s.strategy = strategy_from_string(rc.strategy);
  s.trials = rc.trials;
  s.seed = rc.seed;
  s.N = rc.N;
  s.threads = rc.threads;
  s.eval = eval_config();
  return s;
}

std::string human(double x) { return format_number(x, kHumanDigits); }

// Report sink: --output file or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw usage_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

json read_json_file(const std::string& path) {
  if (path.empty()) throw usage_error("--tuple is required");
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open tuple file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw usage_error("malformed JSON in " + path + ": " + e.what());
  }
}

// Either representation, by "kind".
struct AnyTuple {
  std::optional<RootTuple> root;
  std::optional<FloatTuple> flt;
  std::size_t size() const { return root ? root->size() : flt->size(); }
};

AnyTuple load_tuple(const std::string& path) {
  const auto j = read_json_file(path);
  AnyTuple t;
  try {
    const auto kind = j.value("kind", std::string{});
    if (kind == "root") {
      t.root = j.get<RootTuple>();
    } else if (kind == "float") {
      t.flt = j.get<FloatTuple>();
    } else {
      throw usage_error("tuple file " + path + ": kind must be \"root\" or \"float\"");
    }
  } catch (const json::exception& e) {
    throw usage_error("tuple file " + path + ": " + e.what());
  }
  if (t.size() == 0) throw usage_error("tuple file " + path + " holds an empty tuple");
  return t;
}

json with_config(json body, const RunConfig& rc) {
  body["config"] = rc;
  body["seed"] = rc.seed;
  return body;
}

void print_certificate_human(std::ostream& os, const Certificate& cert) {
  os << "tuple " << cert.tuple_digest << "  tolerance " << cert.tolerance << '\n';
  os << std::left << std::setw(14) << "check" << std::setw(20) << "nu range" << std::setw(14) << "bound"
     << std::setw(14) << "achieved"
     << "result\n";
  for (const auto& c : cert.checks) {
    os << std::left << std::setw(14) << c.name << std::setw(20)
       << ("1.." + std::to_string(c.nu_hi)) << std::setw(14) << human(c.bound) << std::setw(14) << human(c.achieved)
       << (c.pass ? "pass" : "FAIL");
    if (!c.note.empty()) os << "  (" << c.note << ')';
    os << '\n';
  }
  os << (cert.passed() ? "all checks pass\n" : "some checks FAILED\n");
}

void print_record_human(std::ostream& os, const DeltaRecord& r) {
  os << "n " << r.n << "  method " << r.method << "  p " << r.p << "  gap " << r.gap << '\n'
     << "subset score  " << human(r.subset_score) << (r.strategy.empty() ? "" : "  (" + r.strategy + ")") << '\n'
     << "achieved max  " << human(r.achieved_max) << " over nu <= " << r.nu_cert << " (at nu = " << r.argmax_nu
     << ")\n"
     << "delta_hat     " << human(r.delta_hat) << '\n'
     << "bound         " << human(r.construction_bound) << " [" << r.bound_label << "] + subset score = "
     << human(r.construction_bound + r.subset_score) << '\n';
}

// ---------------------------------------------------------------------------
// commands

int cmd_construct(const RunConfig& rc) {
  RootTuple root;
  std::optional<ErdosRenyiResult> er;
  if (rc.kind == "montgomery") {
    if (rc.p == 0) throw usage_error("construct montgomery needs --p");
    root = montgomery(rc.p);
  } else if (rc.kind == "montmod") {
    if (rc.n == 0 || rc.m == 0) throw usage_error("construct montmod needs --n and --m");
    root = montgomery_modified(rc.n, rc.m);
  } else if (rc.kind == "bose") {
    if (rc.q == 0) throw usage_error("construct bose needs --q");
    root = bose_tuple(rc.q);
  } else if (rc.kind == "singer") {
    if (rc.q == 0) throw usage_error("construct singer needs --q");
    root = singer_tuple(rc.q);
  } else if (rc.kind == "erdos-renyi") {
    if (rc.n == 0 || rc.m == 0) throw usage_error("construct erdos-renyi needs --n and --m");
    try {
      er = erdos_renyi_random(rc.n, rc.m, rc.seed, rc.retries);
    } catch (const erdos_renyi_failure& f) {
      std::cerr << f.what() << "; seed " << rc.seed << '\n';
      Output out(rc.output);
      out.stream() << json(f.best().tuple).dump() << '\n';
      return kExitFailed;
    }
  } else {
    throw usage_error("--kind must be one of montgomery, montmod, bose, singer, erdos-renyi");
  }

  const json tuple_json = er ? json(er->tuple) : json(root);
  std::ostringstream summary;
  if (er) {
    summary << "erdos-renyi n " << er->tuple.size() << "  seed " << er->seed << "  bound " << human(er->bound)
            << "  max " << human(er->max_abs) << "  attempts " << er->attempts;
  } else {
    summary << root.provenance.kind << " n " << root.size() << "  M " << root.order;
  }
  if (rc.output.empty()) {
    std::cout << tuple_json.dump() << '\n';
    std::cerr << summary.str() << '\n';
  } else {
    Output out(rc.output);
    out.stream() << tuple_json.dump() << '\n';
    std::cout << summary.str() << '\n';
  }
  return kExitOk;
}

int cmd_evaluate(const RunConfig& rc) {
  if (rc.nu_max < 1) throw usage_error("--nu-max must be >= 1");
  if (rc.method != "fft" && rc.method != "direct" && rc.method != "both")
    throw usage_error("--method must be fft, direct or both");
  const auto t = load_tuple(rc.tuple);
  const auto cfg = eval_config();

  PowerSumProfile prof;
  std::optional<double> discrepancy;
  std::uint64_t M = 0;
  if (t.root) {
    M = t.root->order;
    if (rc.method == "direct") {
      prof = power_sums_direct(*t.root, 1, rc.nu_max);
    } else {
      prof = power_sums_fft(*t.root, rc.nu_max, cfg);
    }
    if (rc.method == "both") {
      const auto d = power_sums_direct(*t.root, 1, rc.nu_max);
      double worst = 0.0;
      for (std::size_t i = 0; i < d.abs.size(); ++i) worst = std::max(worst, std::abs(d.abs[i] - prof.abs[i]));
      discrepancy = worst;
    }
  } else {
    if (rc.method != "direct") std::cerr << "float tuple: evaluating directly\n";
    prof = power_sums_direct(*t.flt, 1, rc.nu_max);
  }

  auto summary = profile_summary(prof, t.size(), M);
  if (discrepancy) summary["discrepancy"] = *discrepancy;
  summary["method"] = t.root ? rc.method : "direct";
  const bool inconsistent = discrepancy && *discrepancy > kBoundTolerance;

  Output out(rc.output);
  auto& os = out.stream();
  if (rc.format == "csv") {
    write_profile_csv(os, prof, true);
  } else if (rc.format == "json") {
    os << with_config(summary, rc).dump(2) << '\n';
  } else {
    os << "n " << t.size() << "  M " << M << "  nu 1.." << rc.nu_max << '\n'
       << "max |S(nu)| " << human(prof.max_abs) << " at nu = " << prof.argmax_nu << '\n';
    if (discrepancy) os << "fft/direct discrepancy " << human(*discrepancy) << '\n';
  }
  if (inconsistent) std::cerr << "fft and direct evaluations disagree by " << *discrepancy << '\n';
  return inconsistent ? kExitFailed : kExitOk;
}

template <class Tuple>
Certificate certify_tuple(const Tuple& t) {
  try {
    return full_certificate(t, eval_config());
  } catch (const precondition_error& e) {
    throw usage_error(std::string("rejected: ") + e.what());
  }
}

int cmd_certify(const RunConfig& rc) {
  const auto t = load_tuple(rc.tuple);
  const auto cert = t.root ? certify_tuple(*t.root) : certify_tuple(*t.flt);
  Output out(rc.output);
  if (rc.format == "json") {
    out.stream() << with_config(json(cert), rc).dump(2) << '\n';
  } else {
    print_certificate_human(out.stream(), cert);
  }
  return cert.passed() ? kExitOk : kExitFailed;
}

// Shared tail of the pipeline commands: certify, check the triangle ledger,
// report, optionally write the tuple. delta_hat >= 0 is only enforced when the
// target is sqrt(n) over nu <= n^2, where it is a proven lower bound.
int report_pipeline(const RunConfig& rc, const PipelineResult& res, double ledger_bound, const std::string& tuple_out,
                    bool check_delta = true) {
  const auto cert = full_certificate(res.tuple, eval_config());
  const auto& r = res.record;
  const bool ledger_ok = r.achieved_max <= ledger_bound + kBoundTolerance;
  const bool delta_ok = !check_delta || r.delta_hat >= -kBoundTolerance;
  const bool ok = cert.passed() && ledger_ok && delta_ok;

  Output out(rc.output);
  auto& os = out.stream();
  if (rc.format == "json") {
    json body{{"record", record_json(r, rc.deterministic)},
              {"certificate", cert},
              {"ledger", {{"bound", ledger_bound}, {"pass", ledger_ok}}},
              {"pass", ok}};
    if (res.selection) body["selection"] = *res.selection;
    os << with_config(body, rc).dump(2) << '\n';
  } else if (rc.format == "csv") {
    write_sweep_csv(os, {r}, rc.deterministic);
  } else {
    print_record_human(os, r);
    os << "triangle ledger " << (ledger_ok ? "pass" : "FAIL") << '\n';
    print_certificate_human(os, cert);
  }
  if (!tuple_out.empty()) {
    std::ofstream f(tuple_out);
    if (!f) throw usage_error("cannot open " + tuple_out);
    f << json(res.tuple).dump() << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_theorem1(const RunConfig& rc, const std::string& tuple_out) {
  if (rc.n < 2) throw usage_error("theorem1 needs --n >= 2");
  const auto res = theorem1_tuple(rc.n, search_config(rc));
  return report_pipeline(rc, res, res.record.construction_bound + res.record.subset_score, tuple_out);
}

int cmd_theorem2(const RunConfig& rc, const std::string& tuple_out) {
  if (rc.n < 2 || rc.m < 1) throw usage_error("theorem2 needs --n >= 2 and --m >= 1");
  const auto res = theorem2_tuple(rc.n, rc.m, search_config(rc));
  return report_pipeline(rc, res, res.record.construction_bound + res.record.subset_score, tuple_out, false);
}

int cmd_trim(const RunConfig& rc, const std::string& tuple_out) {
  if (rc.n < 2) throw usage_error("trim needs --n >= 2");
  const auto res = trim_tuple(rc.n, eval_config());
  return report_pipeline(rc, res, res.record.construction_bound + res.record.subset_score, tuple_out);
}

int cmd_sweep(const RunConfig& rc) {
  SweepConfig cfg;
  cfg.n_lo = rc.n_lo;
  cfg.n_hi = rc.n_hi;
  cfg.methods = rc.methods;
  cfg.seed = rc.seed;
  cfg.threads = rc.threads;
  cfg.montmod_m = rc.m ? rc.m : 2;
  cfg.search = search_config(rc);
  const auto res = delta_sweep(cfg);

  bool ok = true;
  for (const auto& r : res.records) {
    if (r.delta_hat < -kBoundTolerance) ok = false;
    if (r.achieved_max > r.construction_bound + r.subset_score + kBoundTolerance) ok = false;
  }
  Output out(rc.output);
  auto& os = out.stream();
  if (rc.format == "csv") {
    write_sweep_csv(os, res.records, rc.deterministic);
  } else if (rc.format == "json") {
    json recs = json::array();
    for (const auto& r : res.records) recs.push_back(record_json(r, rc.deterministic));
    os << with_config({{"records", recs}, {"aggregates", aggregates_json(res.aggregates)}, {"pass", ok}}, rc).dump(2)
       << '\n';
  } else {
    os << std::left << std::setw(6) << "n" << std::setw(18) << "method" << std::setw(7) << "p" << std::setw(5)
       << "gap" << std::setw(14) << "subset" << std::setw(14) << "achieved" << "delta_hat\n";
    for (const auto& r : res.records)
      os << std::left << std::setw(6) << r.n << std::setw(18) << r.method << std::setw(7) << r.p << std::setw(5)
         << r.gap << std::setw(14) << human(r.subset_score) << std::setw(14) << human(r.achieved_max)
         << human(r.delta_hat) << '\n';
    const auto& a = res.aggregates;
    os << "sum delta_hat^2 " << human(a.sum_delta_sq) << "  max " << human(a.max_delta) << " (n = " << a.argmax_n
       << ")  count > n^(1/4) " << a.count_exceed_n14 << "  slope "
       << (a.slope_fit ? human(*a.slope_fit) : std::string("n/a")) << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_gauss_check(const RunConfig& rc) {
  if (rc.pmax < 3) throw usage_error("--pmax must be >= 3");
  std::uint64_t cases = 0;
  std::vector<json> failures;
  for (auto p : sieve_primes(rc.pmax)) {
    if (p == 2) continue;
    const CharacterTable chi(p);
    const double tol = 1e-9 * std::sqrt(static_cast<double>(p));
    for (std::uint64_t j = 0; j + 1 < p; ++j) {
      for (std::int64_t a = 0; a <= static_cast<std::int64_t>(2 * p); ++a) {
        ++cases;
        const double got = gauss_sum_magnitude(chi, j, a);
        const double want = gauss_sum_case_value(p, j, a);
        if (std::abs(got - want) > tol)
          failures.push_back({{"p", p}, {"j", j}, {"a", a}, {"computed", got}, {"expected", want}});
      }
    }
  }
  Output out(rc.output);
  auto& os = out.stream();
  if (rc.format == "json") {
    os << with_config({{"pmax", rc.pmax}, {"cases", cases}, {"failures", failures}, {"pass", failures.empty()}}, rc)
              .dump(2)
       << '\n';
  } else if (failures.empty()) {
    os << "all (p,j,a) cases match the case table (" << cases << " cases, p <= " << rc.pmax << ")\n";
  } else {
    os << failures.size() << " of " << cases << " cases deviate from the case table\n";
    for (const auto& f : failures) os << "  " << f.dump() << '\n';
  }
  return failures.empty() ? kExitOk : kExitFailed;
}

int cmd_bounds(const RunConfig& rc) {
  const auto A = envelope_A(rc.alpha);
  const auto B = envelope_B(rc.alpha);
  json body{{"alpha", rc.alpha}, {"A", {A.lower, A.upper}}, {"B", {B.lower, B.upper}}};
  if (rc.n >= 1 && rc.m >= 1) {
    body["erdos_renyi"] = erdos_renyi_bound(rc.n, rc.m);
    if (rc.m >= rc.n) body["ncs"] = ncs_lower_bound(rc.n, rc.m);
  }
  Output out(rc.output);
  auto& os = out.stream();
  if (rc.format == "json") {
    os << with_config(body, rc).dump(2) << '\n';
  } else {
    os << "alpha " << human(rc.alpha) << '\n'
       << "A: (" << human(A.lower) << ", " << human(A.upper) << ")\n"
       << "B: (" << human(B.lower) << ", " << human(B.upper) << ")\n";
    if (body.contains("erdos_renyi")) os << "erdos-renyi bound " << human(body["erdos_renyi"].get<double>()) << '\n';
    if (body.contains("ncs")) os << "ncs lower bound " << human(body["ncs"].get<double>()) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// option wiring

// Options bound to a scratch RunConfig; after parsing, the ones actually given
// override the --config file (or the defaults).
class Binder {
 public:
  explicit Binder(RunConfig& flags) : flags_(flags) {}

  template <class T>
  CLI::Option* add(CLI::App* app, const std::string& name, T RunConfig::*field, const std::string& help) {
    auto* opt = app->add_option(name, flags_.*field, help);
    overrides_.push_back({opt, [field](RunConfig& dst, const RunConfig& src) { dst.*field = src.*field; }});
    return opt;
  }

  void flag(CLI::App* app, const std::string& name, bool RunConfig::*field, const std::string& help) {
    auto* opt = app->add_flag(name, flags_.*field, help);
    overrides_.push_back({opt, [field](RunConfig& dst, const RunConfig& src) { dst.*field = src.*field; }});
  }

  void apply(RunConfig& dst) const {
    for (const auto& [opt, copy] : overrides_)
      if (opt->count() > 0) copy(dst, flags_);
  }

 private:
  RunConfig& flags_;
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&, const RunConfig&)>>> overrides_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal power-sum tuples: construct, evaluate, certify, sweep"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "turan 1.0.0");

  RunConfig flags;
  Binder bind(flags);
  std::string config_path;
  std::string tuple_out;
  std::string echo_config;

  auto common = [&](CLI::App* sub) {
    bind.add(sub, "--format", &RunConfig::format, "json, csv or human");
    bind.add(sub, "-o,--output", &RunConfig::output, "Write the report here instead of stdout");
    bind.add(sub, "--seed", &RunConfig::seed, "Master seed (echoed in JSON output)");
    bind.add(sub, "--threads", &RunConfig::threads, "Worker threads");
    bind.flag(sub, "--deterministic", &RunConfig::deterministic, "Print wall-clock fields as 0");
    sub->add_option("--config", config_path, "Load a RunConfig JSON; explicit flags override it")
        ->check(CLI::ExistingFile);
    sub->add_option("--echo-config", echo_config, "Write the effective RunConfig JSON to this file");
  };
  auto search = [&](CLI::App* sub) {
    bind.add(sub, "--strategy", &RunConfig::strategy, "auto, exhaustive, random or greedy");
    bind.add(sub, "--trials", &RunConfig::trials, "Random restarts");
    bind.add(sub, "--N", &RunConfig::N, "Moment order for the greedy surrogate");
    sub->add_option("--tuple-out", tuple_out, "Write the resulting tuple JSON here");
  };

  auto* construct = app.add_subcommand("construct", "Build a tuple and write its JSON");
  bind.add(construct, "--kind", &RunConfig::kind, "montgomery, montmod, bose, singer or erdos-renyi");
  bind.add(construct, "--p", &RunConfig::p, "Prime for montgomery");
  bind.add(construct, "--q", &RunConfig::q, "Prime power for bose/singer");
  bind.add(construct, "--n", &RunConfig::n, "Tuple size (montmod, erdos-renyi)");
  bind.add(construct, "--m", &RunConfig::m, "Power (montmod) or nu range (erdos-renyi)");
  bind.add(construct, "--retries", &RunConfig::retries, "Erdos-Renyi resampling budget");
  common(construct);

  auto* evaluate = app.add_subcommand("evaluate", "Power-sum profile of a tuple file");
  bind.add(evaluate, "--tuple", &RunConfig::tuple, "Tuple JSON file");
  bind.add(evaluate, "--nu-max", &RunConfig::nu_max, "Evaluate nu = 1..nu_max");
  bind.add(evaluate, "--method", &RunConfig::method, "fft, direct or both");
  common(evaluate);

  auto* certify = app.add_subcommand("certify", "Run all applicable bound checks on a tuple file");
  bind.add(certify, "--tuple", &RunConfig::tuple, "Tuple JSON file");
  common(certify);

  auto* theorem1 = app.add_subcommand("theorem1", "Prime jump plus flat-subset removal");
  bind.add(theorem1, "--n", &RunConfig::n, "Tuple size");
  search(theorem1);
  common(theorem1);

  auto* theorem2 = app.add_subcommand("theorem2", "Progression-prime variant over nu <= m n^2");
  bind.add(theorem2, "--n", &RunConfig::n, "Tuple size");
  bind.add(theorem2, "--m", &RunConfig::m, "Range multiplier");
  search(theorem2);
  common(theorem2);

  auto* trim = app.add_subcommand("trim", "Best trimmed ready-made tuple");
  bind.add(trim, "--n", &RunConfig::n, "Tuple size");
  trim->add_option("--tuple-out", tuple_out, "Write the resulting tuple JSON here");
  common(trim);

  auto* sweep = app.add_subcommand("sweep", "Delta(n) sweep");
  bind.add(sweep, "--n-lo", &RunConfig::n_lo, "First n");
  bind.add(sweep, "--n-hi", &RunConfig::n_hi, "Last n");
  bind.add(sweep, "--methods", &RunConfig::methods, "theorem1, trim, montmod")->delimiter(',');
  bind.add(sweep, "--m", &RunConfig::m, "Range multiplier for montmod (default 2)");
  bind.add(sweep, "--strategy", &RunConfig::strategy, "auto, exhaustive, random or greedy");
  bind.add(sweep, "--trials", &RunConfig::trials, "Random restarts");
  bind.add(sweep, "--N", &RunConfig::N, "Moment order for the greedy surrogate");
  common(sweep);

  auto* gauss = app.add_subcommand("gauss-check", "Gauss-sum magnitudes against the closed-form case table");
  bind.add(gauss, "--pmax", &RunConfig::pmax, "Check all odd primes up to this");
  common(gauss);

  auto* bounds = app.add_subcommand("bounds", "Envelope pairs A(alpha), B(alpha) and closed-form bounds");
  bind.add(bounds, "--alpha", &RunConfig::alpha, "alpha > 0")->required();
  bind.add(bounds, "--n", &RunConfig::n, "n for the Erdos-Renyi / NCS bounds");
  bind.add(bounds, "--m", &RunConfig::m, "m for the Erdos-Renyi / NCS bounds");
  common(bounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    RunConfig rc;
    if (!config_path.empty()) rc = read_json_file(config_path).get<RunConfig>();
    bind.apply(rc);
    rc.command = app.get_subcommands().front()->get_name();
    if (rc.format != "json" && rc.format != "csv" && rc.format != "human")
      throw usage_error("--format must be json, csv or human");
    if (!echo_config.empty()) {
      std::ofstream f(echo_config);
      if (!f) throw usage_error("cannot open " + echo_config);
      f << json(rc).dump(2) << '\n';
    }

    const auto& c = rc.command;
    if (c == "construct") return cmd_construct(rc);
    if (c == "evaluate") return cmd_evaluate(rc);
    if (c == "certify") return cmd_certify(rc);
    if (c == "theorem1") return cmd_theorem1(rc, tuple_out);
    if (c == "theorem2") return cmd_theorem2(rc, tuple_out);
    if (c == "trim") return cmd_trim(rc, tuple_out);
    if (c == "sweep") return cmd_sweep(rc);
    if (c == "gauss-check") return cmd_gauss_check(rc);
    if (c == "bounds") return cmd_bounds(rc);
    throw usage_error("unknown command " + c);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const turan::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: bad config: " << e.what() << '\n';
    return kExitUsage;
  }
}
