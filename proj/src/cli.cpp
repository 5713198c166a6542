#include "reserve_lab/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "reserve_lab/curve.hpp"
#include "reserve_lab/errors.hpp"
#include "reserve_lab/info.hpp"

namespace reserve_lab::cli {
namespace {

using io::Json;

constexpr double kLemmaTolerance = 1e-9;
constexpr double kQStarTolerance = 1e-6;

// Shortest text that parses back to the same double.
std::string num(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

class Csv {
 public:
  Csv(std::string_view command, std::initializer_list<std::string_view> columns) {
    os_ << "# reserve_lab " << command << " csv v1\n";
    bool first = true;
    for (auto col : columns) {
      os_ << (first ? "" : ",") << col;
      first = false;
    }
    os_ << '\n';
  }
  template <class... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((os_ << (first ? "" : ",") << cell(cells), first = false), ...);
    os_ << '\n';
  }
  std::string str() const { return os_.str(); }

 private:
  static std::string cell(double x) { return num(x); }
  static std::string cell(std::size_t x) { return std::to_string(x); }
  static std::string cell(bool b) { return b ? "true" : "false"; }
  static std::string cell(std::string_view s) { return std::string(s); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  std::ostringstream os_;
};

bool want_csv(const ExperimentConfig& c) { return c.format == "csv"; }

Json envelope(const ExperimentConfig& c) {
  Json cfg = to_json(c);
  cfg.erase("output");
  return Json{{"command", std::string(command_name(c.command))}, {"config", cfg}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const Distribution& need_dist(const ExperimentConfig& c) {
  if (!c.distribution) throw ValidationError(std::string(command_name(c.command)) + ": --dist is required");
  return *c.distribution;
}

PricingStrategy sweep_strategy(const ExperimentConfig& c) {
  return c.strategy ? *c.strategy : PricingStrategy::guarded(std::exp(-1.0));
}

info::PairParams pair_params(const ExperimentConfig& c) {
  info::PairParams p;
  if (!c.epsilon) throw ValidationError("--eps is required");
  p.epsilon = *c.epsilon;
  const auto kind = info::pair_kind_from_name(c.pair_kind);
  if (kind == info::PairKind::General || kind == info::PairKind::BoundedSupport) {
    if (!c.delta) throw ValidationError("--delta is required for general and bounded pairs");
    p.delta = *c.delta;
  }
  p.eps0 = c.eps0;
  return p;
}

// ---------------------------------------------------------------------------

RunResult run_eval(const ExperimentConfig& c, int threads) {
  if (!c.strategy) throw ValidationError("eval: --strategy is required");
  const auto r = eval::eval_strategy(need_dist(c), *c.strategy, c.m, c.benchmark, c.trials, c.seed, threads);
  if (want_csv(c)) {
    Csv csv("eval", {"ratio", "revenue", "benchmark", "benchmark_is_supremum", "ci95", "trials", "method", "seed", "m"});
    csv.row(r.ratio, r.revenue, r.benchmark, r.benchmark_is_supremum, r.ci95, r.trials, eval::method_name(r.method),
            std::to_string(r.seed), r.m);
    return {kExitOk, csv.str(), {}};
  }
  Json j = envelope(c);
  j["report"] = io::to_json(r);
  return {kExitOk, dump(j), {}};
}

RunResult run_sweep(const ExperimentConfig& c, int threads) {
  eval::SweepSpec spec;
  spec.epsilons = c.schedule_eps;
  spec.trials = c.schedule_trials.empty() ? std::vector<std::size_t>{c.trials} : c.schedule_trials;
  spec.seed = c.seed;
  spec.threads = threads;
  const auto r = eval::sweep_sample_complexity(need_dist(c), sweep_strategy(c), c.benchmark, spec);
  if (want_csv(c)) {
    Csv csv("sweep", {"epsilon", "trials", "m_found", "m_smoothed", "ratio_at_m", "ci95_at_m", "seed"});
    for (const auto& row : r.rows) {
      csv.row(row.epsilon, row.trials, row.m_found, row.m_smoothed, row.ratio_at_m, row.ci95_at_m,
              std::to_string(row.seed));
    }
    return {kExitOk, csv.str(), {}};
  }
  Json j = envelope(c);
  j["result"] = io::to_json(r);
  return {kExitOk, dump(j), {}};
}

RunResult run_curve_dump(const ExperimentConfig& c) {
  const Distribution& d = need_dist(c);
  if (c.grid < 1) throw ValidationError("curve-dump: --grid must be >= 1");
  std::vector<std::array<double, 3>> rows;
  for (std::size_t i = 1; i <= c.grid; ++i) {
    const double q = static_cast<double>(i) / static_cast<double>(c.grid);
    const double v = d.value_at_quantile(q);
    rows.push_back({q, v, q * v});
  }
  if (want_csv(c)) {
    Csv csv("curve-dump", {"q", "v", "R"});
    for (const auto& r : rows) csv.row(r[0], r[1], r[2]);
    return {kExitOk, csv.str(), {}};
  }
  Json j = envelope(c);
  j["monopoly"] = io::to_json(curve::monopoly(d));
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(Json::array({r[0], r[1], r[2]}));
  j["rows"] = arr;
  return {kExitOk, dump(j), {}};
}

RunResult run_lemma_check(const ExperimentConfig& c) {
  const Distribution& d = need_dist(c);
  if (c.grid < 1) throw ValidationError("lemma-check: --grid must be >= 1");
  const auto n = static_cast<double>(c.grid);
  const auto declared_alpha = [&] {
    if (c.alpha) return *c.alpha;
    const auto a = d.declared_strong_regularity();
    if (!a || *a <= 0.0) throw ValidationError("lemma-check: --alpha is required for this distribution");
    return *a;
  };

  double worst = std::numeric_limits<double>::infinity();
  double worst_q = 0.0;
  double tolerance = kLemmaTolerance;
  std::size_t points = 0;
  const auto visit = [&](double q, double margin) {
    ++points;
    if (margin < worst) {
      worst = margin;
      worst_q = q;
    }
  };

  if (c.lemma == "mhr-quadratic") {
    const auto peak = curve::monopoly(d);
    for (std::size_t i = 1; i <= c.grid; ++i) visit(i / n, curve::quadratic_gap(d, peak, i / n, 0.25));
  } else if (c.lemma == "streg-quadratic") {
    const double a = declared_alpha();
    const auto peak = curve::monopoly(d);
    for (std::size_t i = 1; i <= c.grid; ++i) visit(i / n, curve::quadratic_gap(d, peak, i / n, a / 3.0));
  } else if (c.lemma == "postpeak") {
    const auto peak = curve::monopoly(d);
    for (std::size_t i = 0; i <= c.grid; ++i) {
      const double q = i == c.grid ? 1.0 : peak.q_star + (1.0 - peak.q_star) * (i / n);
      visit(q, curve::postpeak_dominates_exponential(d, peak, q));
    }
  } else if (c.lemma == "qstar-mhr" || c.lemma == "qstar-streg") {
    tolerance = kQStarTolerance;
    const auto m = curve::monopoly(d);
    double bound = std::exp(-1.0);
    if (c.lemma == "qstar-streg") {
      const double a = declared_alpha();
      bound = a >= 1.0 ? std::exp(-1.0) : std::pow(a, 1.0 / (1.0 - a));
    }
    visit(m.q_star, m.q_star - bound);
  } else {
    throw ValidationError("lemma-check: --lemma must be one of mhr-quadratic, streg-quadratic, postpeak, "
                          "qstar-mhr, qstar-streg");
  }

  const bool pass = worst >= -tolerance;
  const int code = pass ? kExitOk : kExitNumerical;
  std::string err = pass ? std::string() : "lemma margin " + num(worst) + " below tolerance at q=" + num(worst_q);
  if (want_csv(c)) {
    Csv csv("lemma-check", {"lemma", "min_margin", "worst_q", "tolerance", "points", "pass"});
    csv.row(c.lemma, worst, worst_q, tolerance, points, pass);
    return {code, csv.str(), err};
  }
  Json j = envelope(c);
  j["result"] = Json{{"lemma", c.lemma},      {"min_margin", worst}, {"worst_q", worst_q},
                     {"tolerance", tolerance}, {"points", points},    {"pass", pass}};
  return {code, dump(j), err};
}

RunResult run_lb_pair(const ExperimentConfig& c) {
  const auto pair = info::make_lb_pair(info::pair_kind_from_name(c.pair_kind), pair_params(c));
  if (want_csv(c)) {
    Csv csv("lb-pair", {"kind", "epsilon", "kl_sum_closed_form", "kl_sum_numeric", "reduction_samples",
                        "reduction_samples_closed_form", "price_sets_disjoint"});
    csv.row(info::pair_kind_name(pair.kind), pair.epsilon, pair.kl_sum_closed_form, pair.kl_sum_numeric,
            pair.reduction_samples, pair.reduction_samples_closed_form, pair.price_sets_disjoint);
    return {kExitOk, csv.str(), {}};
  }
  Json j = envelope(c);
  j["pair"] = io::to_json(pair);
  return {kExitOk, dump(j), {}};
}

RunResult run_classify(const ExperimentConfig& c, int threads) {
  const auto pair = info::make_lb_pair(info::pair_kind_from_name(c.pair_kind), pair_params(c));
  std::size_t m = c.m;
  if (m == 0) m = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(pair.reduction_samples)));
  const auto r = info::classify_lr(pair, m, c.trials, c.seed, threads);
  const int code = r.cap_respected ? kExitOk : kExitNumerical;
  std::string err = r.cap_respected ? std::string() : "success rate exceeds the Pinsker cap";
  if (want_csv(c)) {
    Csv csv("classify", {"kind", "m", "trials", "seed", "success_rate", "ci_half_width", "theoretical_cap",
                         "cap_respected"});
    csv.row(info::pair_kind_name(pair.kind), r.m, r.trials, std::to_string(r.seed), r.success_rate,
            r.ci_half_width, r.theoretical_cap, r.cap_respected);
    return {code, csv.str(), err};
  }
  Json j = envelope(c);
  j["kl_sum_numeric"] = pair.kl_sum_numeric;
  j["report"] = io::to_json(r);
  return {code, dump(j), err};
}

RunResult run_scaled_curve(const ExperimentConfig& c) {
  std::vector<double> grid = c.c_grid;
  if (grid.empty()) grid = io::parse_grid("0:1:0.01");
  const auto rows = eval::scaled_ratio_curve(need_dist(c), grid);
  if (want_csv(c)) {
    Csv csv("scaled-curve", {"c", "ratio"});
    for (const auto& [cc, ratio] : rows) csv.row(cc, ratio);
    return {kExitOk, csv.str(), {}};
  }
  Json j = envelope(c);
  Json arr = Json::array();
  for (const auto& [cc, ratio] : rows) arr.push_back(Json::array({cc, ratio}));
  j["rows"] = arr;
  return {kExitOk, dump(j), {}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void load_schedule(const std::string& path, ExperimentConfig& c) {
  const Json j = read_json_file(path);
  c.schedule_eps.clear();
  c.schedule_trials.clear();
  if (j.is_object()) {
    for (const auto& e : j.at("epsilons")) c.schedule_eps.push_back(e.get<double>());
    if (j.contains("trials")) {
      const Json& t = j.at("trials");
      if (t.is_array()) {
        for (const auto& e : t) c.schedule_trials.push_back(e.get<std::size_t>());
      } else {
        c.schedule_trials.push_back(t.get<std::size_t>());
      }
    }
    return;
  }
  if (!j.is_array()) throw ValidationError("schedule must be a JSON object or list");
  bool objects = false;
  for (const auto& e : j) {
    if (e.is_object()) {
      objects = true;
      c.schedule_eps.push_back(e.at("epsilon").get<double>());
      c.schedule_trials.push_back(e.at("trials").get<std::size_t>());
    } else {
      c.schedule_eps.push_back(e.get<double>());
    }
  }
  if (objects && c.schedule_trials.size() != c.schedule_eps.size()) {
    throw ValidationError("schedule entries must all carry trials or none");
  }
}

}  // namespace

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Eval:
      return "eval";
    case Command::Sweep:
      return "sweep";
    case Command::CurveDump:
      return "curve-dump";
    case Command::LemmaCheck:
      return "lemma-check";
    case Command::LbPair:
      return "lb-pair";
    case Command::Classify:
      return "classify";
    case Command::ScaledCurve:
      return "scaled-curve";
  }
  return "unknown";
}

Command command_from_name(std::string_view name) {
  for (Command c : {Command::Eval, Command::Sweep, Command::CurveDump, Command::LemmaCheck, Command::LbPair,
                    Command::Classify, Command::ScaledCurve}) {
    if (command_name(c) == name) return c;
  }
  throw ValidationError("unknown command: " + std::string(name));
}

Json to_json(const ExperimentConfig& c) {
  Json j{{"command", std::string(command_name(c.command))},
         {"benchmark", io::to_json(c.benchmark)},
         {"m", c.m},
         {"trials", c.trials},
         {"seed", c.seed},
         {"grid", c.grid},
         {"output", c.output},
         {"format", c.format}};
  if (c.distribution) j["distribution"] = io::to_json(*c.distribution);
  if (c.strategy) j["strategy"] = io::to_json(*c.strategy);
  if (c.epsilon) j["epsilon"] = *c.epsilon;
  if (c.eps0) j["eps0"] = *c.eps0;
  if (c.delta) j["delta"] = *c.delta;
  if (c.alpha) j["alpha"] = *c.alpha;
  if (!c.c_grid.empty()) j["c_grid"] = c.c_grid;
  if (!c.schedule_eps.empty()) {
    j["schedule"] = Json{{"epsilons", c.schedule_eps}, {"trials", c.schedule_trials}};
  }
  if (!c.lemma.empty()) j["lemma"] = c.lemma;
  if (!c.pair_kind.empty()) j["kind"] = c.pair_kind;
  return j;
}

ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  try {
    ExperimentConfig c;
    c.command = command_from_name(j.at("command").get<std::string>());
    if (j.contains("distribution")) c.distribution = io::distribution_from_json(j.at("distribution"));
    if (j.contains("strategy")) c.strategy = io::strategy_from_json(j.at("strategy"));
    if (j.contains("benchmark")) c.benchmark = io::benchmark_from_json(j.at("benchmark"));
    c.m = j.value("m", c.m);
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
    c.grid = j.value("grid", c.grid);
    c.output = j.value("output", c.output);
    c.format = j.value("format", c.format);
    if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
    if (j.contains("eps0")) c.eps0 = j.at("eps0").get<double>();
    if (j.contains("delta")) c.delta = j.at("delta").get<double>();
    if (j.contains("alpha")) c.alpha = j.at("alpha").get<double>();
    if (j.contains("c_grid")) c.c_grid = j.at("c_grid").get<std::vector<double>>();
    if (j.contains("schedule")) {
      c.schedule_eps = j.at("schedule").at("epsilons").get<std::vector<double>>();
      c.schedule_trials = j.at("schedule").value("trials", std::vector<std::size_t>{});
    }
    c.lemma = j.value("lemma", std::string());
    c.pair_kind = j.value("kind", std::string());
    return c;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed config: ") + e.what());
  }
}

void validate(const ExperimentConfig& c) {
  if (c.format != "json" && c.format != "csv") throw ValidationError("--format must be json or csv");
  if (c.trials < 1) throw ValidationError("--trials must be >= 1");
  if (c.strategy) c.strategy->validate();
  switch (c.command) {
    case Command::Eval:
      need_dist(c);
      if (!c.strategy) throw ValidationError("eval: --strategy is required");
      if (c.m < 1) throw ValidationError("eval: --m must be >= 1");
      break;
    case Command::Sweep:
      need_dist(c);
      if (c.schedule_eps.empty()) throw ValidationError("sweep: --schedule or --eps-list is required");
      break;
    case Command::CurveDump:
    case Command::ScaledCurve:
      need_dist(c);
      break;
    case Command::LemmaCheck:
      need_dist(c);
      if (c.lemma.empty()) throw ValidationError("lemma-check: --lemma is required");
      break;
    case Command::LbPair:
    case Command::Classify:
      info::pair_kind_from_name(c.pair_kind);
      pair_params(c);
      break;
  }
}

RunResult execute(const ExperimentConfig& c, int threads) {
  try {
    validate(c);
    switch (c.command) {
      case Command::Eval:
        return run_eval(c, threads);
      case Command::Sweep:
        return run_sweep(c, threads);
      case Command::CurveDump:
        return run_curve_dump(c);
      case Command::LemmaCheck:
        return run_lemma_check(c);
      case Command::LbPair:
        return run_lb_pair(c);
      case Command::Classify:
        return run_classify(c, threads);
      case Command::ScaledCurve:
        return run_scaled_curve(c);
    }
    return {kExitValidation, {}, "unknown command"};
  } catch (const NumericalAssertion& e) {
    return {kExitNumerical, {}, e.what()};
  } catch (const HypothesisFailure& e) {
    return {kExitNumerical, {}, e.what()};
  } catch (const std::invalid_argument& e) {
    return {kExitValidation, {}, e.what()};
  } catch (const std::domain_error& e) {
    return {kExitValidation, {}, e.what()};
  }
}

int run(const ExperimentConfig& c, int threads, std::ostream& out, std::ostream& err) {
  const RunResult r = execute(c, threads);
  if (!r.error.empty()) err << "error: " << r.error << '\n';
  if (r.artifact.empty()) return r.exit_code;
  if (c.output.empty()) {
    out << r.artifact;
    out.flush();
    return r.exit_code;
  }
  std::ofstream file(c.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write " << c.output << '\n';
    return kExitValidation;
  }
  file << r.artifact;
  if (!file.flush()) {
    err << "error: write failed for " << c.output << '\n';
    return kExitValidation;
  }
  return r.exit_code;
}

int resolve_threads(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("RESERVE_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 0;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Sample-based posted pricing: evaluation and lower-bound experiments"};
  app.require_subcommand(1);

  struct Flags {
    std::string dist, strategy, benchmark, eps_list, c_grid, schedule, config, lemma, kind, output, format;
    std::size_t m = 0, trials = 0, grid = 0;
    std::uint64_t seed = 0;
    double eps = 0, eps0 = 0, delta = 0, alpha = 0, c = 0;
    int threads = 0;
    bool emit_config = false;
  } f;

  const std::vector<std::pair<Command, std::string>> commands = {
      {Command::Eval, "Expected revenue and approximation ratio of a strategy"},
      {Command::Sweep, "Least m reaching ratio 1 - eps, per eps"},
      {Command::CurveDump, "Revenue curve (q, v(q), R(q)) on a quantile grid"},
      {Command::LemmaCheck, "Grid oracle for a structural revenue-curve lemma"},
      {Command::LbPair, "Hard distribution pair with KL data and price sets"},
      {Command::Classify, "Likelihood-ratio classifier against the Pinsker cap"},
      {Command::ScaledCurve, "Ratio of single-sample scaled pricing over a c grid"},
  };

  std::vector<std::pair<Command, CLI::App*>> subs;
  for (const auto& [cmd, help] : commands) {
    CLI::App* s = app.add_subcommand(std::string(command_name(cmd)), help);
    s->add_option("--config", f.config, "JSON config file; explicit flags override it");
    s->add_option("--dist", f.dist, "Distribution: shorthand, inline JSON, or JSON file");
    s->add_option("--strategy", f.strategy, "Strategy: er, guarded:c, identity, scaled:c, fixed:p, or JSON");
    s->add_option("--benchmark", f.benchmark, "monopoly (default) or restricted:delta");
    s->add_option("--m", f.m, "Samples per batch (classify: 0 = reduction bound)");
    s->add_option("--trials", f.trials, "Monte-Carlo trials (default 100000)");
    s->add_option("--seed", f.seed, "Seed (default 0)");
    s->add_option("--eps", f.eps, "Approximation parameter epsilon");
    s->add_option("--eps0", f.eps0, "MHR pair eps0 (default: searched constant times eps)");
    s->add_option("--delta", f.delta, "General/bounded pair delta");
    s->add_option("--alpha", f.alpha, "Strong-regularity alpha for lemma checks");
    s->add_option("--c", f.c, "Single c value for scaled-curve");
    s->add_option("--c-grid", f.c_grid, "c grid: lo:hi:step or comma list");
    s->add_option("--eps-list", f.eps_list, "Sweep epsilons as a comma list");
    s->add_option("--schedule", f.schedule, "Sweep schedule JSON file");
    s->add_option("--lemma", f.lemma, "mhr-quadratic, streg-quadratic, postpeak, qstar-mhr, qstar-streg");
    s->add_option("--kind", f.kind, "Pair kind: general, bounded, regular, mhr");
    s->add_option("--grid", f.grid, "Grid resolution (default 1000)");
    s->add_option("--output", f.output, "Output file (default stdout)");
    s->add_option("--format", f.format, "json (default) or csv");
    s->add_option("--threads", f.threads, "Worker threads; falls back to RESERVE_LAB_THREADS");
    s->add_flag("--emit-config", f.emit_config, "Print the resolved config as JSON and exit");
    subs.emplace_back(cmd, s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  for (const auto& [cmd, s] : subs) {
    if (!s->parsed()) continue;
    const auto given = [s = s](const char* name) { return s->count(name) > 0; };
    try {
      ExperimentConfig c;
      if (given("--config")) {
        c = config_from_json(read_json_file(f.config));
        if (c.command != cmd) throw ValidationError("config command does not match the subcommand");
      }
      c.command = cmd;
      if (given("--dist")) c.distribution = io::parse_distribution(f.dist);
      if (given("--strategy")) c.strategy = io::parse_strategy(f.strategy);
      if (given("--benchmark")) c.benchmark = io::parse_benchmark(f.benchmark);
      if (given("--m")) c.m = f.m;
      if (given("--trials")) c.trials = f.trials;
      if (given("--seed")) c.seed = f.seed;
      if (given("--eps")) c.epsilon = f.eps;
      if (given("--eps0")) c.eps0 = f.eps0;
      if (given("--delta")) c.delta = f.delta;
      if (given("--alpha")) c.alpha = f.alpha;
      if (given("--c")) c.c_grid = {f.c};
      if (given("--c-grid")) c.c_grid = io::parse_grid(f.c_grid);
      if (given("--eps-list")) c.schedule_eps = io::parse_grid(f.eps_list);
      if (given("--schedule")) load_schedule(f.schedule, c);
      if (given("--lemma")) c.lemma = f.lemma;
      if (given("--kind")) c.pair_kind = f.kind;
      if (given("--grid")) c.grid = f.grid;
      if (given("--output")) c.output = f.output;
      if (given("--format")) c.format = f.format;
      if (cmd == Command::Classify && !given("--m") && !given("--config")) c.m = 0;

      if (f.emit_config) {
        std::cout << to_json(c).dump(2) << '\n';
        return kExitOk;
      }
      const int threads = resolve_threads(given("--threads") ? std::optional<int>(f.threads) : std::nullopt);
      return run(c, threads, std::cout, std::cerr);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitValidation;
    } catch (const std::domain_error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitValidation;
    }
  }
  return kExitValidation;
}

}  // namespace reserve_lab::cli
