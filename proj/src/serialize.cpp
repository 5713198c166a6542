#include "reserve_lab/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "reserve_lab/errors.hpp"

namespace reserve_lab::io {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

// Shortest text that parses back to the same double.
std::string fmt(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

int parse_which(std::string_view text) {
  const double w = parse_number(text, "which");
  if (w != 1.0 && w != 2.0) throw ValidationError("which must be 1 or 2");
  return static_cast<int>(w);
}

double get_param(const Json& params, const char* key) {
  if (!params.contains(key)) throw ValidationError(std::string("missing parameter: ") + key);
  const Json& v = params.at(key);
  if (!v.is_number()) throw ValidationError(std::string("parameter must be a number: ") + key);
  return v.get<double>();
}

int get_which(const Json& params) {
  const double w = get_param(params, "which");
  if (w != 1.0 && w != 2.0) throw ValidationError("which must be 1 or 2");
  return static_cast<int>(w);
}

void expect_arity(const std::vector<std::string_view>& parts, std::size_t n, std::string_view text) {
  if (parts.size() != n) throw ValidationError("malformed shorthand: " + std::string(text));
}

Json read_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_json_text(ss.str());
}

bool looks_like_file(std::string_view text) {
  std::ifstream in{std::string(text)};
  return static_cast<bool>(in);
}

}  // namespace

double parse_number(std::string_view text, std::string_view what) {
  double x = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, x);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ValidationError("invalid number for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return x;
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double number_from_json(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

// ---------------------------------------------------------------------------
// Distributions

Json to_json(const Distribution& d) {
  Json params = std::visit(
      Overloaded{
          [](const Exponential& f) { return Json{{"rate", f.rate}}; },
          [](const UniformInterval& f) { return Json{{"lo", f.lo}, {"hi", f.hi}}; },
          [](const EqualRevenue&) { return Json::object(); },
          [](const PointMass& f) { return Json{{"value", f.value}}; },
          [](const GeneralizedPareto& f) { return Json{{"shape", f.shape}, {"scale", f.scale}}; },
          [](const TruncatedExponential& f) {
            return Json{{"knee_quantile", f.knee_quantile}, {"plateau_width", f.plateau_width}};
          },
          [](const GeneralLbMember& f) { return Json{{"delta", f.delta}, {"epsilon", f.epsilon}, {"which", f.which}}; },
          [](const RegularLbMember& f) { return Json{{"eps0", f.eps0}, {"which", f.which}}; },
          [](const MhrLbMember& f) { return Json{{"eps0", f.eps0}, {"which", f.which}}; },
          [](const ExpMixture& f) { return Json{{"gamma", f.gamma}}; },
      },
      d.family());
  return Json{{"family", std::string(d.family_name())}, {"params", params}};
}

Distribution distribution_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    throw ValidationError("distribution JSON needs a string field 'family'");
  }
  const std::string family = j.at("family").get<std::string>();
  const Json params = j.value("params", Json::object());
  if (family == "exponential") return Distribution(Exponential{get_param(params, "rate")});
  if (family == "uniform") return Distribution(UniformInterval{get_param(params, "lo"), get_param(params, "hi")});
  if (family == "equal_revenue") return Distribution(EqualRevenue{});
  if (family == "point_mass") return Distribution(PointMass{get_param(params, "value")});
  if (family == "generalized_pareto") {
    return Distribution(GeneralizedPareto{get_param(params, "shape"), get_param(params, "scale")});
  }
  if (family == "truncated_exponential") {
    return Distribution(
        TruncatedExponential{get_param(params, "knee_quantile"), get_param(params, "plateau_width")});
  }
  if (family == "general_lb") {
    return Distribution(GeneralLbMember{get_param(params, "delta"), get_param(params, "epsilon"), get_which(params)});
  }
  if (family == "regular_lb") return Distribution(RegularLbMember{get_param(params, "eps0"), get_which(params)});
  if (family == "mhr_lb") return Distribution(MhrLbMember{get_param(params, "eps0"), get_which(params)});
  if (family == "exp_mixture") return Distribution(ExpMixture{get_param(params, "gamma")});
  throw ValidationError("unknown distribution family: " + family);
}

Distribution parse_distribution(std::string_view text) {
  if (!text.empty() && text.front() == '{') return distribution_from_json(read_json_text(text));
  const auto parts = split(text, ':');
  const std::string_view tag = parts[0];
  const auto num = [&](std::size_t i) { return parse_number(parts[i], tag); };
  if (tag == "exp") {
    expect_arity(parts, 2, text);
    return Distribution(Exponential{num(1)});
  }
  if (tag == "uni") {
    expect_arity(parts, 3, text);
    return Distribution(UniformInterval{num(1), num(2)});
  }
  if (tag == "er") {
    expect_arity(parts, 1, text);
    return Distribution(EqualRevenue{});
  }
  if (tag == "pm") {
    expect_arity(parts, 2, text);
    return Distribution(PointMass{num(1)});
  }
  if (tag == "texp") {
    expect_arity(parts, 3, text);
    return Distribution(TruncatedExponential{num(1), num(2)});
  }
  if (tag == "gp") {
    expect_arity(parts, 3, text);
    return Distribution(GeneralizedPareto{num(1), num(2)});
  }
  if (tag == "mix") {
    expect_arity(parts, 2, text);
    return Distribution(ExpMixture{num(1)});
  }
  if (tag == "glb") {
    expect_arity(parts, 4, text);
    return Distribution(GeneralLbMember{num(1), num(2), parse_which(parts[3])});
  }
  if (tag == "rlb") {
    expect_arity(parts, 3, text);
    return Distribution(RegularLbMember{num(1), parse_which(parts[2])});
  }
  if (tag == "mlb") {
    expect_arity(parts, 3, text);
    return Distribution(MhrLbMember{num(1), parse_which(parts[2])});
  }
  if (looks_like_file(text)) return distribution_from_json(read_json_file(std::string(text)));
  throw ValidationError("unknown distribution: " + std::string(text));
}

std::string to_shorthand(const Distribution& d) {
  return std::visit(Overloaded{
                        [](const Exponential& f) { return "exp:" + fmt(f.rate); },
                        [](const UniformInterval& f) { return "uni:" + fmt(f.lo) + ":" + fmt(f.hi); },
                        [](const EqualRevenue&) { return std::string("er"); },
                        [](const PointMass& f) { return "pm:" + fmt(f.value); },
                        [](const GeneralizedPareto& f) { return "gp:" + fmt(f.shape) + ":" + fmt(f.scale); },
                        [](const TruncatedExponential& f) {
                          return "texp:" + fmt(f.knee_quantile) + ":" + fmt(f.plateau_width);
                        },
                        [](const GeneralLbMember& f) {
                          return "glb:" + fmt(f.delta) + ":" + fmt(f.epsilon) + ":" + std::to_string(f.which);
                        },
                        [](const RegularLbMember& f) { return "rlb:" + fmt(f.eps0) + ":" + std::to_string(f.which); },
                        [](const MhrLbMember& f) { return "mlb:" + fmt(f.eps0) + ":" + std::to_string(f.which); },
                        [](const ExpMixture& f) { return "mix:" + fmt(f.gamma); },
                    },
                    d.family());
}

// ---------------------------------------------------------------------------
// Strategies and benchmarks

Json to_json(const PricingStrategy& s) {
  Json j{{"kind", std::string(s.name())}};
  if (s.has_param()) j["param"] = s.param;
  return j;
}

PricingStrategy strategy_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ValidationError("strategy JSON needs a string field 'kind'");
  }
  PricingStrategy s{strategy_kind_from_name(j.at("kind").get<std::string>()), 0.0};
  if (s.has_param()) {
    if (!j.contains("param") || !j.at("param").is_number()) {
      throw ValidationError(std::string(s.name()) + ": missing numeric 'param'");
    }
    s.param = j.at("param").get<double>();
  }
  s.validate();
  return s;
}

PricingStrategy parse_strategy(std::string_view text) {
  if (!text.empty() && text.front() == '{') return strategy_from_json(read_json_text(text));
  const auto parts = split(text, ':');
  const std::string_view tag = parts[0];
  PricingStrategy s;
  if (tag == "er" || tag == "empirical_reserve") {
    expect_arity(parts, 1, text);
    s = PricingStrategy::empirical_reserve();
  } else if (tag == "identity") {
    expect_arity(parts, 1, text);
    s = PricingStrategy::identity();
  } else if (tag == "guarded") {
    expect_arity(parts, 2, text);
    s = PricingStrategy::guarded(parse_number(parts[1], "guard"));
  } else if (tag == "scaled") {
    expect_arity(parts, 2, text);
    s = PricingStrategy::scaled(parse_number(parts[1], "scale factor"));
  } else if (tag == "fixed") {
    expect_arity(parts, 2, text);
    s = PricingStrategy::fixed(parse_number(parts[1], "price"));
  } else {
    throw ValidationError("unknown strategy: " + std::string(text));
  }
  s.validate();
  return s;
}

Json to_json(const eval::Benchmark& b) {
  if (b.kind == eval::Benchmark::Kind::Monopoly) return Json{{"kind", "monopoly"}};
  return Json{{"kind", "restricted"}, {"delta", b.delta}};
}

eval::Benchmark benchmark_from_json(const Json& j) {
  const std::string kind = j.value("kind", std::string("monopoly"));
  if (kind == "monopoly") return eval::Benchmark::monopoly();
  if (kind == "restricted") {
    const double delta = get_param(j, "delta");
    if (!(delta > 0.0 && delta <= 1.0)) throw ValidationError("restricted benchmark: delta must lie in (0, 1]");
    return eval::Benchmark::restricted(delta);
  }
  throw ValidationError("unknown benchmark: " + kind);
}

eval::Benchmark parse_benchmark(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts[0] == "monopoly" && parts.size() == 1) return eval::Benchmark::monopoly();
  if (parts[0] == "restricted" && parts.size() == 2) {
    return benchmark_from_json(Json{{"kind", "restricted"}, {"delta", parse_number(parts[1], "delta")}});
  }
  throw ValidationError("unknown benchmark: " + std::string(text));
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> out;
  if (text.find(',') != std::string_view::npos || text.find(':') == std::string_view::npos) {
    for (std::string_view part : split(text, ',')) out.push_back(parse_number(part, "grid"));
    return out;
  }
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ValidationError("grid must be lo:hi:step or a comma list");
  const double lo = parse_number(parts[0], "grid lo");
  const double hi = parse_number(parts[1], "grid hi");
  const double step = parse_number(parts[2], "grid step");
  if (!(step > 0.0) || hi < lo) throw ValidationError("grid needs lo <= hi and step > 0");
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(std::min(hi, lo + step * static_cast<double>(i)));
  return out;
}

// ---------------------------------------------------------------------------
// Reports

Json to_json(const curve::RevenueSummary& r) {
  return Json{{"q_star", r.q_star}, {"v_star", number_or_null(r.v_star)}, {"r_star", r.r_star}, {"attained", r.attained}};
}

Json to_json(const curve::PriceIntervalSet& s) {
  Json arr = Json::array();
  for (const auto& iv : s.intervals()) arr.push_back(Json::array({iv.lo, number_or_null(iv.hi)}));
  return arr;
}

Json to_json(const eval::EvalReport& r) {
  return Json{{"ratio", r.ratio},
              {"revenue", r.revenue},
              {"benchmark", r.benchmark},
              {"benchmark_is_supremum", r.benchmark_is_supremum},
              {"ci95", r.ci95},
              {"trials", r.trials},
              {"method", std::string(eval::method_name(r.method))},
              {"seed", r.seed},
              {"m", r.m}};
}

Json to_json(const eval::SweepResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"epsilon", row.epsilon},
                        {"trials", row.trials},
                        {"m_found", row.m_found},
                        {"m_smoothed", row.m_smoothed},
                        {"ratio_at_m", row.ratio_at_m},
                        {"ci95_at_m", row.ci95_at_m},
                        {"seed", row.seed}});
  }
  return Json{{"rows", rows}, {"schedule", r.schedule}, {"slope", number_or_null(r.slope)}};
}

Json to_json(const info::LowerBoundPair& p) {
  Json j{{"kind", std::string(info::pair_kind_name(p.kind))},
         {"d1", to_json(p.d1)},
         {"d2", to_json(p.d2)},
         {"epsilon", p.epsilon},
         {"kl_sum_closed_form", p.kl_sum_closed_form},
         {"kl_sum_numeric", p.kl_sum_numeric},
         {"reduction_samples", p.reduction_samples},
         {"reduction_samples_closed_form", p.reduction_samples_closed_form},
         {"price_set1", to_json(p.price_set1)},
         {"price_set2", to_json(p.price_set2)},
         {"price_sets_disjoint", p.price_sets_disjoint}};
  if (p.kind == info::PairKind::General || p.kind == info::PairKind::BoundedSupport) j["delta"] = p.delta;
  if (p.kind == info::PairKind::Regular || p.kind == info::PairKind::Mhr) j["eps0"] = p.eps0;
  return j;
}

Json to_json(const info::ClassifyReport& r) {
  return Json{{"success_rate", r.success_rate},   {"ci_half_width", r.ci_half_width},
              {"theoretical_cap", r.theoretical_cap}, {"m", r.m},
              {"trials", r.trials},                 {"seed", r.seed},
              {"cap_respected", r.cap_respected}};
}

}  // namespace reserve_lab::io
