#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "reserve_lab/curve.hpp"
#include "reserve_lab/dist.hpp"
#include "reserve_lab/eval.hpp"
#include "reserve_lab/info.hpp"
#include "reserve_lab/strategy.hpp"

namespace reserve_lab::io {

using Json = nlohmann::json;

// {"family": name, "params": {...}}
Json to_json(const Distribution& d);
Distribution distribution_from_json(const Json& j);

// Shorthand ("exp:1", "uni:0:1", "er", "pm:5", "texp:0.43:0.74", "gp:0.5:1",
// "mix:1", "glb:0.1:0.05:1", "rlb:0.15:2", "mlb:0.04:1"), inline JSON, or the
// path of a JSON file.
Distribution parse_distribution(std::string_view text);
// Inverse of the shorthand grammar; round-trips exactly.
std::string to_shorthand(const Distribution& d);

// {"kind": name, "param": number} (param omitted for kinds without one)
Json to_json(const PricingStrategy& s);
PricingStrategy strategy_from_json(const Json& j);
// "er", "guarded:c", "identity", "scaled:c", "fixed:p", or JSON as above.
PricingStrategy parse_strategy(std::string_view text);

Json to_json(const eval::Benchmark& b);
eval::Benchmark benchmark_from_json(const Json& j);
// "monopoly" or "restricted:delta".
eval::Benchmark parse_benchmark(std::string_view text);

// "lo:hi:step" (inclusive, step counted from lo) or a comma list.
std::vector<double> parse_grid(std::string_view text);
double parse_number(std::string_view text, std::string_view what);

// +-inf become null.
Json number_or_null(double x);
double number_from_json(const Json& j);

Json to_json(const curve::RevenueSummary& r);
Json to_json(const curve::PriceIntervalSet& s);
Json to_json(const eval::EvalReport& r);
Json to_json(const eval::SweepResult& r);
Json to_json(const info::LowerBoundPair& p);
Json to_json(const info::ClassifyReport& r);

}  // namespace reserve_lab::io
