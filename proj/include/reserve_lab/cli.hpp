#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reserve_lab/dist.hpp"
#include "reserve_lab/eval.hpp"
#include "reserve_lab/serialize.hpp"
#include "reserve_lab/strategy.hpp"

namespace reserve_lab::cli {

enum class Command { Eval, Sweep, CurveDump, LemmaCheck, LbPair, Classify, ScaledCurve };
std::string_view command_name(Command c);
Command command_from_name(std::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

// Everything that determines an experiment's output. The worker thread count
// is deliberately not part of it.
struct ExperimentConfig {
  Command command = Command::Eval;
  std::optional<Distribution> distribution;
  std::optional<PricingStrategy> strategy;
  eval::Benchmark benchmark;
  std::size_t m = 1;  // classify: 0 means floor of the reduction bound
  std::size_t trials = 100000;
  std::uint64_t seed = 0;
  std::optional<double> epsilon;
  std::optional<double> eps0;
  std::optional<double> delta;
  std::optional<double> alpha;
  std::vector<double> c_grid;
  std::vector<double> schedule_eps;
  std::vector<std::size_t> schedule_trials;
  std::string lemma;
  std::string pair_kind;
  std::size_t grid = 1000;
  std::string output;
  std::string format = "json";

  bool operator==(const ExperimentConfig&) const = default;
};

io::Json to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const io::Json& j);

// Throws ValidationError when a field the command needs is missing or invalid.
void validate(const ExperimentConfig& c);

struct RunResult {
  int exit_code;
  std::string artifact;  // bytes written to the output file or stream
  std::string error;     // set when exit_code != 0
};

// Runs the experiment and returns its artifact without writing anything.
// Validation problems map to exit 2, failed numerical assertions to exit 3.
RunResult execute(const ExperimentConfig& c, int threads);

// Runs, then writes the artifact to c.output (or `out` when empty). Error
// messages go to `err`.
int run(const ExperimentConfig& c, int threads, std::ostream& out, std::ostream& err);

// Thread count from the flag, then RESERVE_LAB_THREADS, then the OpenMP default (0).
int resolve_threads(std::optional<int> flag);

int main_entry(int argc, char** argv);

}  // namespace reserve_lab::cli
