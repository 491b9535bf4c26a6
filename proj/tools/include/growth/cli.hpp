#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "growth/graph.hpp"
#include "growth/schedule.hpp"

namespace growth::cli {

/// Exit statuses shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;  // NONE results, invalid schedules
inline constexpr int kUsageError = 2;     // bad flags, unreadable files, format errors

/// Runs one command line. `args` excludes the program name. "-" as a file
/// argument means `in`; normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Every algorithm name accepted by `grow --algo`.
const std::vector<std::string>& algorithm_names();

struct SynthesisOptions {
  int ell = 0;                         // elim+L
  const Coloring* coloring = nullptr;  // colored; degeneracy coloring if null
};

/// Runs one synthesis algorithm. Returns nullopt for a NONE answer. Throws
/// std::invalid_argument (GraphError, UnsupportedSize) when the target does
/// not fit the algorithm.
std::optional<Schedule> synthesize(const std::string& algo, const Graph& target,
                                   const SynthesisOptions& options = {});

/// One CSV row of `sweep`.
struct SweepRow {
  std::string algo;
  int n = 0;
  std::uint64_t seed = 0;
  int slots = 0;
  std::size_t excess = 0;
  int max_lifetime = 0;
  double wall_ms = 0;
};

}  // namespace growth::cli
