#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabxc/bigraph.hpp"

namespace stabxc::cli {

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr std::size_t kDefaultSamples = 100000;

struct RunConfig {
  std::string subcommand;
  std::optional<int> q;
  std::optional<int> k;
  std::string graph;  // file path or a generator spec such as cycle:6
  std::string level = "sampled";
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string emit_lp;
  bool verify = false;
};

enum ExitStatus : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Thrown for bad arguments; run() maps it to kUsageError.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& subcommands();

/// Which subcommand checks each verified statement.
struct ClaimRoute {
  std::string claim;
  std::string subcommand;
};
std::span<const ClaimRoute> claim_routes();

/// Resolves --graph: a generator spec (cycle:<len>, path:<n>,
/// complete:<s>x<t>, grid:<r>x<c>, torus:<r>x<c>, plane:<q>) or a graph file.
BipartiteGraph load_graph(const std::string& spec);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches to run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stabxc::cli
