#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ivplab/engine.hpp"
#include "ivplab/json_io.hpp"

namespace ivplab::cli {

inline constexpr const char* kToolVersion = "ivplab 1.0.0";

// Exit codes: 0 pass, 1 mathematical check failed, 2 bad input (including an
// exhausted enumeration budget), 3 internal invariant violated.
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kBadInput = 2, kInternal = 3 };

struct CommonOptions {
  bool timings = true;
  unsigned threads = 1;
  std::optional<std::uint64_t> budget;  // overrides IVPLAB_BUDGET
};

/// Default budget, IVPLAB_BUDGET, then the explicit override.
EngineConfig engine_config(const CommonOptions& opts);

/// Where a witness comes from: a file, or fresh construction from N and p.
struct WitnessSource {
  std::optional<std::filesystem::path> witness_file;
  std::optional<unsigned> N;
  std::optional<std::string> p;
  std::vector<std::string> aux_primes;
};

struct CommandResult {
  int exit_code = kPass;
  json report;
  std::string summary;  // human-readable, one line per outcome
};

CommandResult cmd_construct(unsigned N, const std::string& p, const std::vector<std::string>& aux_primes,
                            const std::optional<std::filesystem::path>& out, const CommonOptions& opts);

/// n_max = 0 means N.
CommandResult cmd_verify(const WitnessSource& source, unsigned n_max, const CommonOptions& opts);

CommandResult cmd_analyze(const std::filesystem::path& element_file, unsigned n_max, const CommonOptions& opts);

/// Compares engine and oracle class lists for F^n (or for an element file).
CommandResult cmd_oracle_compare(const WitnessSource& source, const std::optional<std::filesystem::path>& element_file,
                                 unsigned n, const CommonOptions& opts);

}  // namespace ivplab::cli
