#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "latentid/latentid.hpp"

namespace latentid::cli {

inline constexpr int kSchemaVersion = 1;

/// Process exit codes.
enum ExitCode : int {
  kExitIdentified = 0,
  kExitError = 1,
  kExitGeneric = 2,
  kExitNotIdentified = 3,
  kExitUnsupported = 4,
  kExitInconsistent = 5,
};

int exit_code_for(Status status);

struct NumericFlags {
  int trials = 50;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;  // relative; auto when unset
};

struct Report {
  nlohmann::ordered_json document;
  int exit_code = kExitError;
};

/// Structural verdict, evidence and singular system.
Report cmd_classify(const LatentModel& m, const std::string& source);

/// Structural verdict cross-checked against generic and on-subspace ranks.
Report cmd_verify(const LatentModel& m, const std::string& source, const NumericFlags& flags);

/// Rank of D(β) at a supplied β, or at a seeded draw when `beta` is unset.
Report cmd_rank(const LatentModel& m, const std::string& source, const std::optional<BetaVector>& beta,
                const NumericFlags& flags);

/// One equation per line; empty when no closed-form system exists.
struct LocusOutput {
  std::string text;
  std::string note;  // diagnostic for standard error
  int exit_code = kExitError;
};
LocusOutput cmd_locus(const LatentModel& m);

/// Whitespace-separated reals, '#' comments allowed. Throws ValidationError
/// on zero entries and DimensionMismatch when the count is not `p`.
BetaVector read_beta(const std::string& text, std::size_t p);

}  // namespace latentid::cli
