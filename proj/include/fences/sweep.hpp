#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fences/composition.hpp"

namespace fences {

enum class SweepMode { heavy, fbsym, fbuni, partial_symmetry, logconcave };

SweepMode parse_sweep_mode(const std::string& text);
std::string to_string(SweepMode mode);

/// Whether a composition is in scope for the mode (parity filters).
bool sweep_applies(SweepMode mode, const Composition& beta);

/// Compositions with total in [1, max_total] that the mode applies to,
/// ordered by total then lexicographically.
std::vector<Composition> sweep_compositions(SweepMode mode, int max_total);

/// One finding as a single-line JSON object.
struct SweepFinding {
  std::string json;
  bool ok;
};

SweepFinding sweep_one(SweepMode mode, const Composition& beta);

struct SweepOptions {
  SweepMode mode = SweepMode::heavy;
  int max_total = 12;
  /// Skip everything up to and including this composition.
  std::optional<Composition> resume_after;
  unsigned jobs = 1;
};

struct SweepSummary {
  std::size_t checked = 0;
  std::size_t failures = 0;
};

/// Runs the sweep and hands each finding to `sink` in composition order,
/// from a single thread.
SweepSummary run_sweep(const SweepOptions& options,
                       const std::function<void(const SweepFinding&)>& sink);

}  // namespace fences
