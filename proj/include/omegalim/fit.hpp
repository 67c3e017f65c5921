#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "omegalim/prototype.hpp"
#include "omegalim/tower.hpp"

namespace omegalim {

using Sample = std::pair<std::uint64_t, double>;  // (n, value)

struct FitCandidate {
  Prototype proto;
  double coefficient = 0.0;  // tail mean of value / proto(n)
  double drift = 0.0;        // relative spread of the ratio over the tail
  bool usable = false;       // evaluable with a finite, nonzero tail mean
};

struct FitResult {
  double coefficient;
  Prototype proto;
  std::vector<FitCandidate> report;  // every candidate, diagnostics included
};

inline constexpr double kDefaultDriftTolerance = 1e-2;

// Picks the candidate whose ratio value/p(n) drifts least over the sample
// tail. Requires at least 8 samples with strictly increasing n. Throws
// NoStableCandidate when every candidate drifts beyond the tolerance.
FitResult estimate_leading_term(const std::vector<Sample>& samples,
                                const std::vector<Prototype>& candidates,
                                double drift_tolerance = kDefaultDriftTolerance);

// Sample ingestion: CSV lines "n,value" or a JSON array of [n, value]
// pairs. The format is detected from the content.
std::vector<Sample> parse_samples(const std::string& text);

}  // namespace omegalim
