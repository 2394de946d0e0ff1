#pragma once

// Seeded synthetic arrival workloads.

#include <cstdint>
#include <string>

#include "tsdp/model.hpp"

namespace tsdp {

/// uniform:λ        every phase, every step, Poisson(λ)
/// pulse:period,λ   phases take turns in blocks of `period` steps; the active
///                  phase draws Poisson(λ), the others draw nothing
struct RateProfile {
  enum class Kind { Uniform, AlternatingPulse };
  Kind kind = Kind::Uniform;
  double mean = 0.5;
  int period = 1;

  static RateProfile parse(const std::string& spec);  // throws InvalidInput
  std::string spec() const;
};

ArrivalTable generate_arrivals(int phase_count, int horizon, std::uint64_t seed,
                               const RateProfile& profile);

}  // namespace tsdp
