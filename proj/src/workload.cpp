#include "tsdp/workload.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace tsdp {

namespace {

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(value))
    throw InvalidInput("profile: bad " + what + " '" + text + "'");
  return value;
}

}  // namespace

RateProfile RateProfile::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw InvalidInput("profile: expected uniform:<mean> or pulse:<period>,<mean>, got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);

  RateProfile profile;
  if (kind == "uniform") {
    profile.kind = Kind::Uniform;
    profile.mean = parse_number(args, "mean");
  } else if (kind == "pulse") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw InvalidInput("profile: pulse needs <period>,<mean>");
    profile.kind = Kind::AlternatingPulse;
    const double period = parse_number(args.substr(0, comma), "period");
    if (period < 1 || period != std::floor(period)) throw InvalidInput("profile: period must be a positive integer");
    profile.period = static_cast<int>(period);
    profile.mean = parse_number(args.substr(comma + 1), "mean");
  } else {
    throw InvalidInput("profile: unknown kind '" + kind + "'");
  }
  if (profile.mean < 0) throw InvalidInput("profile: mean must be >= 0");
  return profile;
}

std::string RateProfile::spec() const {
  std::ostringstream out;
  if (kind == Kind::Uniform) out << "uniform:" << mean;
  else out << "pulse:" << period << "," << mean;
  return out.str();
}

ArrivalTable generate_arrivals(int phase_count, int horizon, std::uint64_t seed,
                               const RateProfile& profile) {
  ArrivalTable table(phase_count, horizon);
  if (profile.mean == 0.0) return table;

  std::mt19937_64 rng(seed);
  std::poisson_distribution<std::int64_t> draw(profile.mean);
  // Time-major draw order so a longer horizon extends a shorter one.
  for (int t = 1; t <= horizon; ++t) {
    const int active = ((t - 1) / profile.period) % phase_count;
    for (int p = 0; p < phase_count; ++p) {
      if (profile.kind == RateProfile::Kind::AlternatingPulse && p != active) continue;
      table.at(p, t) = draw(rng);
    }
  }
  return table;
}

}  // namespace tsdp
