#include "mmaoi/config.hpp"

#include <string>

#include "mmaoi/errors.hpp"

namespace mmaoi {

namespace {
constexpr std::int64_t kMaxTransmissionTime = 1'000'000;
constexpr int kMaxTau = 100'000;
}  // namespace

std::ostream& operator<<(std::ostream& os, const AoiVector& v) {
  return os << '(' << v.d1 << ',' << v.d2 << ')';
}

std::ostream& operator<<(std::ostream& os, const StationaryPolicy& p) {
  return os << '(' << p.tau1 << ',' << p.tau2 << ')';
}

void SystemConfig::validate() const {
  if (t1 < 1 || t2 < 1) {
    throw ConfigError("transmission times must be >= 1, got t1=" + std::to_string(t1) +
                      " t2=" + std::to_string(t2));
  }
  if (t1 > kMaxTransmissionTime || t2 > kMaxTransmissionTime) {
    throw ConfigError("transmission times above " + std::to_string(kMaxTransmissionTime));
  }
  if (tau_max < 0 || tau_max > kMaxTau) {
    throw ConfigError("tau_max must be in [0, " + std::to_string(kMaxTau) + "], got " +
                      std::to_string(tau_max));
  }
}

}  // namespace mmaoi
