#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmaoi/config.hpp"

namespace mmaoi {

enum class BoundaryPolicy { Strict, Clamp };

/// Tabulated expected inference error L(delta1, delta2) on {1..d1_max} x {1..d2_max}.
///
/// Immutable after construction; copies share the grid. Queries beyond the
/// grid either throw OutOfDomain (Strict) or read the nearest edge cell
/// (Clamp). Clamp events are counted into a caller-owned counter so that a
/// shared surface carries no mutable state.
class LossSurface {
 public:
  /// `values` is row-major: value(d1, d2) = values[(d1 - 1) * d2_max + (d2 - 1)].
  /// Throws BadSpec on bad dimensions and NonFiniteError on NaN/inf entries.
  LossSurface(int d1_max, int d2_max, std::vector<double> values,
              BoundaryPolicy policy = BoundaryPolicy::Strict);

  int d1_max() const noexcept { return d1_max_; }
  int d2_max() const noexcept { return d2_max_; }

  /// max |L| over the grid.
  double bound() const noexcept { return bound_; }

  BoundaryPolicy boundary_policy() const noexcept { return policy_; }

  /// Same grid, different boundary behavior.
  LossSurface with_policy(BoundaryPolicy policy) const;

  bool contains(std::int64_t d1, std::int64_t d2) const noexcept {
    return d1 >= 1 && d2 >= 1 && d1 <= d1_max_ && d2 <= d2_max_;
  }

  /// Evaluates L under the surface's boundary policy. Coordinates below 1 are
  /// always an error; `clamp_count`, when given, is incremented per clamped query.
  double eval(std::int64_t d1, std::int64_t d2, std::uint64_t* clamp_count = nullptr) const;

  double eval(const AoiVector& v, std::uint64_t* clamp_count = nullptr) const {
    return eval(v.d1, v.d2, clamp_count);
  }

  std::span<const double> values() const noexcept { return *values_; }

  /// FNV-1a over the dimensions and the bit patterns of the grid.
  std::uint64_t fingerprint() const noexcept;

  /// Bitwise grid equality (boundary policy ignored).
  bool same_grid(const LossSurface& other) const noexcept;

 private:
  int d1_max_;
  int d2_max_;
  std::shared_ptr<const std::vector<double>> values_;
  BoundaryPolicy policy_;
  double bound_ = 0.0;
};

enum class Generator { Constant, AoiSum, AoiWeighted, MonotonePower, NonmonoNonsep };

/// A synthetic surface: generator id, its parameters, and the grid size.
///
/// Parameters by generator:
///   constant:c                  L = c
///   aoi_sum                     L = d1 + d2
///   aoi_weighted:w1,w2          L = w1*d1 + w2*d2
///   monotone_power:p1,p2        L = d1^p1 + d2^p2            (p > 0)
///   nonmono_nonsep[:w1,w2,r1,r2,cross,amp,period]
///       s1 = 1 - exp(-r1*d1), s2 = 1 - exp(-r2*d2)
///       L  = w1*s1 + w2*s2 + cross*s1*s2 - amp*(1 + cos(2*pi*d2/period))/2
///   Omitted trailing nonmono_nonsep parameters take the defaults in
///   kNonmonoDefaults.
struct SurfaceSpec {
  Generator generator = Generator::Constant;
  std::vector<double> params;
  int d1_max = 1;
  int d2_max = 1;
};

inline constexpr double kNonmonoDefaults[7] = {1.0, 0.5, 0.12, 0.04, 0.6, 0.25, 9.0};

/// Parses "name" or "name:p1,p2,...". Throws BadSpec.
SurfaceSpec parse_surface_spec(std::string_view text, int d1_max, int d2_max);

/// Canonical "name:p1,p2" form (round-trips through parse_surface_spec).
std::string format_surface_spec(const SurfaceSpec& spec);

std::string_view generator_name(Generator g);

/// Closed-form value of the generator at one lattice point; no grid involved.
double generator_value(const SurfaceSpec& spec, std::int64_t d1, std::int64_t d2);

/// Deterministic: equal specs give bitwise-equal grids. Throws BadSpec.
LossSurface generate_surface(const SurfaceSpec& spec,
                             BoundaryPolicy policy = BoundaryPolicy::Strict);

/// Reads CSV (`delta1,delta2,loss`) or, for a `.json` extension, the JSON
/// layout `{d1_max, d2_max, values: [[...]]}`.
/// Throws ParseError, HoleError, NonFiniteError.
LossSurface load_surface(const std::filesystem::path& path,
                         BoundaryPolicy policy = BoundaryPolicy::Strict);

LossSurface parse_surface_csv(std::istream& in, BoundaryPolicy policy = BoundaryPolicy::Strict);
LossSurface parse_surface_json(std::istream& in, BoundaryPolicy policy = BoundaryPolicy::Strict);

/// Writers emit shortest round-trip decimal representations, so
/// write -> load reproduces the grid bitwise.
void write_surface_csv(std::ostream& out, const LossSurface& surface);
void write_surface_json(std::ostream& out, const LossSurface& surface);

/// Largest (delta1, delta2) arguments any cycle cost C_m(tau), tau <= tau_max, evaluates.
struct Domain {
  std::int64_t d1 = 1;
  std::int64_t d2 = 1;

  friend constexpr bool operator==(const Domain&, const Domain&) = default;
};

Domain required_domain(const SystemConfig& config);

bool covers(const LossSurface& surface, const Domain& domain) noexcept;

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace mmaoi
