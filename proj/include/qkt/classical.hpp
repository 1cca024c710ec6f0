#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace qkt::classical {

using Vec3 = std::array<double, 3>;

/// Point on the unit sphere; the classical limit of <J>/j.
class SpherePoint {
 public:
  // Throws OffSphere if |x^2 + y^2 + z^2 - 1| > 1e-9.
  SpherePoint(double x, double y, double z);
  static SpherePoint from_angles(double theta, double phi);

  double x() const noexcept { return v_[0]; }
  double y() const noexcept { return v_[1]; }
  double z() const noexcept { return v_[2]; }
  const Vec3& vec() const noexcept { return v_; }

 private:
  struct Unchecked {};
  SpherePoint(const Vec3& v, Unchecked) : v_(v) {}
  friend SpherePoint classical_map(const SpherePoint&, double, double);

  Vec3 v_;
};

/// One kick: rotate by p about y (for p = pi/2: (x, y, z) -> (z, y, -x)),
/// then twist about z by kappa0 * z'. Renormalized onto the sphere.
SpherePoint classical_map(const SpherePoint& pt, double kappa0, double p);

/// Jacobian of classical_map applied to a tangent vector at pt.
/// Throws NotTangent if |v . pt| > 1e-9 |v|.
Vec3 tangent_step(const SpherePoint& pt, const Vec3& v, double kappa0, double p);

struct LyapunovEstimate {
  double lambda = 0.0;  // per kick
  int steps = 0;
  int transient = 0;
};

/// Benettin estimate of the largest exponent. The first `transient` kicks
/// only align the tangent vector; lambda averages ln||v|| over the
/// remaining steps - transient kicks. The initial tangent direction is drawn
/// from `seed`.
LyapunovEstimate lyapunov(double kappa0, double p, const SpherePoint& pt0, int steps, int transient = 100,
                          std::uint64_t seed = 0);

/// Finite-time estimates lambda_n for n = 1..steps - transient.
std::vector<double> lyapunov_running(double kappa0, double p, const SpherePoint& pt0, int steps,
                                     int transient = 100, std::uint64_t seed = 0);

/// Uniform point on the sphere from a seed; stable across platforms.
SpherePoint random_sphere_point(std::uint64_t seed);

}  // namespace qkt::classical
