#include "qkt/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qkt/error.hpp"

namespace qkt::classical {

namespace {

constexpr double kSphereTol = 1e-9;
constexpr double kTangentTol = 1e-9;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 rotate_y(const Vec3& v, double p) {
  const double c = std::cos(p), s = std::sin(p);
  return {c * v[0] + s * v[2], v[1], -s * v[0] + c * v[2]};
}

// 53-bit uniform double in [0, 1) from the raw engine output, so sequences
// do not depend on the standard library's distribution implementation.
double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Vec3 project_tangent(const Vec3& pt, Vec3 v) {
  const double along = dot(pt, v);
  for (int k = 0; k < 3; ++k) v[k] -= along * pt[k];
  return v;
}

Vec3 initial_tangent(const SpherePoint& pt, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (;;) {
    Vec3 v{2.0 * uniform(rng) - 1.0, 2.0 * uniform(rng) - 1.0, 2.0 * uniform(rng) - 1.0};
    v = project_tangent(pt.vec(), v);
    const double len = norm(v);
    if (len > 1e-3) {
      for (auto& c : v) c /= len;
      return v;
    }
  }
}

}  // namespace

SpherePoint::SpherePoint(double x, double y, double z) : v_{x, y, z} {
  const double r2 = x * x + y * y + z * z;
  if (!std::isfinite(r2) || std::abs(r2 - 1.0) > kSphereTol)
    throw Error(ErrorKind::OffSphere, "|pt|^2 = " + std::to_string(r2));
}

SpherePoint SpherePoint::from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

SpherePoint classical_map(const SpherePoint& pt, double kappa0, double p) {
  const Vec3 r = rotate_y(pt.vec(), p);
  const double angle = kappa0 * r[2];
  const double c = std::cos(angle), s = std::sin(angle);
  Vec3 out{c * r[0] - s * r[1], s * r[0] + c * r[1], r[2]};
  const double len = norm(out);
  for (auto& v : out) v /= len;
  return SpherePoint(out, SpherePoint::Unchecked{});
}

Vec3 tangent_step(const SpherePoint& pt, const Vec3& v, double kappa0, double p) {
  const double len = norm(v);
  if (std::abs(dot(pt.vec(), v)) > kTangentTol * len)
    throw Error(ErrorKind::NotTangent, "tangent vector has normal component " + std::to_string(dot(pt.vec(), v)));
  const Vec3 r = rotate_y(pt.vec(), p);
  const Vec3 dr = rotate_y(v, p);
  const double angle = kappa0 * r[2];
  const double c = std::cos(angle), s = std::sin(angle);
  const double x2 = c * r[0] - s * r[1];
  const double y2 = s * r[0] + c * r[1];
  return {c * dr[0] - s * dr[1] - kappa0 * y2 * dr[2], s * dr[0] + c * dr[1] + kappa0 * x2 * dr[2], dr[2]};
}

std::vector<double> lyapunov_running(double kappa0, double p, const SpherePoint& pt0, int steps, int transient,
                                     std::uint64_t seed) {
  if (transient < 0 || steps <= transient)
    throw Error(ErrorKind::DomainError, "need steps > transient >= 0");
  SpherePoint pt = pt0;
  Vec3 v = initial_tangent(pt0, seed);
  std::vector<double> running;
  running.reserve(static_cast<std::size_t>(steps - transient));
  double log_sum = 0.0;
  for (int k = 1; k <= steps; ++k) {
    Vec3 next_v = tangent_step(pt, v, kappa0, p);
    pt = classical_map(pt, kappa0, p);
    next_v = project_tangent(pt.vec(), next_v);
    const double growth = norm(next_v);
    for (auto& c : next_v) c /= growth;
    v = next_v;
    if (k > transient) {
      log_sum += std::log(growth);
      running.push_back(log_sum / static_cast<double>(k - transient));
    }
  }
  return running;
}

LyapunovEstimate lyapunov(double kappa0, double p, const SpherePoint& pt0, int steps, int transient,
                          std::uint64_t seed) {
  if (steps < 1000) throw Error(ErrorKind::DomainError, "Lyapunov estimate needs steps >= 1000");
  const std::vector<double> running = lyapunov_running(kappa0, p, pt0, steps, transient, seed);
  return {running.back(), steps, transient};
}

SpherePoint random_sphere_point(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double z = 2.0 * uniform(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * uniform(rng);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

}  // namespace qkt::classical
