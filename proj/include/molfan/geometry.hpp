#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "molfan/error.hpp"

namespace molfan {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Default absolute tolerance for angular comparisons (radians).
inline constexpr double default_eps_angle = 1e-9;

/// Point or direction in the decision plane (x1, x2).
struct Vector2
{
  double x1{0.0};
  double x2{0.0};

  constexpr Vector2() = default;

  Vector2(double a, double b) : x1(a), x2(b)
  {
    if (!std::isfinite(a) || !std::isfinite(b)) {
      throw Error(ErrorCode::NonFinite, "Vector2 components must be finite");
    }
  }

  friend Vector2 operator+(const Vector2 & u, const Vector2 & v) { return {u.x1 + v.x1, u.x2 + v.x2}; }
  friend Vector2 operator-(const Vector2 & u, const Vector2 & v) { return {u.x1 - v.x1, u.x2 - v.x2}; }
  friend Vector2 operator-(const Vector2 & u) { return {-u.x1, -u.x2}; }
  friend Vector2 operator*(double s, const Vector2 & v) { return {s * v.x1, s * v.x2}; }
  friend Vector2 operator*(const Vector2 & v, double s) { return s * v; }
  friend Vector2 operator/(const Vector2 & v, double s) { return {v.x1 / s, v.x2 / s}; }

  friend bool operator==(const Vector2 &, const Vector2 &) = default;
};

inline double dot(const Vector2 & u, const Vector2 & v) noexcept { return u.x1 * v.x1 + u.x2 * v.x2; }

/// z-component of u × v; positive when v is a counterclockwise turn from u.
inline double cross(const Vector2 & u, const Vector2 & v) noexcept { return u.x1 * v.x2 - u.x2 * v.x1; }

inline double norm(const Vector2 & v) noexcept { return std::hypot(v.x1, v.x2); }

inline double max_abs_diff(const Vector2 & u, const Vector2 & v) noexcept
{
  return std::max(std::abs(u.x1 - v.x1), std::abs(u.x2 - v.x2));
}

/// Counterclockwise rotation by 90 degrees.
inline Vector2 perp(const Vector2 & v) { return {-v.x2, v.x1}; }

inline Vector2 normalized(const Vector2 & v)
{
  const double n = norm(v);
  if (n == 0.0) { throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector"); }
  return v / n;
}

/// Angle in radians, always normalized to [0, 2π).
class Angle
{
public:
  constexpr Angle() = default;

  static Angle from_radians(double rad) { return Angle(normalize(rad)); }
  static Angle from_degrees(double deg) { return from_radians(deg * std::numbers::pi / 180.0); }

  double radians() const noexcept { return value_; }
  double degrees() const noexcept { return value_ * 180.0 / std::numbers::pi; }

  friend Angle operator+(Angle a, double rad) { return from_radians(a.value_ + rad); }
  friend Angle operator-(Angle a, double rad) { return from_radians(a.value_ - rad); }
  friend bool operator==(const Angle &, const Angle &) = default;

  static double normalize(double rad)
  {
    if (!std::isfinite(rad)) { throw Error(ErrorCode::NonFinite, "angle must be finite"); }
    double r = std::fmod(rad, two_pi);
    if (r < 0.0) { r += two_pi; }
    // fmod of a tiny negative value can round back up to exactly 2π
    if (r >= two_pi) { r = 0.0; }
    return r;
  }

private:
  explicit Angle(double normalized_rad) : value_(normalized_rad) {}

  double value_{0.0};
};

/// Counterclockwise sweep from `from` to `to`, in [0, 2π).
inline double ccw_distance(Angle from, Angle to) noexcept
{
  double d = to.radians() - from.radians();
  if (d < 0.0) { d += two_pi; }
  if (d >= two_pi) { d = 0.0; }
  return d;
}

/// Shortest unsigned angular distance between two angles, in [0, π].
inline double circular_distance(Angle a, Angle b) noexcept
{
  const double d = ccw_distance(a, b);
  return std::min(d, two_pi - d);
}

inline Angle angle_of(const Vector2 & v)
{
  if (v.x1 == 0.0 && v.x2 == 0.0) { throw Error(ErrorCode::ZeroVector, "angle of the zero vector is undefined"); }
  return Angle::from_radians(std::atan2(v.x2, v.x1));
}

inline Vector2 unit_vector(Angle a) { return {std::cos(a.radians()), std::sin(a.radians())}; }

/// Open arc swept counterclockwise from lo to hi. Wraparound (lo > hi numerically) is allowed.
///
/// The only interval that covers the whole circle is the one returned by full(); it is used for
/// the single class of a one-point feasible region.
class AngularInterval
{
public:
  AngularInterval(Angle lo, Angle hi) : lo_(lo), hi_(hi)
  {
    if (ccw_distance(lo, hi) == 0.0) {
      throw Error(ErrorCode::InvalidInterval, "angular interval must have positive width");
    }
  }

  static AngularInterval full() { return AngularInterval(); }

  Angle lo() const noexcept { return lo_; }
  Angle hi() const noexcept { return hi_; }
  bool is_full() const noexcept { return full_; }

  double width() const noexcept { return full_ ? two_pi : ccw_distance(lo_, hi_); }

  /// The open arc from hi back around to lo.
  AngularInterval complement() const { return AngularInterval(hi_, lo_); }

private:
  AngularInterval() : full_(true) {}

  Angle lo_{};
  Angle hi_{};
  bool full_{false};
};

/// True iff `a` lies strictly inside the arc. Angles within `eps` of an endpoint count as on it.
inline bool interval_contains(const AngularInterval & i, Angle a, double eps = default_eps_angle) noexcept
{
  if (i.is_full()) { return true; }
  const double offset = ccw_distance(i.lo(), a);
  return offset > eps && offset < i.width() - eps;
}

}  // namespace molfan
