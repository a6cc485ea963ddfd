#include "staircase/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace stairs {

double wrap_angle(double a) {
  if (!std::isfinite(a)) {
    throw std::invalid_argument("wrap_angle: non-finite angle");
  }
  double w = std::remainder(a, 2.0 * M_PI);  // [-pi, pi]
  if (w <= -M_PI) {
    w += 2.0 * M_PI;
  }
  return w;
}

double angle_diff(double a, double b) { return wrap_angle(a - b); }

double line_angle_diff(double a, double b) {
  double d = wrap_angle(a - b);
  if (d > M_PI_2) {
    d -= M_PI;
  } else if (d <= -M_PI_2) {
    d += M_PI;
  }
  return d;
}

double circular_mean(const double* angles, int count) {
  double c = 0.0, s = 0.0;
  for (int i = 0; i < count; ++i) {
    c += std::cos(angles[i]);
    s += std::sin(angles[i]);
  }
  return std::atan2(s, c);
}

int normalize_polar(double& r, double& phi) {
  int sign = 1;
  if (r < 0.0) {
    r = -r;
    phi += M_PI;
    sign = -1;
  }
  phi = wrap_angle(phi);
  return sign;
}

Vec2 project_onto_line(const Vec2& p, double r, double phi) {
  const Vec2 n = unit_dir(phi);
  return p - (p.dot(n) - r) * n;
}

double point_line_distance(const Vec2& p, double r, double phi) {
  return std::abs(p.dot(unit_dir(phi)) - r);
}

}  // namespace stairs
