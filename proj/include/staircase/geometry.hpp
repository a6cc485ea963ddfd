#pragma once

#include <Eigen/Dense>

namespace stairs {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using VecX = Eigen::VectorXd;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using MatX = Eigen::MatrixXd;

/// Wraps an angle into (-pi, pi]. Throws std::invalid_argument on non-finite input.
double wrap_angle(double a);

/// Wrapped difference a - b in (-pi, pi].
double angle_diff(double a, double b);

/// Difference between two undirected line angles, folded into (-pi/2, pi/2].
/// Polar line normals phi and phi + pi describe the same infinite line.
double line_angle_diff(double a, double b);

/// Circular mean of angles (equal weights). Undefined (returns atan2(0,0)=0)
/// when the mean resultant vanishes.
double circular_mean(const double* angles, int count);

inline Vec2 unit_dir(double a) { return {std::cos(a), std::sin(a)}; }

/// Direction along a line whose normal points at angle a (normal rotated +90deg).
inline Vec2 line_tangent(double a) { return {-std::sin(a), std::cos(a)}; }

/// Normalizes a polar line (r, phi) so that r >= 0 and phi in (-pi, pi].
/// Returns +1 if unchanged, -1 if the representation was flipped.
int normalize_polar(double& r, double& phi);

/// Signed offset of the line with normal angle phi passing through point p.
inline double line_offset(const Vec2& p, double phi) { return p.dot(unit_dir(phi)); }

/// Orthogonal projection of p onto the line x*cos(phi) + y*sin(phi) = r.
Vec2 project_onto_line(const Vec2& p, double r, double phi);

/// Perpendicular XY distance from p to the line (r, phi).
double point_line_distance(const Vec2& p, double r, double phi);

}  // namespace stairs
