#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "staircase/geometry.hpp"

namespace stairs {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct DegenerateStaircase : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooFewStairs : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularCovariance : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularInnovationCovariance : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientPoints : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Core state types. Plain value types with no interior mutation; every
// operation in this library is a pure function of its inputs, so instances
// may be freely copied and shared across threads.
// ---------------------------------------------------------------------------

/// One stair edge as an infinite line in polar form, world frame.
/// Invariants: r >= 0 and phi in (-pi, pi] after normalize().
struct StairLine {
  double r = 0.0;       // radial distance to the line [m]
  double phi = 0.0;     // line normal angle [rad]
  double z_start = 0.0; // elevation of the start endpoint [m]
  double z_end = 0.0;   // elevation of the end endpoint [m]

  /// Flips to the r >= 0 representation; returns -1 if flipped, else +1.
  int normalize();

  double mean_z() const { return 0.5 * (z_start + z_end); }

  Vec4 vec() const { return {r, phi, z_start, z_end}; }
  static StairLine from_vec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
};

/// Physical 3-D endpoints bounding one stair edge, world frame.
struct StairEndpoints {
  Vec3 start = Vec3::Zero();
  Vec3 end = Vec3::Zero();

  Vec2 center_xy() const { return 0.5 * (start.head<2>() + end.head<2>()); }
  Vec3 center() const { return 0.5 * (start + end); }
  double width_xy() const { return (end.head<2>() - start.head<2>()).norm(); }
};

/// A stair edge: infinite-line state plus the endpoint state that bounds it.
struct Stair {
  StairLine line;
  StairEndpoints endpoints;
};

/// Shared staircase geometry, assumed constant along one flight.
struct StaircaseParams {
  double height = 0.0;     // rise per step [m]
  double depth = 0.0;      // horizontal run per step, center to center [m]
  double width = 0.0;      // stair width [m]
  double start_yaw = 0.0;  // ascending perpendicular of the first stair [rad]
  double end_yaw = 0.0;    // ascending perpendicular of the last stair [rad]
  double curvature = 0.0;  // per-step yaw increment [rad]

  Vec6 vec() const { return (Vec6() << height, depth, width, start_yaw, end_yaw, curvature).finished(); }
};

/// Measurement, process and pose noise configuration.
struct NoiseConfig {
  // Stddevs of the measured line components (r, phi, z_start, z_end).
  Vec4 measurement_sigmas{0.03, 2.0 * M_PI / 180.0, 0.02, 0.02};
  // Stddevs of the staircase parameters (h, d, w, psi_s, psi_e, dpsi).
  Vec6 parameter_sigmas{(Vec6() << 0.01, 0.01, 0.05, 1.0 * M_PI / 180.0,
                         1.0 * M_PI / 180.0, 0.5 * M_PI / 180.0)
                            .finished()};
  // Covariance of the robot pose (x, y, z, yaw) from localization.
  Mat4 pose_covariance =
      Vec4{1e-4, 1e-4, 1e-4, std::pow(0.5 * M_PI / 180.0, 2)}.asDiagonal();

  Mat4 measurement_covariance() const {
    return measurement_sigmas.array().square().matrix().asDiagonal();
  }
  Eigen::Matrix<double, 6, 6> parameter_covariance() const {
    return parameter_sigmas.array().square().matrix().asDiagonal();
  }
};

/// Gravity-aligned robot pose: position plus yaw.
struct RobotPose {
  Vec3 position = Vec3::Zero();
  double yaw = 0.0;

  static RobotPose identity() { return {}; }
};

/// One detector output frame: stair lines and endpoints in the robot's
/// local frame, ordered ascending by elevation.
struct MeasurementFrame {
  std::vector<Stair> stairs;
  RobotPose pose;
  NoiseConfig noise;
  double timestamp = 0.0;

  int count() const { return static_cast<int>(stairs.size()); }
};

/// Belief over one staircase: ordered stairs, a 4N x 4N covariance over the
/// stacked (r, phi, z_start, z_end) blocks, and the derived parameters.
/// Single-writer: concurrent filter steps on the same belief are not allowed;
/// distinct beliefs may be processed in parallel.
struct StaircaseBelief {
  std::vector<Stair> stairs;
  MatX covariance;             // 4N x 4N
  StaircaseParams params;
  std::vector<double> stair_yaws;  // derived ascending perpendicular per stair
  std::string frame_id = "world";

  int count() const { return static_cast<int>(stairs.size()); }

  Eigen::Block<MatX, 4, 4> block(int i) { return covariance.block<4, 4>(4 * i, 4 * i); }
  Eigen::Block<const MatX, 4, 4> block(int i) const {
    return covariance.block<4, 4>(4 * i, 4 * i);
  }
};

}  // namespace stairs
