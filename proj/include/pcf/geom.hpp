#pragma once

#include <Eigen/Dense>

#include <cmath>

#include "pcf/errors.hpp"

namespace pcf {

/// Gaze direction as (pitch, yaw) in radians.
///
/// Valid angles satisfy pitch in [-pi/2, pi/2] and yaw in (-pi, pi]. The
/// camera looks along -z: (0, 0) is straight ahead, positive pitch looks up.
struct GazeAngles {
    double pitch = 0.0;
    double yaw = 0.0;
};

using GazeVector = Eigen::Vector3d;
using Rotation3 = Eigen::Matrix3d;
using PcfPoint = Eigen::Vector3d;

template <class Scalar>
Eigen::Matrix<Scalar, 3, 1> gaze_vector(Scalar pitch, Scalar yaw) {
    using std::cos;
    using std::sin;
    return {-cos(pitch) * sin(yaw), -sin(pitch), -cos(pitch) * cos(yaw)};
}

inline GazeVector angles_to_vector(const GazeAngles& g) {
    return gaze_vector(g.pitch, g.yaw);
}

inline bool is_unit(const GazeVector& v, double tol = 1e-6) {
    return std::abs(v.norm() - 1.0) <= tol;
}

/// Inverse of angles_to_vector. Throws InvalidInputError when the norm
/// deviates from 1 by more than 1e-6. At the poles (|pitch| = pi/2) yaw is 0.
inline GazeAngles vector_to_angles(const GazeVector& v) {
    if (!is_unit(v)) {
        throw InvalidInputError("vector_to_angles: input is not a unit vector (norm " +
                                std::to_string(v.norm()) + ")");
    }
    const double y = std::clamp(-v.y(), -1.0, 1.0);
    return {std::asin(y), std::atan2(-v.x(), -v.z())};
}

/// Angle between two unit vectors, in [0, pi].
inline double angular_difference(const GazeVector& a, const GazeVector& b) {
    if (!is_unit(a) || !is_unit(b)) {
        throw InvalidInputError("angular_difference: inputs must be unit vectors");
    }
    return std::acos(std::clamp(a.dot(b), -1.0, 1.0));
}

/// Rz(z) * Ry(y) * Rx(x) about fixed axes.
template <class Scalar>
Eigen::Matrix<Scalar, 3, 3> euler_zyx_matrix(Scalar z, Scalar y, Scalar x) {
    using std::cos;
    using std::sin;
    const Scalar cz = cos(z), sz = sin(z);
    const Scalar cy = cos(y), sy = sin(y);
    const Scalar cx = cos(x), sx = sin(x);
    Eigen::Matrix<Scalar, 3, 3> r;
    r << cz * cy, cz * sy * sx - sz * cx, cz * sy * cx + sz * sx,
         sz * cy, sz * sy * sx + cz * cx, sz * sy * cx - cz * sx,
         -sy,     cy * sx,                cy * cx;
    return r;
}

inline Rotation3 rotation_from_euler(double z, double y, double x) {
    return euler_zyx_matrix(z, y, x);
}

inline Rotation3 rotation_from_euler(const Eigen::Vector3d& zyx) {
    return euler_zyx_matrix(zyx.x(), zyx.y(), zyx.z());
}

/// Euler angles (z, y, x) such that rotation_from_euler reproduces r.
/// Near the y = +-pi/2 gimbal singularity the z angle is set to 0.
inline Eigen::Vector3d euler_from_rotation(const Rotation3& r) {
    const double sy = -r(2, 0);
    if (std::abs(sy) > 1.0 - 1e-12) {
        // cy ~ 0: only x +- z observable, fold everything into x.
        const double y = std::copysign(M_PI / 2.0, sy);
        return {0.0, y, std::atan2(-r(0, 1) * sy, r(1, 1))};
    }
    const double y = std::asin(sy);
    const double z = std::atan2(r(1, 0), r(0, 0));
    const double x = std::atan2(r(2, 1), r(2, 2));
    return {z, y, x};
}

constexpr double deg_to_rad(double deg) { return deg * M_PI / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / M_PI; }

} // namespace pcf
