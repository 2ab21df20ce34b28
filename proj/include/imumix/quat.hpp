#pragma once

#include <array>
#include <cmath>

#include "imumix/common.hpp"

namespace imumix {

using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// Row-major 3x3 rotation matrix.
struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(int r, int c) { return m[r * 3 + c]; }
    double operator()(int r, int c) const { return m[r * 3 + c]; }

    Vec3 apply(const Vec3& v) const {
        return {m[0] * v[0] + m[1] * v[1] + m[2] * v[2],
                m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
                m[6] * v[0] + m[7] * v[1] + m[8] * v[2]};
    }

    Mat3 transposed() const {
        Mat3 t;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
        return t;
    }

    static Mat3 identity() {
        Mat3 i;
        i.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return i;
    }
};

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(r, k) * b(k, col);
            c(r, col) = s;
        }
    return c;
}

// Hamilton-convention unit quaternion, scalar part first. Represents the
// orientation of the sensor body frame relative to the global frame:
// v_global = q * (0, v_body) * conj(q).
struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

    Quat conj() const { return {w, -x, -y, -z}; }

    Quat normalized() const {
        double n = norm();
        if (!(n > 0.0) || !std::isfinite(n))
            throw Error(Errc::numeric, "cannot normalize a quaternion with zero or non-finite norm");
        return {w / n, x / n, y / n, z / n};
    }

    static Quat identity() { return {1.0, 0.0, 0.0, 0.0}; }

    static Quat from_axis_angle(const Vec3& axis, double angle_rad) {
        double n = imumix::norm(axis);
        if (n == 0.0) return identity();
        double half = 0.5 * angle_rad;
        double s = std::sin(half) / n;
        return {std::cos(half), s * axis[0], s * axis[1], s * axis[2]};
    }
};

inline Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

// Sandwich product q * (0, v) * conj(q); rotates a body-frame vector into the
// global frame.
inline Vec3 rotate(const Quat& q, const Vec3& v) {
    Quat p{0.0, v[0], v[1], v[2]};
    Quat r = q * p * q.conj();
    return {r.x, r.y, r.z};
}

// Rotation matrix of a unit quaternion:
//   [ 1-2y^2-2z^2   2xy-2wz      2xz+2wy   ]
//   [ 2xy+2wz       1-2x^2-2z^2  2yz-2wx   ]
//   [ 2xz-2wy       2yz+2wx      1-2x^2-2y^2 ]
// Rejects inputs whose norm deviates from 1 by more than 1e-6.
Mat3 quat_to_matrix(const Quat& q);

// Angle in radians between two nonzero vectors.
inline double angle_between(const Vec3& a, const Vec3& b) {
    double c = dot(a, b) / (norm(a) * norm(b));
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

}  // namespace imumix
