#pragma once

#include "imumix/quat.hpp"

namespace imumix {

// Complementary attitude filter configuration. Defaults assume 20 Hz data and
// a sensor whose accelerometer reads +g on body z when resting flat; with
// gravity_sign = +1 that pose maps onto the global frame's +z axis.
struct MahonyConfig {
    double kp = 1.0;   // proportional gain on the gravity alignment error
    double ki = 0.0;   // integral gain (gyro bias tracking)
    double dt = 0.05;  // seconds per update
    double gravity_sign = 1.0;
    // The accelerometer correction is applied only while |norm(accel)/g - 1|
    // stays inside this band; outside it the reading is motion-dominated and
    // the filter integrates gyro alone.
    double accel_reject_band = 0.3;

    void validate() const;
};

struct MahonyState {
    Quat q = Quat::identity();
    Vec3 integral{0.0, 0.0, 0.0};
};

// One filter step: gravity-error correction of the gyro rate followed by
// first-order quaternion integration. The returned quaternion is unit norm.
void mahony_update(MahonyState& state, const Vec3& gyro, const Vec3& accel,
                   const MahonyConfig& cfg);

// Direction the filter currently assigns to gravity, expressed in the body
// frame (third row of the rotation matrix, scaled by gravity_sign).
Vec3 estimated_gravity_body(const Quat& q, double gravity_sign = 1.0);

}  // namespace imumix
