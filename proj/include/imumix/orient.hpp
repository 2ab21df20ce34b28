#pragma once

#include <functional>

#include "imumix/mahony.hpp"
#include "imumix/types.hpp"

namespace imumix {

// Per-row sink for quaternion traces, used by the optional alignment debug
// dump: (domain_id, session_id, window_index, row, orientation).
using QuatSink =
    std::function<void(int, const std::string&, int, int, const Quat&)>;

// Rotates one window from body frame into the shared global frame. For each
// row the filter state advances on the raw gyro/accel sample, then both
// sensor vectors are rotated by the current body-to-world matrix. The state
// carries across calls so consecutive windows of a session stay continuous.
void to_global(ImuWindow& window, MahonyState& state, const MahonyConfig& cfg);

// Aligns every window of a domain in place. One filter state per session id,
// reused across that session's windows in index order, so gaps left by
// dropped windows do not reset convergence.
void align_domain(Domain& domain, const MahonyConfig& cfg, const QuatSink& dump = nullptr);

}  // namespace imumix
