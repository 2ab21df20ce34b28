#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "imumix/common.hpp"

namespace imumix {

// Row-major dense matrix of doubles; the in-memory form of window and
// recording channel data. On-disk stores use little-endian float32.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

    double& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
    double* row(int r) { return data.data() + static_cast<size_t>(r) * cols; }
    const double* row(int r) const { return data.data() + static_cast<size_t>(r) * cols; }
};

// The four activity classes shared by all datasets, plus an explicit marker
// for activities excluded from training.
enum class Activity : uint8_t { still, walking, upstairs, downstairs, drop };

std::string to_string(Activity a);
Activity activity_from_string(const std::string& s);

// Membership test against the four kept activities: anything else, "Drop"
// included, lands on Drop. Used for label-map targets, where a dataset may
// name activities the canonical set does not keep.
Activity canonical_or_drop(const std::string& s);

// Total mapping from a dataset's raw label vocabulary onto Activity.
struct LabelMap {
    std::map<std::string, Activity> entries;

    Activity unify(const std::string& raw) const {
        auto it = entries.find(raw);
        if (it == entries.end())
            throw Error(Errc::config, "label map has no entry for label \"" + raw + "\"");
        return it->second;
    }
};

// Channel order: ax, ay, az (m/s^2), gx, gy, gz (rad/s).
inline constexpr int kChannels = 6;
inline constexpr int kDefaultWindowLen = 120;

struct ImuWindow {
    Matrix data;  // window_len x kChannels
    Activity label = Activity::still;
    int domain_id = 0;
    int window_index = 0;
    std::string session_id;
    int64_t session_start_row = 0;  // first row of this window within its session
    std::string position;           // optional device placement metadata
};

// One source dataset, already resampled, windowed, and canonically labeled.
struct Domain {
    int id = 0;
    std::string name;
    std::vector<ImuWindow> windows;

    int64_t size() const { return static_cast<int64_t>(windows.size()); }
};

}  // namespace imumix
