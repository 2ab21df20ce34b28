#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "imumix/types.hpp"

namespace imumix {

// Describes one source dataset: where its CSV files live and how to interpret
// them. Loaded from a descriptor JSON next to the raw data.
struct DatasetDesc {
    int id = 0;
    std::string name;
    std::vector<std::filesystem::path> files;  // sorted for reproducibility
    std::string accel_unit = "m/s^2";          // "m/s^2" or "g"
    std::string gyro_unit = "rad/s";           // "rad/s" or "deg/s"
    double source_rate_hz = 0.0;
    LabelMap label_map;
};

struct IngestConfig {
    double target_rate_hz = 20.0;
    int window_len = kDefaultWindowLen;
    int stride = kDefaultWindowLen;  // non-overlapping by default
    double session_gap_factor = 3.0;

    void validate() const;
};

// A contiguous run of samples from one device at a nominal rate. Timestamps
// are seconds, strictly increasing; channels are SI units (m/s^2, rad/s).
struct RawRecording {
    std::string session_id;
    double rate_hz = 0.0;
    std::vector<double> t;
    Matrix channels;                  // t.size() x kChannels
    std::vector<std::string> labels;  // raw vocabulary, one per row
    std::vector<std::string> positions;
};

// Conversion factors for the two supported unit conventions.
double accel_unit_scale(const std::string& unit);
double gyro_unit_scale(const std::string& unit);

// Parses one CSV file. Required header: t,ax,ay,az,gx,gy,gz,label with an
// optional trailing position column. Converts units to SI and validates that
// every value is finite and timestamps strictly increase.
RawRecording parse_csv(const std::filesystem::path& file, const DatasetDesc& desc);

// Splits a recording at timestamp gaps larger than gap_factor / rate.
std::vector<RawRecording> split_sessions(const RawRecording& rec, double gap_factor);

// Reads, converts, and session-splits every file of a dataset.
std::vector<RawRecording> read_dataset(const DatasetDesc& desc, const IngestConfig& cfg);

// Linear interpolation of channels onto a uniform grid starting at the first
// timestamp; labels and positions are taken from the nearest source sample.
RawRecording resample(const RawRecording& rec, double target_rate_hz);

// Cuts fixed-length windows and assigns each the majority canonical label.
// Windows whose majority label is drop are discarded. Ties go to the label of
// the window's center row when it is among the tied set, else to the tied
// label with the smallest Activity value.
std::vector<ImuWindow> cut_windows(const RawRecording& rec, const LabelMap& map,
                                   int window_len, int stride);

// Full ingest for one dataset: parse, split, resample, window, label.
// Sessions with fewer than two samples are dropped.
Domain build_domain(const DatasetDesc& desc, const IngestConfig& cfg);

// Loads a dataset descriptor JSON. Relative path globs resolve against the
// descriptor's directory.
DatasetDesc load_dataset_desc(const std::filesystem::path& descriptor);

}  // namespace imumix
