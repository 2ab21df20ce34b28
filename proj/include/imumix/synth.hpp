#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "imumix/ingest.hpp"

namespace imumix {

// Synthetic IMU data: a sinusoid bank of world-frame motion on top of
// gravity, observed through a body frame with a fixed mounting offset and an
// optional slow orientation wobble. The gyro reports the wobble's true body
// rates, so orientation filtering sees self-consistent data.
struct SynthDomainSpec {
    std::string name;
    std::vector<double> freqs_hz;
    std::vector<double> amps;  // m/s^2 per band
    double noise_accel = 0.05;
    double noise_gyro = 0.01;
    double roll_deg = 0.0;
    double pitch_deg = 0.0;
    double wobble_deg = 0.0;
    double wobble_hz = 0.0;
    int sessions = 3;
    int windows_per_session = 12;
    int drop_every = 0;  // every Nth block gets the excluded activity; 0 = never
    std::string accel_unit = "m/s^2";
    std::string gyro_unit = "rad/s";
    std::string position;
    // Raw label vocabulary written to CSV, in Activity order.
    std::array<std::string, 5> raw_labels = {"Sitting", "Walking", "Upstairs",
                                             "Downstairs", "Other"};
};

struct SynthSpec {
    std::vector<SynthDomainSpec> domains;
    double source_rate_hz = 50.0;
    double target_rate_hz = 20.0;
    int window_len = kDefaultWindowLen;
    uint64_t seed = 1;
};

// One session, in SI units and the body frame, labeled in window-duration
// blocks cycling Still, Walking, Upstairs, Downstairs.
RawRecording synth_session(const SynthDomainSpec& domain, const SynthSpec& spec,
                           int session_index);

// Writes raw/<domain>/session_<k>.csv plus one descriptor JSON per domain
// under dir; returns the descriptor paths in domain order.
std::vector<std::filesystem::path> write_synthetic_dataset(
    const std::filesystem::path& dir, const SynthSpec& spec);

// Three plausible device placements with distinct motion, mounting, and unit
// conventions; small enough for quick end-to-end runs.
SynthSpec demo_spec();

// Two simple domains plus one with much richer spectral content. The hard
// domain is learnable but converges slowly, which is what the reweighting
// loop is supposed to notice.
SynthSpec benchmark_spec();

}  // namespace imumix
