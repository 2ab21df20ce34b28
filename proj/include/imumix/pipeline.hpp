#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "imumix/dro.hpp"
#include "imumix/ingest.hpp"
#include "imumix/mahony.hpp"
#include "imumix/mixture.hpp"
#include "imumix/synth.hpp"

namespace imumix {

// Whole-run configuration, loaded from a single JSON file. Every section is
// optional; absent fields keep the defaults below. One top-level seed drives
// all stages through per-stage derived streams.
struct PipelineConfig {
    uint64_t seed = 1;
    std::filesystem::path out_dir = "out";

    std::optional<SynthSpec> synth;                // "synth": preset or inline spec
    std::vector<std::filesystem::path> datasets;   // descriptor paths, when data is external

    IngestConfig ingest;
    MahonyConfig mahony;        // dt always derived from ingest.target_rate_hz
    bool dump_quaternions = false;

    ModelConfig model;          // window_len/channels always follow ingest
    MaskConfig mask;
    TrainConfig reference;
    DroConfig dro;
    bool write_trace = false;
    bool svg = true;
};

PipelineConfig load_pipeline_config(const std::filesystem::path& path);

// Stage entry points. Each one reads its prerequisites from cfg.out_dir,
// writes its artifacts there, and records itself in run_summary.json (and its
// wall time in timings.json, kept separate so everything else is
// byte-reproducible for a fixed seed).
void run_synth(const PipelineConfig& cfg);
void run_preprocess(const PipelineConfig& cfg);
void run_reference(const PipelineConfig& cfg);
void run_optimize(const PipelineConfig& cfg);
void run_mix(const PipelineConfig& cfg);
void run_report(const PipelineConfig& cfg);
void run_all(const PipelineConfig& cfg);

}  // namespace imumix
