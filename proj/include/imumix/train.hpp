#pragma once

#include <filesystem>
#include <functional>
#include <vector>

#include "imumix/model.hpp"
#include "imumix/types.hpp"

namespace imumix {

// Per-channel standardization statistics, computed per domain over every row
// of every window. Channels that are (numerically) constant get unit scale so
// standardization stays a bijection.
struct ChannelStats {
    std::vector<double> mean, stdev;
};

ChannelStats compute_channel_stats(const Domain& domain);

// out must hold window_len * kChannels doubles.
void standardize_window(const Matrix& window, const ChannelStats& stats, double* out);

// Defaults are the full-scale values; the bundled configs override them with
// the small-footprint settings that the synthetic corpora need.
struct TrainConfig {
    int epochs = 200;
    int batch_size = 512;
    int steps_per_epoch = 0;  // 0: ceil(total windows / batch_size)
    double learning_rate = 1e-3;
    double weight_decay = 1e-2;
    uint64_t seed = 1;

    void validate() const;
};

// Proportions over domains; must be non-negative and sum to one.
void validate_simplex(const std::vector<double>& alpha, size_t expected_size);

// Draws an index with probability proportional to probs[i]. Zero-weight
// entries are never drawn.
int sample_categorical(const std::vector<double>& probs, Rng& rng);

using EpochSink = std::function<void(int epoch, double mean_loss)>;

struct TrainResult {
    std::vector<double> epoch_losses;  // mean masked loss per epoch
    int64_t samples_seen = 0;
};

// Trains the reconstruction model on windows drawn domain-first (domain by
// alpha, window uniform within the domain) with fresh random masks per draw.
// Domains given positive weight must be non-empty.
TrainResult train_model(ReconModel& model, const std::vector<Domain>& domains,
                        const std::vector<ChannelStats>& stats,
                        const std::vector<double>& alpha, const TrainConfig& cfg,
                        const MaskConfig& mask_cfg, const EpochSink& sink = nullptr);

// Frozen per-window losses of a trained reference model under each window's
// canonical mask. These are the comparison baseline for the reweighting loop,
// so the table is complete: one entry for every window of every domain.
struct BaselineTable {
    std::vector<std::vector<double>> loss;  // [domain_id][window_index]

    double lookup(int domain_id, int window_index) const;
};

BaselineTable baseline_losses(const ReconModel& model, const std::vector<Domain>& domains,
                              const std::vector<ChannelStats>& stats,
                              const MaskConfig& mask_cfg);

void write_baseline_csv(const std::filesystem::path& path, const BaselineTable& table);
BaselineTable read_baseline_csv(const std::filesystem::path& path);

}  // namespace imumix
