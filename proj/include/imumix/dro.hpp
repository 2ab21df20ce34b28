#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <vector>

#include "imumix/train.hpp"

namespace imumix {

// A point on the mixture simplex over domains.
struct DomainWeights {
    std::vector<double> alpha;
    int step_index = 0;

    void validate() const { validate_simplex(alpha, alpha.size()); }
};

// How the proxy's own parameter update weighs the batch: a plain mean, or
// per-domain means recombined by the current sampling weights.
enum class LossWeighting { none, alpha };

struct DroConfig {
    double eta = 0.001;      // multiplicative step size
    double smoothing = 0.01; // uniform mixing coefficient c
    int steps = 1000;
    int batch_size = 512;
    uint64_t seed = 1;
    double learning_rate = 1e-3;  // proxy model optimizer
    double weight_decay = 1e-2;
    int average_from = 0;         // skip this many leading steps when averaging
    LossWeighting loss_weighting = LossWeighting::none;

    void validate() const;
};

// Size-proportional starting point: alpha_i = |D_i| / sum_j |D_j|.
DomainWeights initial_reference_weights(const std::vector<Domain>& domains);

// Uniform starting point for the proxy loop.
DomainWeights initial_proxy_weights(size_t k);

// (domain index, window index) pairs: domain by alpha, window uniform.
std::vector<std::pair<int, int>> sample_minibatch(const std::vector<Domain>& domains,
                                                  const DomainWeights& weights,
                                                  int batch_size, Rng& rng);

// One observed sample in the reweighting loop.
struct TraceSample {
    int domain_id = 0;
    int window_index = 0;
    double proxy_loss = 0.0;
    double baseline_loss = 0.0;
};

// Per-domain mean positive excess: lambda_i is the mean of
// max(proxy_loss - baseline_loss, 0) over this domain's samples that have
// strictly positive excess, and 0 when the domain has none in the batch.
std::vector<double> excess_lambda(const std::vector<TraceSample>& batch, size_t k);

// Resolves baselines from the table (missing entries are an error), then
// delegates to the overload above.
std::vector<double> excess_lambda(const std::vector<std::pair<int, int>>& batch,
                                  const std::vector<double>& proxy_losses,
                                  const BaselineTable& baseline, size_t k);

// Multiplicative update alpha_i *= exp(eta * lambda_i), renormalized, then
// smoothed toward uniform: (1 - c) * alpha + c / k.
DomainWeights update_weights(const DomainWeights& weights, const std::vector<double>& lambda,
                             double eta, double smoothing);

// Mean of the per-step weights from `from` (0-based) onward; the loop's
// returned mixture uses from = 0, averaging all steps.
DomainWeights average_weights(const std::vector<std::vector<double>>& history,
                              size_t from = 0);

struct TrajectoryRow {
    int step = 0;
    std::vector<double> alpha;      // after this step's update
    std::vector<double> lambda;
    std::vector<double> mean_loss;  // per-domain batch mean proxy loss, NaN if absent
};

struct WeightTrajectory {
    std::vector<TrajectoryRow> rows;
};

// Row-level writers so the loop can stream its trajectory as it runs.
void write_trajectory_header(std::ostream& out, const std::vector<std::string>& domain_names);
void write_trajectory_row(std::ostream& out, const TrajectoryRow& row);

void write_trajectory_csv(const std::filesystem::path& path, const WeightTrajectory& traj,
                          const std::vector<std::string>& domain_names);

// Parses a trajectory written by write_trajectory_csv (or streamed row by
// row in the same format). Domain names are recovered from the header.
WeightTrajectory read_trajectory_csv(const std::filesystem::path& path,
                                     std::vector<std::string>* domain_names = nullptr);

// Everything needed to recompute the weight sequence without the model.
struct StepTrace {
    std::vector<TraceSample> samples;
    std::vector<double> alpha_after;
};

struct ProxyTrace {
    size_t k = 0;
    double eta = 0.0;
    double smoothing = 0.0;
    int average_from = 0;
    std::vector<StepTrace> steps;
};

using StepSink = std::function<void(const TrajectoryRow&)>;

struct ProxyResult {
    DomainWeights average;
    WeightTrajectory trajectory;
    ProxyTrace trace;
    ReconModel proxy;
};

// The reweighting loop: a fresh proxy model trains on batches drawn by the
// evolving weights (canonical masks, so losses are comparable with the
// baseline table); each step updates the weights from that batch's excess
// losses before the optimizer step, and the returned mixture is the average
// of the per-step weights.
ProxyResult run_proxy(const std::vector<Domain>& domains,
                      const std::vector<ChannelStats>& stats, const BaselineTable& baseline,
                      const ModelConfig& model_cfg, const MaskConfig& mask_cfg,
                      const DroConfig& cfg, const StepSink& sink = nullptr);

// Recomputes every weight update from the recorded losses alone and checks it
// against the recorded weights; the first divergence beyond tol is an error.
// Returns the replayed average weights.
DomainWeights replay_trace(const ProxyTrace& trace, double tol = 1e-12);

void write_weights_json(const std::filesystem::path& path, const DomainWeights& weights,
                        const std::vector<std::string>& domain_names);
DomainWeights read_weights_json(const std::filesystem::path& path);

}  // namespace imumix
