#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "imumix/common.hpp"
#include "imumix/rng.hpp"

namespace imumix {

// Masked-reconstruction transformer sized for short IMU windows: pre-norm
// blocks with RMS normalization, multi-head self-attention, a gated SiLU
// feed-forward, learned positional embeddings, and a linear decoder back to
// channel space. Gradients are computed analytically (see model.cpp).
struct ModelConfig {
    int window_len = 120;
    int channels = 6;
    int d_model = 32;
    int num_heads = 2;
    int num_layers = 3;
    int ff_multiplier = 4;
    uint64_t init_seed = 1;

    int d_ff() const { return d_model * ff_multiplier; }
    int head_dim() const { return d_model / num_heads; }
    void validate() const;
};

// Masking policy for the reconstruction task: a few whole channels plus a
// fraction of whole timesteps, masked jointly (union of the two sets).
struct MaskConfig {
    int n_channels = 3;
    double time_rate = 0.7;
};

struct MaskSpec {
    int window_len = 0;
    int channels = 0;
    std::vector<int> masked_channels;  // sorted, unique
    std::vector<int> masked_rows;      // sorted, unique
    std::vector<uint8_t> cell;         // window_len * channels, 1 where masked
    int64_t masked_count = 0;

    bool is_masked(int r, int c) const {
        return cell[static_cast<size_t>(r) * channels + c] != 0;
    }
};

// Draws n_channels distinct channels and ceil(time_rate * window_len)
// distinct rows. Fully masking every row (or more channels than exist) is a
// config error: the loss would see no unmasked context or be ill-defined.
MaskSpec make_mask(int window_len, int channels, int n_channels, double time_rate,
                   uint64_t seed);

// Every consumer of a window's mask (baseline tables, proxy batches, replay)
// derives the seed the same way so losses stay comparable across stages.
inline constexpr uint64_t kMaskSalt = 0x696d756d69784d4bull;
inline uint64_t canonical_mask_seed(int domain_id, int window_index) {
    return mix_u64(mix_u64(kMaskSalt, static_cast<uint64_t>(domain_id)),
                   static_cast<uint64_t>(window_index));
}
inline MaskSpec canonical_mask(const ModelConfig& cfg, const MaskConfig& mc,
                               int domain_id, int window_index) {
    return make_mask(cfg.window_len, cfg.channels, mc.n_channels, mc.time_rate,
                     canonical_mask_seed(domain_id, window_index));
}

struct TensorInfo {
    std::string name;
    size_t offset = 0;
    int rows = 0, cols = 0;
    size_t count() const { return static_cast<size_t>(rows) * cols; }
};

// Flat parameter vector layout, in checkpoint order. Matrices are row-major
// with fan-in rows, so y = x W needs no transpose.
std::vector<TensorInfo> param_layout(const ModelConfig& cfg);
size_t param_count(const ModelConfig& cfg);

struct ReconModel {
    ModelConfig cfg;
    std::vector<double> params;
};

// Seeded initialization: weights ~ N(0, 1/fan_in), positional table and mask
// token ~ N(0, 0.02^2), biases zero, norm gains one. Each tensor draws from
// its own stream keyed by name, so the init is stable under layout growth.
ReconModel init_model(const ModelConfig& cfg);

// Offsets into the flat parameter vector, resolved once per workspace.
struct ParamOffsets {
    struct Layer {
        size_t attn_gain, wq, bq, wk, bk, wv, bv, wo, bo;
        size_t ff_gain, w_gate, b_gate, w_up, b_up, w_down, b_down;
    };
    size_t embed_w = 0, embed_b = 0, pos = 0, mask_token = 0;
    std::vector<Layer> layers;
    size_t final_gain = 0, dec_w = 0, dec_b = 0;
    size_t total = 0;
};
ParamOffsets compute_offsets(const ModelConfig& cfg);

// Reusable activation storage for one sample's forward and backward pass.
struct Workspace {
    explicit Workspace(const ModelConfig& cfg);

    ModelConfig cfg;
    ParamOffsets off;

    std::vector<double> x_masked;  // L*C, input with mask token substituted
    std::vector<double> h;         // L*d, running hidden state
    std::vector<double> y;         // L*C, reconstruction

    // Saved per layer for the backward pass.
    std::vector<double> h_in, attn_normed, q, k, v, ctx, h_mid, ff_normed;
    std::vector<double> probs;                       // layers*heads*L*L
    std::vector<double> gate_pre, up, ff_act;        // layers*L*d_ff
    std::vector<double> h_out, final_normed;         // L*d
    std::vector<double> attn_inv_r, ff_inv_r, final_inv_r;

    // Backward scratch.
    std::vector<double> dh, dblock, dq, dk, dv, dctx, dscores;
    std::vector<double> dgate, dup, dact, dxm;
};

// Runs the forward pass on a standardized window (window_len * channels,
// row-major) and leaves the reconstruction in ws.y.
void forward(const ReconModel& model, const double* x_std, const MaskSpec& mask,
             Workspace& ws);

// Mean squared error over masked cells only.
double masked_mse(const double* y, const double* x_std, const MaskSpec& mask);

// forward + masked_mse.
double sample_loss(const ReconModel& model, const double* x_std, const MaskSpec& mask,
                   Workspace& ws);

// Runs forward and analytic backward, accumulating scale * dLoss/dparams into
// grad (size param_count). Returns the sample loss. Non-finite loss is a
// numeric error.
double loss_and_gradient(const ReconModel& model, const double* x_std,
                         const MaskSpec& mask, Workspace& ws, std::span<double> grad,
                         double scale);

// Binary checkpoint: magic, JSON header (config + tensor table), float64
// little-endian parameters. Loading validates shape against the header.
void save_checkpoint(const std::filesystem::path& path, const ReconModel& model);
ReconModel load_checkpoint(const std::filesystem::path& path);

}  // namespace imumix
