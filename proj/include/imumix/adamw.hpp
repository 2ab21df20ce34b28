#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "imumix/common.hpp"

namespace imumix {

// Adam with decoupled weight decay: decay is applied to the parameters
// directly, not mixed into the gradient moments.
struct AdamWConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 1e-2;

    void validate() const;
};

class AdamW {
  public:
    AdamW(size_t n, AdamWConfig cfg = {});

    void step(std::span<double> params, std::span<const double> grad);

    int64_t steps_taken() const { return t_; }
    const std::vector<double>& m() const { return m_; }
    const std::vector<double>& v() const { return v_; }

  private:
    AdamWConfig cfg_;
    std::vector<double> m_, v_;
    int64_t t_ = 0;
};

}  // namespace imumix
