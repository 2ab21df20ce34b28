#pragma once

#include <array>
#include <filesystem>
#include <vector>

#include "imumix/dro.hpp"
#include "imumix/types.hpp"

namespace imumix {

// Largest mixture the domains can serve at the given proportions without
// repeating a window, and the per-domain take.
struct MixturePlan {
    int64_t total = 0;              // N = floor(min over alpha_i>0 of |D_i| / alpha_i)
    std::vector<int64_t> counts;    // n_i = floor(alpha_i * N)
    std::vector<double> alpha;
    std::vector<int64_t> available; // |D_i|, what the plan was computed from

    // Share of all available windows that the mixture actually uses.
    double used_fraction() const;
};

// Errors with Errc::infeasible when the plan would be empty (some domain with
// positive weight has no windows to give).
MixturePlan mixture_sizes(const std::vector<int64_t>& sizes, const DomainWeights& weights);

struct Mixture {
    Domain mixed;                                 // window_index renumbered 0..N-1
    std::vector<std::array<int, 2>> provenance;   // (source domain_id, source window_index)
};

// Draws counts[i] windows from each domain without replacement (seeded,
// deterministic) and concatenates them in domain order, ascending source
// index. Window fields keep their source session metadata.
Mixture recombine(const std::vector<Domain>& domains, const MixturePlan& plan,
                  uint64_t seed);

// Writes the mixture as a domain store plus mixture_manifest.json (plan and
// per-domain accounting) and provenance.csv (out_index,domain_id,window_index).
void export_mixture(const std::filesystem::path& dir, const Mixture& mixture,
                    const MixturePlan& plan, const std::vector<std::string>& domain_names,
                    uint64_t seed);

}  // namespace imumix
