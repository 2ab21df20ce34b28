#pragma once

#include <filesystem>

#include "imumix/types.hpp"

namespace imumix {

// On-disk layout of a processed domain, one directory per domain:
//   manifest.json   counts, shape, label histogram
//   windows.f32     little-endian float32, [window_count x window_len x 6]
//   labels.csv      window_index,label,session_id,session_start_row,position
void write_domain_store(const std::filesystem::path& dir, const Domain& domain);

Domain read_domain_store(const std::filesystem::path& dir);

}  // namespace imumix
