#pragma once

#include <string>

#include "mmnls/ssf.hpp"

namespace mmnls {

/// CSV history, columns: z,T,mode,re,im (one row per sample, mode index 1-based).
void write_field_csv(const ComplexFieldGrid& grid, const std::string& path);

/// Compact binary layout:
///   bytes 0..3   magic "MMFG"
///   u32          version (1)
///   u32          n_modes
///   u32          n_z (checkpoint count)
///   u32          n_t
///   f64          t_max
///   f64[n_z]     z checkpoints
///   f64[...]     per mode, row-major over (z, T): re, im interleaved
/// Little-endian, doubles in IEEE-754 binary64.
void write_field_binary(const ComplexFieldGrid& grid, const std::string& path);
ComplexFieldGrid read_field_binary(const std::string& path);

}  // namespace mmnls
