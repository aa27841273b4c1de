#pragma once

#include <string>

#include "strata/field.hpp"

namespace strata {

/// Field snapshot file: one ASCII header line
///   STRATA1 nx ny nz parity time tau
/// followed by nx*ny*nz little-endian float64 samples, x fastest, then y,
/// then z. The reader validates the sample count against the header.
void write_snapshot(const std::string& path, const Field& f, double time, double tau);

struct Snapshot {
    Field field;
    double time = 0.0;
    double tau = 0.0;
};

Snapshot read_snapshot(const std::string& path);

}  // namespace strata
