// Brute-force reference counts, independent of the enumeration and the
// plane-offset membership used by the library.
#pragma once

#include "latseg/lattice.hpp"

namespace latseg {

/// Counts segment points by nested loops over the cube [-R, R]^(d-1) (the
/// last coordinate solved directly) and tests each point against the two
/// balls |x - R beta|^2 <= rho in 256-bit binary floating point. Points
/// within 2^-200 of a ball boundary widen the returned interval.
/// Requires d <= 4 and n <= 10^4.
CountResult brute_force_segment_count_oracle(const Segment& seg);

}  // namespace latseg
