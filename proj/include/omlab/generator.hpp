#pragma once

#include <cstddef>
#include <cstdint>

#include "omlab/io.hpp"
#include "omlab/matroid.hpp"

namespace omlab {

/// SplitMix64 (Steele, Lea, Flood): state += 0x9E3779B97F4A7C15, then the
/// output is mixed with multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB
/// and shifts 30, 27, 31. Fixed here so fixtures reproduce on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// lo + next() mod (hi - lo + 1).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// An independent stream seeded from this one.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

struct GeneratorParams {
  std::uint64_t seed = 1;
  std::size_t dim = 2;
  std::size_t min_per_color = 2;
  std::size_t max_per_color = 4;
  std::int64_t coord_lo = -5;
  std::int64_t coord_hi = 5;
  /// Points live in the first span_dim coordinates (0 means all of them);
  /// a smaller value lowers the oriented matroid rank below d.
  std::size_t span_dim = 0;
  std::size_t max_retries = 10000;
};

/// d+1 color classes labelled a, b, c, ... around the origin, each
/// rejection-sampled until the origin lies in its convex hull. Throws
/// GenerationExhausted after max_retries failures for one class.
InstanceBundle gen_random(const GeneratorParams& params);

/// Random partition of the ground set into `blocks` nonempty blocks.
Matroid random_partition_matroid(const GroundSet& ground, std::size_t blocks, SplitMix64& rng);

}  // namespace omlab
