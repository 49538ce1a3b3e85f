#include "omlab/generator.hpp"

#include <algorithm>
#include <numeric>

#include "omlab/errors.hpp"

namespace omlab {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

namespace {

void check_params(const GeneratorParams& p) {
  if (p.dim < 1 || p.dim > 3) throw InvalidArgument("dimension must be 1, 2 or 3");
  if (p.span_dim > p.dim) throw InvalidArgument("span dimension exceeds the dimension");
  if (p.min_per_color < 1 || p.min_per_color > p.max_per_color) throw InvalidArgument("bad points-per-color range");
  if (p.coord_lo > p.coord_hi) throw InvalidArgument("bad coordinate range");
  if ((p.dim + 1) * p.max_per_color > kMaxGroundSize) {
    throw GroundTooLarge("up to " + std::to_string((p.dim + 1) * p.max_per_color) + " points requested");
  }
}

std::string letter_label(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

}  // namespace

InstanceBundle gen_random(const GeneratorParams& params) {
  check_params(params);
  SplitMix64 rng(params.seed);
  const std::size_t d = params.dim;
  const std::size_t live = params.span_dim == 0 ? d : params.span_dim;
  const Vector origin(d, Rational(0));

  PointConfig config;
  config.dim = d;
  config.anchor = origin;
  for (std::size_t color = 0; color <= d; ++color) {
    const auto count = static_cast<std::size_t>(
        rng.uniform(static_cast<std::int64_t>(params.min_per_color), static_cast<std::int64_t>(params.max_per_color)));
    std::vector<LabeledPoint> block;
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < params.max_retries && !accepted; ++attempt) {
      block.clear();
      bool at_origin = false;
      for (std::size_t k = 0; k < count; ++k) {
        LabeledPoint p;
        p.coords.assign(d, Rational(0));
        for (std::size_t c = 0; c < live; ++c) p.coords[c] = Rational(rng.uniform(params.coord_lo, params.coord_hi));
        p.color = color;
        at_origin = at_origin || p.coords == origin;
        block.push_back(std::move(p));
      }
      if (at_origin) continue;
      accepted = hull_membership(block, Subset::full(block.size()), origin).has_value();
    }
    if (!accepted) {
      throw GenerationExhausted("no admissible points for color " + std::to_string(color) + " after " +
                                std::to_string(params.max_retries) + " attempts");
    }
    for (auto& p : block) {
      p.label = letter_label(config.points.size());
      config.points.push_back(std::move(p));
    }
  }
  validate_config(config);

  InstanceBundle bundle;
  bundle.points = std::move(config);
  bundle.provenance.seed = params.seed;
  return bundle;
}

Matroid random_partition_matroid(const GroundSet& ground, std::size_t blocks, SplitMix64& rng) {
  const std::size_t n = ground.size();
  if (blocks < 1 || blocks > n) throw InvalidArgument("block count out of range");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i - 1)))]);
  }
  // The first `blocks` shuffled elements seed the blocks; the rest land anywhere.
  std::vector<Subset> parts(blocks);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t b = i < blocks ? i : static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(blocks - 1)));
    parts[b] = parts[b].with(order[i]);
  }
  return partition_matroid(ground, parts);
}

}  // namespace omlab
