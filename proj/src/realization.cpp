#include "omlab/realization.hpp"

#include <algorithm>
#include <unordered_set>

#include "omlab/errors.hpp"

namespace omlab {

GroundSet PointConfig::ground() const {
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const auto& p : points) labels.push_back(p.label);
  return GroundSet(std::move(labels));
}

bool PointConfig::colored() const {
  return !points.empty() &&
         std::all_of(points.begin(), points.end(), [](const LabeledPoint& p) { return p.color.has_value(); });
}

std::vector<Subset> PointConfig::color_blocks() const {
  if (!colored()) throw InvalidArgument("configuration is not fully colored");
  std::size_t count = 0;
  for (const auto& p : points) count = std::max(count, *p.color + 1);
  std::vector<Subset> blocks(count);
  for (std::size_t i = 0; i < points.size(); ++i) blocks[*points[i].color] = blocks[*points[i].color].with(i);
  return blocks;
}

void validate_config(const PointConfig& config) {
  if (config.dim == 0) throw InvalidArgument("dimension must be positive");
  if (config.anchor.size() != config.dim) throw InvalidArgument("anchor has the wrong dimension");
  if (config.points.empty()) throw InvalidArgument("configuration has no points");
  if (config.points.size() > kMaxGroundSize) {
    throw GroundTooLarge("configuration has " + std::to_string(config.points.size()) + " points");
  }
  std::unordered_set<std::string> labels;
  for (const auto& p : config.points) {
    if (p.coords.size() != config.dim) throw InvalidArgument("point '" + p.label + "' has the wrong dimension");
    if (!labels.insert(p.label).second) throw LabelCollision("duplicate point label '" + p.label + "'");
    if (p.coords == config.anchor) throw AnchorInSet("anchor coincides with point '" + p.label + "'");
  }
}

namespace {

ColumnMatrix offsets(const PointConfig& config, Subset s) {
  ColumnMatrix cols;
  for (std::size_t i : s.indices()) {
    Vector v(config.dim);
    for (std::size_t k = 0; k < config.dim; ++k) v[k] = config.points[i].coords[k] - config.anchor[k];
    cols.push_back(std::move(v));
  }
  return cols;
}

// Columns (p, 1) so that affine combinations become linear ones.
ColumnMatrix homogenised(const std::vector<LabeledPoint>& points, Subset s) {
  ColumnMatrix cols;
  for (std::size_t i : s.indices()) {
    Vector v = points[i].coords;
    v.emplace_back(1);
    cols.push_back(std::move(v));
  }
  return cols;
}

template <typename Fn>
void for_each_of_size(std::size_t n, std::size_t k, Fn&& fn) {
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t s = 0; s < count; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == k) fn(Subset{s});
  }
}

}  // namespace

std::size_t affine_rank(const PointConfig& config) {
  validate_config(config);
  return matrix_rank(offsets(config, Subset::full(config.points.size())));
}

std::vector<Dependency> minimal_dependencies(const PointConfig& config) {
  validate_config(config);
  const std::size_t n = config.points.size();
  const std::size_t r = affine_rank(config);
  std::vector<std::uint8_t> independent(std::size_t{1} << n, 0);
  independent[0] = 1;
  std::vector<Dependency> out;
  // A circuit has at most r+1 elements; sizes are visited in increasing order.
  for (std::size_t k = 1; k <= std::min(n, r + 1); ++k) {
    for_each_of_size(n, k, [&](Subset s) {
      for (std::size_t e : s.indices()) {
        if (!independent[s.without(e).bits]) return;
      }
      const ColumnMatrix cols = offsets(config, s);
      auto kernel = null_space(cols);
      if (kernel.empty()) {
        independent[s.bits] = 1;
        return;
      }
      if (kernel.size() != 1) throw InternalInconsistency("minimal dependent set with a multi-dimensional kernel");
      out.push_back({s, std::move(kernel.front())});
    });
  }
  std::sort(out.begin(), out.end(), [](const Dependency& a, const Dependency& b) { return lex_less(a.support, b.support); });
  return out;
}

OrientedMatroid om_from_points(const PointConfig& config) {
  const auto deps = minimal_dependencies(config);
  std::vector<SignedSet> reps;
  reps.reserve(deps.size());
  for (const auto& dep : deps) {
    SignedSet x;
    const auto idx = dep.support.indices();
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const int sg = sign(dep.alpha[j]);
      if (sg > 0) x.pos = x.pos.with(idx[j]);
      if (sg < 0) x.neg = x.neg.with(idx[j]);
    }
    if (x.support() != dep.support) throw InternalInconsistency("zero coefficient in a minimal dependency");
    reps.push_back(x);
  }
  OrientedMatroid om = validate_representatives(config.ground(), std::move(reps));
  if (om.rank() != affine_rank(config)) throw InternalInconsistency("oriented matroid rank differs from linear rank");
  return om;
}

HullOracle::HullOracle(const std::vector<LabeledPoint>& points, const Vector& anchor)
    : HullOracle(points, anchor, Subset::full(points.size())) {}

HullOracle::HullOracle(const std::vector<LabeledPoint>& points, const Vector& anchor, Subset within) {
  if (points.size() > kMaxGroundSize) throw GroundTooLarge("too many points");
  const std::size_t dim = anchor.size();
  Vector rhs = anchor;
  rhs.emplace_back(1);
  // Any point of conv S lies in the relative interior of conv T for an
  // affinely independent T inside S with |T| <= d+1.
  for (std::size_t k = 1; k <= std::min(within.size(), dim + 1); ++k) {
    for_each_of_size(points.size(), k, [&](Subset t) {
      if (!t.subset_of(within)) return;
      auto lambda = solve_unique(homogenised(points, t), rhs);
      if (!lambda) return;
      for (const auto& c : *lambda) {
        if (sgn(c) <= 0) return;
      }
      feasible_.push_back({t, std::move(*lambda)});
    });
  }
  std::sort(feasible_.begin(), feasible_.end(),
            [](const HullCertificate& a, const HullCertificate& b) { return lex_less(a.support, b.support); });
}

std::optional<HullCertificate> HullOracle::query(Subset s) const {
  for (const auto& cert : feasible_) {
    if (cert.support.subset_of(s)) return cert;
  }
  return std::nullopt;
}

std::optional<HullCertificate> hull_membership(const std::vector<LabeledPoint>& points, Subset s, const Vector& x) {
  return HullOracle(points, x, s).query(s);
}

bool verify_certificate(const std::vector<LabeledPoint>& points, const HullCertificate& cert, const Vector& x) {
  const auto idx = cert.support.indices();
  if (idx.size() != cert.coefficients.size() || idx.size() > x.size() + 1 || idx.empty()) return false;
  Rational total = 0;
  Vector combo(x.size(), Rational(0));
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const Rational& c = cert.coefficients[j];
    if (sgn(c) < 0 || idx[j] >= points.size()) return false;
    total += c;
    for (std::size_t k = 0; k < x.size(); ++k) combo[k] += c * points[idx[j]].coords.at(k);
  }
  return total == 1 && combo == x;
}

std::string format_certificate(const GroundSet& ground, const HullCertificate& cert) {
  std::string out = "{";
  const auto idx = cert.support.indices();
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (j) out += ", ";
    out += ground.label(idx[j]) + ":" + to_string(cert.coefficients[j]);
  }
  return out + "}";
}

namespace {

std::vector<Subset> checked_color_blocks(const PointConfig& config) {
  auto blocks = config.color_blocks();
  if (blocks.size() != config.dim + 1) {
    throw InvalidArgument("a colorful instance in dimension " + std::to_string(config.dim) + " needs " +
                          std::to_string(config.dim + 1) + " colors, found " + std::to_string(blocks.size()));
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) throw InvalidArgument("color " + std::to_string(i) + " has no points");
  }
  return blocks;
}

}  // namespace

HolmsenInstance build_holmsen_instance(const PointConfig& config) {
  validate_config(config);
  const auto blocks = checked_color_blocks(config);
  const HullOracle oracle(config.points, config.anchor);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!oracle.query(blocks[i])) {
      throw HypothesisUnmet("anchor is not in the convex hull of color " + std::to_string(i));
    }
  }
  OrientedMatroid om = om_from_points(config);
  Matroid m = partition_matroid(config.ground(), blocks);
  if (m.rank() != config.dim + 1 || m.rank() <= om.rank()) {
    throw InternalInconsistency("colorful instance violates rank(E) = d+1 > r");
  }
  return HolmsenInstance(std::move(om), std::move(m));
}

Subset lift_witness_to_colorful(Subset witness, const PointConfig& config) {
  const auto blocks = checked_color_blocks(config);
  const GroundSet ground = config.ground();
  Subset out = witness;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Subset hit = witness & blocks[i];
    if (hit.size() > 1) {
      throw WitnessNotTransversal("witness meets color " + std::to_string(i) + " in " + ground.format(hit));
    }
    if (hit.empty()) out = out.with(blocks[i].first());
  }
  return out;
}

}  // namespace omlab
