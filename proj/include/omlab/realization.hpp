#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "omlab/ground_set.hpp"
#include "omlab/holmsen.hpp"
#include "omlab/matroid.hpp"
#include "omlab/oriented_matroid.hpp"
#include "omlab/rational.hpp"

namespace omlab {

struct LabeledPoint {
  std::string label;
  Vector coords;
  std::optional<std::size_t> color;
};

/// Points in Q^d (a multiset; equal coordinates are allowed) with an anchor x.
struct PointConfig {
  std::size_t dim = 0;
  Vector anchor;
  std::vector<LabeledPoint> points;

  GroundSet ground() const;
  bool colored() const;
  /// Block i holds the points of color i; requires every point to be colored.
  std::vector<Subset> color_blocks() const;
};

/// Checks dimensions, label uniqueness and size. Throws AnchorInSet when x
/// coincides with a point and InvalidArgument otherwise.
void validate_config(const PointConfig& config);

/// x = sum coefficient_i * p_i over `support`, coefficients aligned with
/// support.indices().
struct HullCertificate {
  Subset support;
  std::vector<Rational> coefficients;
};

/// An inclusion-minimal linear dependency sum alpha_p (p - x) = 0.
struct Dependency {
  Subset support;
  Vector alpha;  // aligned with support.indices(); unique up to scale
};

/// Minimal dependencies of {p - x}, in lexicographic support order.
std::vector<Dependency> minimal_dependencies(const PointConfig& config);

/// Exact rank of the vectors {p - x}.
std::size_t affine_rank(const PointConfig& config);

/// Signed circuits from the signs of each minimal dependency, validated.
OrientedMatroid om_from_points(const PointConfig& config);

/// Caches convex-hull membership for every affinely independent subset of at
/// most d+1 points, so that each query is a scan of the feasible supports.
class HullOracle {
 public:
  HullOracle(const std::vector<LabeledPoint>& points, const Vector& anchor, Subset within);
  HullOracle(const std::vector<LabeledPoint>& points, const Vector& anchor);

  /// Lexicographically first support T inside `s` with x in the relative
  /// interior of conv T.
  std::optional<HullCertificate> query(Subset s) const;

  const std::vector<HullCertificate>& feasible() const noexcept { return feasible_; }

 private:
  std::vector<HullCertificate> feasible_;
};

std::optional<HullCertificate> hull_membership(const std::vector<LabeledPoint>& points, Subset s,
                                               const Vector& x);

/// Coefficients nonnegative, summing to 1, reproducing x exactly, and
/// |support| <= d+1.
bool verify_certificate(const std::vector<LabeledPoint>& points, const HullCertificate& cert, const Vector& x);

std::string format_certificate(const GroundSet& ground, const HullCertificate& cert);

/// (O, M) with O from the points and M the partition matroid of the colors.
/// Throws HypothesisUnmet when x is outside conv P_i for some color i.
HolmsenInstance build_holmsen_instance(const PointConfig& config);

/// Extends a transversal witness to exactly one point per color, filling each
/// missing color with its first point. Throws WitnessNotTransversal.
Subset lift_witness_to_colorful(Subset witness, const PointConfig& config);

}  // namespace omlab
