#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "omlab/matroid.hpp"
#include "omlab/oriented_matroid.hpp"

namespace omlab {

/// An oriented matroid O of rank r and a matroid M on the same ground set.
class HolmsenInstance {
 public:
  /// Throws GroundMismatch unless both share one ground set.
  HolmsenInstance(OrientedMatroid om, Matroid matroid);

  const OrientedMatroid& om() const noexcept { return om_; }
  const Matroid& matroid() const noexcept { return matroid_; }
  const GroundSet& ground() const noexcept { return om_.ground(); }
  std::size_t om_rank() const noexcept { return om_.rank(); }

 private:
  OrientedMatroid om_;
  Matroid matroid_;
};

/// A matroid M with rank(E) = r-1 and an oriented matroid O of rank r.
/// The cocircuits of O are computed once at construction.
class DualInstance {
 public:
  DualInstance(Matroid matroid, OrientedMatroid om);

  const Matroid& matroid() const noexcept { return matroid_; }
  const OrientedMatroid& om() const noexcept { return om_; }
  const OrientedMatroid& cocircuits() const noexcept { return dual_om_; }
  const GroundSet& ground() const noexcept { return om_.ground(); }

 private:
  Matroid matroid_;
  OrientedMatroid om_;
  OrientedMatroid dual_om_;
};

/// General: rank(E) > r. Tight: rank(E) = r+1.
enum class HypothesisMode { General, Tight };

struct TraceEntry {
  Subset checked;
  std::optional<Subset> found;
};

/// Outcome of a hypothesis check and, when requested, the witness search.
/// A missing witness under a holding hypothesis is reported, not thrown.
struct WitnessReport {
  bool hypothesis_holds = false;
  std::vector<Subset> violators;
  std::vector<TraceEntry> trace;
  std::optional<Subset> witness;
  bool counterexample = false;
};

/// Inclusion-minimal S with rank(E\S) = r-1: complements of the rank-(r-1) flats.
std::vector<Subset> corank1_complements(const Matroid& m, std::size_t r);

/// Every minimal S from corank1_complements must contain a positive circuit.
/// Throws RankMismatch when rank(E) > r (General) or rank(E) = r+1 (Tight) fails.
WitnessReport check_hypothesis(const HolmsenInstance& inst, HypothesisMode mode = HypothesisMode::General);

/// Compares the verdicts of quantifying over {S : rank(E\S) < r} and over
/// {S : rank(E\S) = r-1} by full subset enumeration.
bool claim1_equivalent(const HolmsenInstance& inst);

/// Restricts M to the closure of the first r+1 elements of its greedy basis
/// and pads with k fresh loops of M (coloops of O) so that O keeps rank r.
/// Throws NothingToReduce when rank(E) = r+1 already.
HolmsenInstance reduce_rank(const HolmsenInstance& inst);

/// Lexicographically smallest positive circuit independent in M.
/// Throws HypothesisUnmet when the hypothesis fails.
WitnessReport find_witness(const HolmsenInstance& inst, HypothesisMode mode = HypothesisMode::General);

/// Every double circuit of M must contain a positive cocircuit of O.
WitnessReport check_dual_hypothesis(const DualInstance& inst);

/// Lexicographically smallest positive cocircuit whose complement spans M.
WitnessReport find_dual_witness(const DualInstance& inst);

/// (O*, M*): a tight instance with r* = |E| - r and rank_{M*}(E) = r* + 1.
HolmsenInstance dualize_instance(const DualInstance& inst);

/// (M*, O*) for a tight instance, the inverse of dualize_instance.
DualInstance dual_instance_of(const HolmsenInstance& inst);

/// Reserved fresh labels `_e1, _e2, ...` not already used in `ground`.
std::vector<std::string> fresh_labels(const GroundSet& ground, std::size_t count);

}  // namespace omlab
