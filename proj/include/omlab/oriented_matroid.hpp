#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omlab/ground_set.hpp"
#include "omlab/matroid.hpp"

namespace omlab {

/// A signed subset (X+, X-) with disjoint parts.
struct SignedSet {
  Subset pos;
  Subset neg;

  constexpr Subset support() const { return pos | neg; }
  constexpr SignedSet negated() const { return {neg, pos}; }
  constexpr bool is_positive() const { return neg.empty() && !pos.empty(); }
  /// The smaller of X and -X: the first support element is positive.
  constexpr bool is_canonical() const { return support().empty() || pos.contains(support().first()); }
  constexpr SignedSet canonical() const { return is_canonical() ? *this : negated(); }

  friend constexpr bool operator==(SignedSet, SignedSet) = default;
};

/// Orders by support, then by sign vector in element order with + before -.
constexpr bool signed_less(SignedSet a, SignedSet b) {
  if (a.support() != b.support()) return lex_less(a.support(), b.support());
  const std::uint32_t diff = a.pos.bits ^ b.pos.bits;
  if (diff == 0) return false;
  return (a.pos.bits & diff & (~diff + 1)) != 0;
}

/// `{+a,+b,-c}`-style rendering in canonical element order.
std::string format_signed(const GroundSet& ground, SignedSet x);

/// Supports disjoint, or the restrictions to the common support are
/// neither equal nor opposite.
bool orthogonal(SignedSet x, SignedSet y);

/// Oriented matroid given by its signed circuits. Both X and -X are stored;
/// the family is ordered as canonical representative followed by its
/// negation, pairs sorted by support.
class OrientedMatroid {
 public:
  /// Builds from canonical representatives without checking (O1)-(O3); the
  /// underlying matroid must be supplied or is derived unchecked.
  static OrientedMatroid unchecked(GroundSet ground, std::vector<SignedSet> representatives);
  static OrientedMatroid unchecked(std::vector<SignedSet> representatives, Matroid underlying);

  const GroundSet& ground() const noexcept { return underlying_.ground(); }
  std::size_t size() const noexcept { return underlying_.size(); }
  std::size_t rank() const noexcept { return underlying_.rank(); }
  const Matroid& underlying() const noexcept { return underlying_; }

  /// One canonical representative per +/- pair, sorted by support.
  const std::vector<SignedSet>& representatives() const noexcept { return reps_; }
  /// Every signed circuit, both orientations.
  std::vector<SignedSet> circuits() const;

  /// The canonical circuit with exactly this support, if any.
  std::optional<SignedSet> circuit_with_support(Subset support) const;

  friend bool operator==(const OrientedMatroid& a, const OrientedMatroid& b) {
    return a.ground() == b.ground() && a.reps_ == b.reps_;
  }

 private:
  OrientedMatroid(std::vector<SignedSet> reps, Matroid underlying);

  std::vector<SignedSet> reps_;
  Matroid underlying_;
  std::vector<std::int32_t> by_support_;
};

/// Checks (O1)-(O3) on the full family (both orientations must be present)
/// and returns the oriented matroid, or throws AxiomViolation.
OrientedMatroid validate_oriented_matroid(GroundSet ground, std::vector<SignedSet> circuits);

/// Same check on a family given by one representative per +/- pair.
OrientedMatroid validate_representatives(GroundSet ground, std::vector<SignedSet> representatives);

/// Circuit supports as a validated matroid; failures surface as InternalInconsistency.
Matroid underlying_matroid(const OrientedMatroid& om);

/// Cocircuits: supports are circuits of the dual underlying matroid, signs
/// are the unique (up to negation) assignment orthogonal to every circuit.
OrientedMatroid dual_oriented_matroid(const OrientedMatroid& om);

/// Supports of circuits with empty negative part, sorted.
std::vector<Subset> positive_circuits(const OrientedMatroid& om);

/// Lexicographically smallest positive circuit contained in `s`.
std::optional<Subset> contains_positive_circuit(const OrientedMatroid& om, Subset s);

/// Appends coloops: the circuit family is unchanged, rank grows by the count.
OrientedMatroid add_coloops(const OrientedMatroid& om, const std::vector<std::string>& new_labels);

/// Restriction to `keep` (circuits with support inside it), relabelled.
OrientedMatroid restrict_to(const OrientedMatroid& om, Subset keep);

}  // namespace omlab
