#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "omlab/ground_set.hpp"

namespace omlab {

/// A matroid given by its circuit family. Immutable once built; the
/// dependence table (one flag per subset of the ground set) is derived at
/// construction and backs every rank and independence query.
class Matroid {
 public:
  /// Builds without checking (M1)-(M3). Callers must already know the family
  /// is a valid circuit system; use validate_matroid otherwise.
  static Matroid unchecked(GroundSet ground, std::vector<Subset> circuits);

  const GroundSet& ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return ground_.size(); }
  /// Circuits in lexicographic order, without duplicates.
  const std::vector<Subset>& circuits() const noexcept { return circuits_; }

  /// True iff some circuit is contained in `x`.
  bool is_dependent(Subset x) const { return dependent_[x.bits] != 0; }
  bool is_independent(Subset x) const { return !is_dependent(x); }

  /// Greedy augmentation in canonical element order.
  std::size_t rank(Subset x) const;
  std::size_t rank() const noexcept { return full_rank_; }

  Subset closure(Subset x) const;
  /// The greedy basis of `x` in canonical order (lexicographically first).
  Subset greedy_basis(Subset x) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.circuits_ == b.circuits_;
  }

 private:
  Matroid(GroundSet ground, std::vector<Subset> circuits);

  GroundSet ground_;
  std::vector<Subset> circuits_;
  std::vector<std::uint8_t> dependent_;
  std::size_t full_rank_ = 0;
};

/// Checks (M1)-(M3) exhaustively and returns the matroid, or throws
/// AxiomViolation naming the offending sets.
Matroid validate_matroid(GroundSet ground, std::vector<Subset> circuits);

inline std::size_t rank(const Matroid& m, Subset x) { return m.rank(x); }
inline bool is_independent(const Matroid& m, Subset x) { return m.is_independent(x); }
/// rank(x) == rank(E).
inline bool spans(const Matroid& m, Subset x) { return m.rank(x) == m.rank(); }

/// Independent sets of the dual are the sets whose complement contains a basis.
Matroid dual_matroid(const Matroid& m);

/// All D with rank(D) = |D|-2 and rank(D\e) = |D|-2 for each e in D, sorted.
std::vector<Subset> double_circuits(const Matroid& m);

/// At most one element per block. Throws PartitionInvalid unless the blocks
/// are nonempty, pairwise disjoint and cover the ground set.
Matroid partition_matroid(const GroundSet& ground, const std::vector<Subset>& blocks);

Matroid free_matroid(const GroundSet& ground);
/// U_{k,n}: every (k+1)-subset is a circuit.
Matroid uniform_matroid(const GroundSet& ground, std::size_t k);

/// Appends each label as a loop; rank is unchanged.
Matroid add_loops(const Matroid& m, const std::vector<std::string>& new_labels);
/// Appends each label as a coloop (an element of no circuit).
Matroid add_coloops(const Matroid& m, const std::vector<std::string>& new_labels);

/// Deletion of E \ keep, relabelled onto the restricted ground set.
Matroid restrict_to(const Matroid& m, Subset keep);

}  // namespace omlab
