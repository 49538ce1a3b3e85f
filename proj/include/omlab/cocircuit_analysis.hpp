#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omlab/matroid.hpp"
#include "omlab/oriented_matroid.hpp"

namespace omlab {

/// A positive cocircuit seen as a vertex: the zero set E \ support lists the
/// elements through it.
struct VertexView {
  SignedSet cocircuit;
  Subset zero_set;
};

enum class PairCase {
  ComplementSpans,
  IntersectionIndependent,
  OneRankStagnant,
  BothRankIncrease,
  DegenerateVertex,
};

std::string to_string(PairCase c);

struct PairClassification {
  std::size_t first = 0;
  std::size_t second = 0;
  PairCase tag = PairCase::DegenerateVertex;
  std::optional<Subset> double_circuit_found;
  /// Intersection-independent: the submodular bound rank(Z1) + rank(Z2) - |Z1 n Z2|.
  /// Both-rank-increase: rank(Z1 n Z2) + 2, an upper bound that is attained
  /// only when the second extra part is not spanned by the intersection and the first.
  std::optional<std::size_t> union_rank_bound;
  std::size_t union_rank = 0;
};

/// One view per positive cocircuit of `om`, in canonical order.
std::vector<VertexView> vertex_views(const OrientedMatroid& om);

/// Unordered index pairs (i < j) of views with disjoint zero sets.
std::vector<std::pair<std::size_t, std::size_t>> complementary_pairs(const OrientedMatroid& om, const Matroid& m);

/// Decision sequence over the zero sets Z1, Z2 with d = rank_M(E):
/// degenerate vertex (|Zi| != d), a spanning Zi, independent Z1 n Z2, a
/// stagnant extra part, and otherwise both parts raise the rank. The last
/// case reports a double circuit of the intersection, the others of the union
/// (or of the oversized zero set for a degenerate vertex).
PairClassification classify_pair(const Matroid& m, const VertexView& v1, const VertexView& v2);

/// rank(X) <= |X| - 2.
bool contains_double_circuit(const Matroid& m, Subset x);

/// Lexicographically first double circuit inside `x`, by enumeration.
std::optional<Subset> find_double_circuit(const Matroid& m, Subset x);

/// Stand-in for 1-skeleton adjacency: the zero sets share exactly d-1 elements.
bool adjacent_surrogate(const Matroid& m, const VertexView& v1, const VertexView& v2);

/// Classifications of all pairs (optionally only surrogate-adjacent ones).
std::vector<PairClassification> analyze_pairs(const OrientedMatroid& om, const Matroid& m, bool adjacent_only);

}  // namespace omlab
