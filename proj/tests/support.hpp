#pragma once

// Test-only oracles and corpora. The oracles below scan circuit lists and
// subsets directly and never go through the library's dependence tables,
// greedy rank or flat enumeration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omlab/generator.hpp"
#include "omlab/holmsen.hpp"
#include "omlab/matroid.hpp"
#include "omlab/oriented_matroid.hpp"
#include "omlab/realization.hpp"

namespace omlab::testing {

GroundSet letters(std::size_t n);

/// Largest independent subset of x, by enumeration of all subsets of x.
std::size_t brute_rank(const std::vector<Subset>& circuits, Subset x);

/// Circuits of the dual, straight from "the complement contains a basis".
std::vector<Subset> brute_dual_circuits(const std::vector<Subset>& circuits, std::size_t n);

/// Inclusion-minimal S with rank(E\S) = r-1, by full enumeration.
std::vector<Subset> brute_corank1(const std::vector<Subset>& circuits, std::size_t n, std::size_t r);

/// Double circuits by definition with brute_rank.
std::vector<Subset> brute_double_circuits(const std::vector<Subset>& circuits, std::size_t n);

/// Every labelled matroid on n <= 4 elements, by axiom-checking every clutter.
std::vector<Matroid> all_matroids(std::size_t n);

/// Column matroid of an integer matrix (columns are ground elements).
Matroid linear_matroid(const std::vector<std::vector<int>>& columns);

/// Exhaustive n <= 4, random linear n in [5, max_n], named families, plus duals.
std::vector<Matroid> matroid_corpus(std::size_t max_n);

/// Seeded colorful configuration used throughout the acceptance suite:
/// d = 1 + seed % 3, at most 12 points.
PointConfig corpus_config(std::uint64_t seed);

/// Configuration in dimension d whose points span only span_dim < d
/// coordinates, giving rank(E) - r >= 2.
PointConfig flat_config(std::uint64_t seed);

PointConfig w1_config();

}  // namespace omlab::testing
