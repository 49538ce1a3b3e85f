#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omlab/cocircuit_analysis.hpp"
#include "omlab/holmsen.hpp"
#include "omlab/matroid.hpp"
#include "omlab/oriented_matroid.hpp"
#include "omlab/realization.hpp"

namespace omlab {

enum class InstanceKind { Matroid, OrientedMatroid, Points };

struct Provenance {
  std::string source;                 // file path when loaded from disk
  std::optional<std::uint64_t> seed;  // generator seed, emitted as `# seed: N`
};

struct InstanceBundle {
  std::optional<PointConfig> points;
  std::optional<Matroid> matroid;
  std::optional<OrientedMatroid> om;
  Provenance provenance;
};

/// Parses one instance. Without a hint the kind is inferred: any `dim:`,
/// `x:` or `point:` line means points, signed circuit tokens mean an
/// oriented matroid, anything else a matroid. Axiom validators always run.
InstanceBundle parse_instance(std::string_view text, std::optional<InstanceKind> hint = std::nullopt);

/// Reads a file; the extension (.matroid, .om, .points) supplies the hint
/// when none is given. Throws ParseError(0, 0, ...) if the file is unreadable.
InstanceBundle load_instance(const std::filesystem::path& path, std::optional<InstanceKind> hint = std::nullopt);

Matroid parse_matroid(std::string_view text);
OrientedMatroid parse_oriented_matroid(std::string_view text);
PointConfig parse_points(std::string_view text);

/// Canonical text; parse_instance(emit_instance(b)) reproduces b.
std::string emit_instance(const InstanceBundle& bundle);
std::string emit_matroid(const Matroid& m);
std::string emit_oriented_matroid(const OrientedMatroid& om);
std::string emit_points(const PointConfig& config);

/// `hypothesis:` line, violators, optional `witness:` line, then `trace:`.
std::string format_report(const GroundSet& ground, const WitnessReport& report, bool with_witness);

/// `vertex i:` lines followed by `pair {i,j}: <tag> double_circuit=<set|none>`.
std::string format_pair_analysis(const GroundSet& ground, const std::vector<VertexView>& views,
                                 const std::vector<PairClassification>& pairs);

}  // namespace omlab
