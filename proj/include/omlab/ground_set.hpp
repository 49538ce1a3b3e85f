#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace omlab {

/// Hard cap on ground set size; every hypothesis check enumerates 2^n subsets.
inline constexpr std::size_t kMaxGroundSize = 16;

/// A subset of a ground set, stored as a bitmask over element indices.
/// Bit i set means the i-th element (in canonical order) is a member.
struct Subset {
  std::uint32_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t b) : bits(b) {}

  static constexpr Subset singleton(std::size_t i) { return Subset{std::uint32_t{1} << i}; }
  static constexpr Subset full(std::size_t n) {
    return Subset{n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1};
  }

  constexpr bool empty() const { return bits == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }
  constexpr bool contains(std::size_t i) const { return (bits >> i) & 1u; }
  constexpr bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }
  constexpr bool intersects(Subset other) const { return (bits & other.bits) != 0; }

  constexpr Subset with(std::size_t i) const { return Subset{bits | (std::uint32_t{1} << i)}; }
  constexpr Subset without(std::size_t i) const { return Subset{bits & ~(std::uint32_t{1} << i)}; }

  /// Index of the smallest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits)); }

  std::vector<std::size_t> indices() const;

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits & b.bits}; }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits & ~b.bits}; }
  friend constexpr bool operator==(Subset a, Subset b) = default;
};

/// Lexicographic order on the sorted index sequences of two subsets, so that
/// {a,b} < {a,b,c} < {a,c} < {b}. The empty set is the smallest.
constexpr bool lex_less(Subset a, Subset b) {
  const std::uint32_t diff = a.bits ^ b.bits;
  if (diff == 0) return false;
  const std::uint32_t low = diff & (~diff + 1);
  const std::uint32_t above = ~((low << 1) - 1);
  if (a.bits & low) return (b.bits & above) != 0;
  return (a.bits & above) == 0;
}

struct LexLess {
  constexpr bool operator()(Subset a, Subset b) const { return lex_less(a, b); }
};

void sort_lex(std::vector<Subset>& family);

/// Calls fn(sub) for every subset of `mask`, including the empty set and mask itself.
template <typename Fn>
void for_each_submask(Subset mask, Fn&& fn) {
  std::uint32_t sub = mask.bits;
  while (true) {
    fn(Subset{sub});
    if (sub == 0) break;
    sub = (sub - 1) & mask.bits;
  }
}

/// Ordered finite universe of distinct labels. Element order is canonical
/// for every emitted family and every tie-break.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  Subset full() const noexcept { return Subset::full(labels_.size()); }

  /// Index of `label`, or size() when absent.
  std::size_t find(std::string_view label) const;
  bool has(std::string_view label) const { return find(label) < size(); }

  /// Throws InvalidArgument when any label is not in the ground set.
  Subset subset(const std::vector<std::string>& members) const;

  /// Canonical rendering, e.g. `{a,d}`.
  std::string format(Subset s) const;
  std::vector<std::string> members(Subset s) const;

  /// New ground set with `extra` appended; throws LabelCollision / GroundTooLarge.
  GroundSet extended(const std::vector<std::string>& extra) const;
  /// Ground set restricted to `keep`, preserving order.
  GroundSet restricted(Subset keep) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Relabels a subset of `from` into the index space of `to` (matched by label).
Subset transport(Subset s, const GroundSet& from, const GroundSet& to);

std::string format_family(const GroundSet& ground, const std::vector<Subset>& family);

}  // namespace omlab
