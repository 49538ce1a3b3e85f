#include "omlab/ground_set.hpp"

#include <algorithm>
#include <unordered_set>

#include "omlab/errors.hpp"

namespace omlab {

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint32_t b = bits; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

void sort_lex(std::vector<Subset>& family) {
  std::sort(family.begin(), family.end(), LexLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidArgument("ground set must not be empty");
  if (labels_.size() > kMaxGroundSize) {
    throw GroundTooLarge("ground set has " + std::to_string(labels_.size()) +
                         " elements; the limit is " + std::to_string(kMaxGroundSize));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InvalidArgument("empty element label");
    if (!seen.insert(l).second) throw LabelCollision("duplicate element label '" + l + "'");
  }
}

std::size_t GroundSet::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return labels_.size();
}

Subset GroundSet::subset(const std::vector<std::string>& members) const {
  Subset s;
  for (const auto& m : members) {
    const std::size_t i = find(m);
    if (i == size()) throw InvalidArgument("unknown element '" + m + "'");
    s = s.with(i);
  }
  return s;
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.indices()) {
    if (!first) out += ',';
    out += labels_.at(i);
    first = false;
  }
  out += '}';
  return out;
}

std::vector<std::string> GroundSet::members(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i : s.indices()) out.push_back(labels_.at(i));
  return out;
}

GroundSet GroundSet::extended(const std::vector<std::string>& extra) const {
  for (const auto& e : extra) {
    if (has(e)) throw LabelCollision("label '" + e + "' already in the ground set");
  }
  std::vector<std::string> all = labels_;
  all.insert(all.end(), extra.begin(), extra.end());
  return GroundSet(std::move(all));
}

GroundSet GroundSet::restricted(Subset keep) const {
  std::vector<std::string> kept;
  for (std::size_t i : keep.indices()) kept.push_back(labels_.at(i));
  return GroundSet(std::move(kept));
}

Subset transport(Subset s, const GroundSet& from, const GroundSet& to) {
  Subset out;
  for (std::size_t i : s.indices()) {
    const std::size_t j = to.find(from.label(i));
    if (j == to.size()) throw GroundMismatch("element '" + from.label(i) + "' missing from target ground set");
    out = out.with(j);
  }
  return out;
}

std::string format_family(const GroundSet& ground, const std::vector<Subset>& family) {
  std::string out;
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (k) out += ' ';
    out += ground.format(family[k]);
  }
  return out;
}

}  // namespace omlab
