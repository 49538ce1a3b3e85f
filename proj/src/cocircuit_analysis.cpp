#include "omlab/cocircuit_analysis.hpp"

#include "omlab/errors.hpp"

namespace omlab {

std::string to_string(PairCase c) {
  switch (c) {
    case PairCase::ComplementSpans: return "complement-spans";
    case PairCase::IntersectionIndependent: return "intersection-independent";
    case PairCase::OneRankStagnant: return "one-rank-stagnant";
    case PairCase::BothRankIncrease: return "both-rank-increase";
    case PairCase::DegenerateVertex: return "degenerate-vertex";
  }
  return "?";
}

std::vector<VertexView> vertex_views(const OrientedMatroid& om) {
  const OrientedMatroid co = dual_oriented_matroid(om);
  const Subset all = om.ground().full();
  std::vector<VertexView> out;
  for (Subset s : positive_circuits(co)) out.push_back({{s, Subset{}}, all - s});
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> complementary_pairs(const OrientedMatroid& om, const Matroid& m) {
  if (om.ground() != m.ground()) throw GroundMismatch("oriented matroid and matroid have different ground sets");
  const auto views = vertex_views(om);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < views.size(); ++i) {
    for (std::size_t j = i + 1; j < views.size(); ++j) {
      if (!views[i].zero_set.intersects(views[j].zero_set)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool contains_double_circuit(const Matroid& m, Subset x) { return m.rank(x) + 2 <= x.size(); }

namespace {

bool is_double_circuit(const Matroid& m, Subset d) {
  const std::size_t k = d.size();
  if (k < 2 || m.rank(d) + 2 != k) return false;
  for (std::size_t e : d.indices()) {
    if (m.rank(d.without(e)) + 2 != k) return false;
  }
  return true;
}

}  // namespace

std::optional<Subset> find_double_circuit(const Matroid& m, Subset x) {
  std::optional<Subset> best;
  for_each_submask(x, [&](Subset d) {
    if ((!best || lex_less(d, *best)) && is_double_circuit(m, d)) best = d;
  });
  return best;
}

bool adjacent_surrogate(const Matroid& m, const VertexView& v1, const VertexView& v2) {
  const std::size_t d = m.rank();
  return d >= 1 && (v1.zero_set & v2.zero_set).size() == d - 1;
}

PairClassification classify_pair(const Matroid& m, const VertexView& v1, const VertexView& v2) {
  const Subset all = m.ground().full();
  if (!v1.zero_set.subset_of(all) || !v2.zero_set.subset_of(all)) {
    throw GroundMismatch("vertex zero set outside the matroid ground set");
  }
  const std::size_t d = m.rank();
  const Subset z1 = v1.zero_set;
  const Subset z2 = v2.zero_set;
  const Subset meet = z1 & z2;
  const Subset join = z1 | z2;

  PairClassification out;
  out.union_rank = m.rank(join);

  if (z1.size() != d || z2.size() != d) {
    out.tag = PairCase::DegenerateVertex;
    for (Subset z : {z1, z2}) {
      if (z.size() > d && !spans(m, z)) {
        out.double_circuit_found = find_double_circuit(m, z);
        break;
      }
    }
    return out;
  }
  if (spans(m, z1) || spans(m, z2)) {
    out.tag = PairCase::ComplementSpans;
    return out;
  }
  if (m.is_independent(meet)) {
    out.tag = PairCase::IntersectionIndependent;
    out.union_rank_bound = m.rank(z1) + m.rank(z2) - meet.size();
    out.double_circuit_found = find_double_circuit(m, join);
    return out;
  }
  const std::size_t base = m.rank(meet);
  const bool stagnant1 = m.rank(z1) == base;
  const bool stagnant2 = m.rank(z2) == base;
  if (stagnant1 || stagnant2) {
    out.tag = PairCase::OneRankStagnant;
    out.double_circuit_found = find_double_circuit(m, join);
    return out;
  }
  out.tag = PairCase::BothRankIncrease;
  out.union_rank_bound = base + 2;
  out.double_circuit_found = find_double_circuit(m, meet);
  return out;
}

std::vector<PairClassification> analyze_pairs(const OrientedMatroid& om, const Matroid& m, bool adjacent_only) {
  if (om.ground() != m.ground()) throw GroundMismatch("oriented matroid and matroid have different ground sets");
  const auto views = vertex_views(om);
  std::vector<PairClassification> out;
  for (std::size_t i = 0; i < views.size(); ++i) {
    for (std::size_t j = i + 1; j < views.size(); ++j) {
      if (adjacent_only && !adjacent_surrogate(m, views[i], views[j])) continue;
      auto c = classify_pair(m, views[i], views[j]);
      c.first = i;
      c.second = j;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace omlab
