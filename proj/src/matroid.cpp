#include "omlab/matroid.hpp"

#include <algorithm>

#include "omlab/errors.hpp"

namespace omlab {

namespace {

// dep[S] = 1 iff some marked set is contained in S (upward closure).
std::vector<std::uint8_t> upward_closure(std::size_t n, const std::vector<Subset>& marked) {
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (Subset c : marked) table[c.bits] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint32_t s = 0; s < table.size(); ++s) {
      if ((s & bit) && table[s & ~bit]) table[s] = 1;
    }
  }
  return table;
}

void check_within(const GroundSet& ground, const std::vector<Subset>& family) {
  const Subset all = ground.full();
  for (Subset s : family) {
    if (!s.subset_of(all)) throw InvalidArgument("circuit not contained in the ground set");
  }
}

}  // namespace

Matroid::Matroid(GroundSet ground, std::vector<Subset> circuits)
    : ground_(std::move(ground)), circuits_(std::move(circuits)) {
  sort_lex(circuits_);
  dependent_ = upward_closure(ground_.size(), circuits_);
  full_rank_ = rank(ground_.full());
}

Matroid Matroid::unchecked(GroundSet ground, std::vector<Subset> circuits) {
  check_within(ground, circuits);
  return Matroid(std::move(ground), std::move(circuits));
}

std::size_t Matroid::rank(Subset x) const { return greedy_basis(x).size(); }

Subset Matroid::greedy_basis(Subset x) const {
  Subset basis;
  for (std::size_t i : x.indices()) {
    const Subset next = basis.with(i);
    if (!is_dependent(next)) basis = next;
  }
  return basis;
}

Subset Matroid::closure(Subset x) const {
  const std::size_t r = rank(x);
  Subset out = x;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!x.contains(i) && rank(x.with(i)) == r) out = out.with(i);
  }
  return out;
}

Matroid validate_matroid(GroundSet ground, std::vector<Subset> circuits) {
  check_within(ground, circuits);
  sort_lex(circuits);
  for (Subset c : circuits) {
    if (c.empty()) throw AxiomViolation(Axiom::M1, {ground.format(c)});
  }
  for (Subset x : circuits) {
    for (Subset y : circuits) {
      if (x != y && x.subset_of(y)) {
        throw AxiomViolation(Axiom::M2, {ground.format(x), ground.format(y)});
      }
    }
  }
  // Z in C with Z inside (X u Y) \ e exists iff that set is dependent.
  const auto dep = upward_closure(ground.size(), circuits);
  for (std::size_t a = 0; a < circuits.size(); ++a) {
    for (std::size_t b = a + 1; b < circuits.size(); ++b) {
      const Subset x = circuits[a];
      const Subset y = circuits[b];
      for (std::size_t e : (x & y).indices()) {
        if (!dep[((x | y).without(e)).bits]) {
          throw AxiomViolation(Axiom::M3,
                               {ground.format(x), ground.format(y), ground.label(e)});
        }
      }
    }
  }
  return Matroid::unchecked(std::move(ground), std::move(circuits));
}

Matroid dual_matroid(const Matroid& m) {
  const std::size_t n = m.size();
  const std::size_t r = m.rank();
  const Subset all = m.ground().full();
  const std::size_t count = std::size_t{1} << n;

  // Cobases are complements of bases; dual-independent sets are their subsets.
  std::vector<std::uint8_t> indep(count, 0);
  for (std::uint32_t s = 0; s < count; ++s) {
    const Subset b{s};
    if (b.size() == r && m.is_independent(b)) indep[(all - b).bits] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint32_t s = 0; s < count; ++s) {
      if (!(s & bit) && indep[s | bit]) indep[s] = 1;
    }
  }

  std::vector<Subset> circuits;
  for (std::uint32_t s = 0; s < count; ++s) {
    if (indep[s]) continue;
    const Subset x{s};
    bool minimal = true;
    for (std::size_t e : x.indices()) {
      if (!indep[x.without(e).bits]) {
        minimal = false;
        break;
      }
    }
    if (minimal) circuits.push_back(x);
  }
  return Matroid::unchecked(m.ground(), std::move(circuits));
}

std::vector<Subset> double_circuits(const Matroid& m) {
  std::vector<Subset> out;
  const std::size_t count = std::size_t{1} << m.size();
  for (std::uint32_t s = 0; s < count; ++s) {
    const Subset d{s};
    const std::size_t k = d.size();
    if (k < 2 || m.rank(d) != k - 2) continue;
    bool ok = true;
    for (std::size_t e : d.indices()) {
      if (m.rank(d.without(e)) != k - 2) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(d);
  }
  sort_lex(out);
  return out;
}

Matroid partition_matroid(const GroundSet& ground, const std::vector<Subset>& blocks) {
  Subset covered;
  std::vector<Subset> circuits;
  for (Subset block : blocks) {
    if (block.empty()) throw PartitionInvalid("empty block");
    if (!block.subset_of(ground.full())) throw PartitionInvalid("block outside the ground set");
    if (block.intersects(covered)) {
      throw PartitionInvalid("blocks overlap in " + ground.format(block & covered));
    }
    covered = covered | block;
    const auto idx = block.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        circuits.push_back(Subset::singleton(idx[i]).with(idx[j]));
      }
    }
  }
  if (covered != ground.full()) {
    throw PartitionInvalid("blocks miss " + ground.format(ground.full() - covered));
  }
  return Matroid::unchecked(ground, std::move(circuits));
}

Matroid free_matroid(const GroundSet& ground) { return Matroid::unchecked(ground, {}); }

Matroid uniform_matroid(const GroundSet& ground, std::size_t k) {
  std::vector<Subset> circuits;
  const std::size_t count = std::size_t{1} << ground.size();
  for (std::uint32_t s = 0; s < count; ++s) {
    if (Subset{s}.size() == k + 1) circuits.push_back(Subset{s});
  }
  return Matroid::unchecked(ground, std::move(circuits));
}

Matroid add_loops(const Matroid& m, const std::vector<std::string>& new_labels) {
  GroundSet ground = m.ground().extended(new_labels);
  std::vector<Subset> circuits = m.circuits();
  for (std::size_t i = m.size(); i < ground.size(); ++i) circuits.push_back(Subset::singleton(i));
  return Matroid::unchecked(std::move(ground), std::move(circuits));
}

Matroid add_coloops(const Matroid& m, const std::vector<std::string>& new_labels) {
  return Matroid::unchecked(m.ground().extended(new_labels), m.circuits());
}

Matroid restrict_to(const Matroid& m, Subset keep) {
  GroundSet ground = m.ground().restricted(keep);
  std::vector<Subset> circuits;
  for (Subset c : m.circuits()) {
    if (c.subset_of(keep)) circuits.push_back(transport(c, m.ground(), ground));
  }
  return Matroid::unchecked(std::move(ground), std::move(circuits));
}

}  // namespace omlab
