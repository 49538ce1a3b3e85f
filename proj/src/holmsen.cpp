#include "omlab/holmsen.hpp"

#include <algorithm>

#include "omlab/errors.hpp"

namespace omlab {

HolmsenInstance::HolmsenInstance(OrientedMatroid om, Matroid matroid)
    : om_(std::move(om)), matroid_(std::move(matroid)) {
  if (om_.ground() != matroid_.ground()) {
    throw GroundMismatch("oriented matroid and matroid have different ground sets");
  }
}

DualInstance::DualInstance(Matroid matroid, OrientedMatroid om)
    : matroid_(std::move(matroid)), om_(std::move(om)), dual_om_(dual_oriented_matroid(om_)) {
  if (om_.ground() != matroid_.ground()) {
    throw GroundMismatch("matroid and oriented matroid have different ground sets");
  }
}

std::vector<Subset> corank1_complements(const Matroid& m, std::size_t r) {
  if (r > m.rank()) throw InvalidArgument("r exceeds the matroid rank");
  if (r == 0) return {};
  const Subset all = m.ground().full();
  const std::size_t count = std::size_t{1} << m.size();
  std::vector<Subset> out;
  // Every flat of rank r-1 is the closure of an independent (r-1)-set.
  for (std::uint32_t s = 0; s < count; ++s) {
    const Subset base{s};
    if (base.size() != r - 1 || !m.is_independent(base)) continue;
    out.push_back(all - m.closure(base));
  }
  sort_lex(out);
  return out;
}

namespace {

void require_mode(const HolmsenInstance& inst, HypothesisMode mode) {
  const std::size_t r = inst.om_rank();
  const std::size_t rho = inst.matroid().rank();
  if (mode == HypothesisMode::General && rho <= r) {
    throw RankMismatch("general form needs rank(E) > r; got rank(E) = " + std::to_string(rho) +
                       ", r = " + std::to_string(r));
  }
  if (mode == HypothesisMode::Tight && rho != r + 1) {
    throw RankMismatch("tight form needs rank(E) = r+1; got rank(E) = " + std::to_string(rho) +
                       ", r = " + std::to_string(r));
  }
}

void require_dual_ranks(const DualInstance& inst) {
  const std::size_t r = inst.om().rank();
  const std::size_t rho = inst.matroid().rank();
  if (rho + 1 != r) {
    throw RankMismatch("dual form needs rank(E) = r-1; got rank(E) = " + std::to_string(rho) +
                       ", r = " + std::to_string(r));
  }
}

std::optional<Subset> positive_inside(const std::vector<Subset>& positives, Subset s) {
  for (Subset c : positives) {
    if (c.subset_of(s)) return c;
  }
  return std::nullopt;
}

WitnessReport scan_hypothesis(const std::vector<Subset>& checked, const std::vector<Subset>& positives) {
  WitnessReport report;
  report.hypothesis_holds = true;
  for (Subset s : checked) {
    auto found = positive_inside(positives, s);
    report.trace.push_back({s, found});
    if (!found) {
      report.hypothesis_holds = false;
      report.violators.push_back(s);
    }
  }
  return report;
}

}  // namespace

WitnessReport check_hypothesis(const HolmsenInstance& inst, HypothesisMode mode) {
  require_mode(inst, mode);
  return scan_hypothesis(corank1_complements(inst.matroid(), inst.om_rank()), positive_circuits(inst.om()));
}

bool claim1_equivalent(const HolmsenInstance& inst) {
  const Matroid& m = inst.matroid();
  const std::size_t r = inst.om_rank();
  const Subset all = m.ground().full();
  const std::size_t count = std::size_t{1} << m.size();
  bool below = true;  // every S with rank(E\S) < r holds a positive circuit
  bool exact = true;  // same over rank(E\S) = r-1
  for (std::uint32_t s = 0; s < count; ++s) {
    const Subset set{s};
    const std::size_t rho = m.rank(all - set);
    if (rho >= r) continue;
    const bool has = contains_positive_circuit(inst.om(), set).has_value();
    if (!has) below = false;
    if (rho + 1 == r && !has) exact = false;
  }
  return below == exact;
}

std::vector<std::string> fresh_labels(const GroundSet& ground, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; out.size() < count; ++i) {
    std::string label = "_e" + std::to_string(i);
    if (!ground.has(label)) out.push_back(std::move(label));
  }
  return out;
}

HolmsenInstance reduce_rank(const HolmsenInstance& inst) {
  const std::size_t r = inst.om_rank();
  const Matroid& m = inst.matroid();
  if (m.rank() == r + 1) throw NothingToReduce("matroid rank is already r+1");
  if (m.rank() <= r) throw RankMismatch("reduction needs rank(E) > r+1");

  const auto basis = m.greedy_basis(m.ground().full()).indices();
  Subset head;
  for (std::size_t i = 0; i < r + 1; ++i) head = head.with(basis[i]);
  const Subset kept = m.closure(head);

  Matroid m_restricted = restrict_to(m, kept);
  OrientedMatroid om_restricted = restrict_to(inst.om(), kept);
  const std::size_t k = r - om_restricted.rank();
  const auto extra = fresh_labels(m_restricted.ground(), k);
  return HolmsenInstance(add_coloops(om_restricted, extra), add_loops(m_restricted, extra));
}

WitnessReport find_witness(const HolmsenInstance& inst, HypothesisMode mode) {
  WitnessReport report = check_hypothesis(inst, mode);
  if (!report.hypothesis_holds) {
    throw HypothesisUnmet("hypothesis fails on " + std::to_string(report.violators.size()) + " set(s), first " +
                          inst.ground().format(report.violators.front()));
  }
  for (Subset c : positive_circuits(inst.om())) {
    if (inst.matroid().is_independent(c)) {
      report.witness = c;
      return report;
    }
  }
  report.counterexample = true;
  return report;
}

WitnessReport check_dual_hypothesis(const DualInstance& inst) {
  require_dual_ranks(inst);
  return scan_hypothesis(double_circuits(inst.matroid()), positive_circuits(inst.cocircuits()));
}

WitnessReport find_dual_witness(const DualInstance& inst) {
  WitnessReport report = check_dual_hypothesis(inst);
  if (!report.hypothesis_holds) {
    throw HypothesisUnmet("dual hypothesis fails on " + std::to_string(report.violators.size()) +
                          " double circuit(s), first " + inst.ground().format(report.violators.front()));
  }
  const Subset all = inst.ground().full();
  for (Subset c : positive_circuits(inst.cocircuits())) {
    if (spans(inst.matroid(), all - c)) {
      report.witness = c;
      return report;
    }
  }
  report.counterexample = true;
  return report;
}

HolmsenInstance dualize_instance(const DualInstance& inst) {
  require_dual_ranks(inst);
  HolmsenInstance out(inst.cocircuits(), dual_matroid(inst.matroid()));
  const std::size_t r_star = inst.ground().size() - inst.om().rank();
  if (out.om_rank() != r_star || out.matroid().rank() != r_star + 1) {
    throw RankMismatch("dual rank bookkeeping failed: r* = " + std::to_string(out.om_rank()) + ", expected " +
                       std::to_string(r_star) + "; rank(E) = " + std::to_string(out.matroid().rank()));
  }
  return out;
}

DualInstance dual_instance_of(const HolmsenInstance& inst) {
  const std::size_t r = inst.om_rank();
  if (inst.matroid().rank() != r + 1) throw RankMismatch("only tight instances (rank(E) = r+1) dualize");
  return DualInstance(dual_matroid(inst.matroid()), dual_oriented_matroid(inst.om()));
}

}  // namespace omlab
