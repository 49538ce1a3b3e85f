#include "omlab/oriented_matroid.hpp"

#include <algorithm>

#include "omlab/errors.hpp"

namespace omlab {

std::string format_signed(const GroundSet& ground, SignedSet x) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : x.support().indices()) {
    if (!first) out += ',';
    out += x.pos.contains(i) ? '+' : '-';
    out += ground.label(i);
    first = false;
  }
  out += '}';
  return out;
}

bool orthogonal(SignedSet x, SignedSet y) {
  if (!x.support().intersects(y.support())) return true;
  const Subset agree = (x.pos & y.pos) | (x.neg & y.neg);
  const Subset differ = (x.pos & y.neg) | (x.neg & y.pos);
  return !agree.empty() && !differ.empty();
}

namespace {

std::vector<SignedSet> normalise(std::vector<SignedSet> reps) {
  for (auto& r : reps) r = r.canonical();
  std::sort(reps.begin(), reps.end(), signed_less);
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

std::vector<Subset> supports_of(const std::vector<SignedSet>& reps) {
  std::vector<Subset> out;
  out.reserve(reps.size());
  for (const auto& r : reps) out.push_back(r.support());
  return out;
}

void check_signed_within(const GroundSet& ground, const std::vector<SignedSet>& family) {
  for (const auto& x : family) {
    if (x.pos.intersects(x.neg)) throw InvalidArgument("signed set with overlapping parts");
    if (!x.support().subset_of(ground.full())) throw InvalidArgument("signed circuit outside the ground set");
  }
}

}  // namespace

OrientedMatroid::OrientedMatroid(std::vector<SignedSet> reps, Matroid underlying)
    : reps_(std::move(reps)), underlying_(std::move(underlying)) {
  by_support_.assign(std::size_t{1} << underlying_.size(), -1);
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    by_support_[reps_[i].support().bits] = static_cast<std::int32_t>(i);
  }
}

OrientedMatroid OrientedMatroid::unchecked(GroundSet ground, std::vector<SignedSet> representatives) {
  check_signed_within(ground, representatives);
  auto reps = normalise(std::move(representatives));
  Matroid m = Matroid::unchecked(std::move(ground), supports_of(reps));
  return OrientedMatroid(std::move(reps), std::move(m));
}

OrientedMatroid OrientedMatroid::unchecked(std::vector<SignedSet> representatives, Matroid underlying) {
  check_signed_within(underlying.ground(), representatives);
  return OrientedMatroid(normalise(std::move(representatives)), std::move(underlying));
}

std::vector<SignedSet> OrientedMatroid::circuits() const {
  std::vector<SignedSet> out;
  out.reserve(2 * reps_.size());
  for (const auto& r : reps_) {
    out.push_back(r);
    out.push_back(r.negated());
  }
  return out;
}

std::optional<SignedSet> OrientedMatroid::circuit_with_support(Subset support) const {
  if (!support.subset_of(ground().full())) return std::nullopt;
  const std::int32_t i = by_support_[support.bits];
  if (i < 0) return std::nullopt;
  return reps_[static_cast<std::size_t>(i)];
}

OrientedMatroid validate_oriented_matroid(GroundSet ground, std::vector<SignedSet> circuits) {
  check_signed_within(ground, circuits);
  std::sort(circuits.begin(), circuits.end(), signed_less);
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());

  auto present = [&](SignedSet x) {
    return std::binary_search(circuits.begin(), circuits.end(), x, signed_less);
  };
  for (const auto& x : circuits) {
    if (x.support().empty()) throw AxiomViolation(Axiom::O1, {"(∅,∅)"});
    if (!present(x.negated())) {
      throw AxiomViolation(Axiom::O1, {format_signed(ground, x) + " without its negation"});
    }
  }

  // (O2): one +/- pair per support and supports pairwise incomparable.
  std::vector<SignedSet> reps;
  for (const auto& x : circuits) {
    if (x.is_canonical()) reps.push_back(x);
  }
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = 0; b < reps.size(); ++b) {
      if (a != b && reps[a].support().subset_of(reps[b].support())) {
        throw AxiomViolation(Axiom::O2, {format_signed(ground, reps[a]), format_signed(ground, reps[b])});
      }
    }
  }

  OrientedMatroid om = OrientedMatroid::unchecked(std::move(ground), reps);
  const GroundSet& g = om.ground();

  // (O3): for X != -Y and e in X+ n Y-, some Z with Z+ inside (X+ u Y+)\e and
  // Z- inside (X- u Y-)\e. Candidates Z are looked up by support.
  const auto all = om.circuits();
  auto eliminates = [&](Subset zpos_bound, Subset zneg_bound) {
    const Subset room = zpos_bound | zneg_bound;
    auto fits = [&](SignedSet z) {
      return (z.pos.subset_of(zpos_bound) && z.neg.subset_of(zneg_bound)) ||
             (z.neg.subset_of(zpos_bound) && z.pos.subset_of(zneg_bound));
    };
    if (room.size() <= 12) {
      bool found = false;
      for_each_submask(room, [&](Subset s) {
        if (found || s.empty()) return;
        if (auto z = om.circuit_with_support(s); z && fits(*z)) found = true;
      });
      return found;
    }
    for (const auto& z : om.representatives()) {
      if (z.support().subset_of(room) && fits(z)) return true;
    }
    return false;
  };
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (x == y.negated()) continue;
      const Subset pivots = x.pos & y.neg;
      for (std::size_t e : pivots.indices()) {
        const Subset zpos = (x.pos | y.pos).without(e);
        const Subset zneg = (x.neg | y.neg).without(e);
        if (!eliminates(zpos, zneg)) {
          throw AxiomViolation(Axiom::O3, {format_signed(g, x), format_signed(g, y), g.label(e)});
        }
      }
    }
  }

  try {
    Matroid m = validate_matroid(g, om.underlying().circuits());
    return OrientedMatroid::unchecked(om.representatives(), std::move(m));
  } catch (const AxiomViolation& ex) {
    throw InternalInconsistency(std::string("supports of a valid oriented matroid fail ") + ex.what());
  }
}

OrientedMatroid validate_representatives(GroundSet ground, std::vector<SignedSet> representatives) {
  std::vector<SignedSet> all;
  all.reserve(2 * representatives.size());
  for (const auto& r : representatives) {
    all.push_back(r);
    all.push_back(r.negated());
  }
  return validate_oriented_matroid(std::move(ground), std::move(all));
}

Matroid underlying_matroid(const OrientedMatroid& om) {
  try {
    return validate_matroid(om.ground(), om.underlying().circuits());
  } catch (const AxiomViolation& ex) {
    throw InternalInconsistency(std::string("underlying matroid invalid: ") + ex.what());
  }
}

OrientedMatroid dual_oriented_matroid(const OrientedMatroid& om) {
  Matroid dual = dual_matroid(om.underlying());
  const GroundSet& g = om.ground();
  std::vector<SignedSet> cocircuits;
  cocircuits.reserve(dual.circuits().size());

  std::vector<SignedSet> touching;
  for (Subset support : dual.circuits()) {
    touching.clear();
    for (const auto& x : om.representatives()) {
      if (x.support().intersects(support)) touching.push_back(x);
    }
    // First element fixed positive; search the remaining sign patterns.
    const std::size_t head = support.first();
    const Subset rest = support.without(head);
    std::vector<SignedSet> found;
    for_each_submask(rest, [&](Subset negs) {
      const SignedSet cand{support - negs, negs};
      for (const auto& x : touching) {
        if (!orthogonal(cand, x)) return;
      }
      found.push_back(cand);
    });
    if (found.size() != 1) {
      throw InternalInconsistency("support " + g.format(support) + " admits " +
                                  std::to_string(found.size()) + " orthogonal sign patterns");
    }
    cocircuits.push_back(found.front());
  }
  return OrientedMatroid::unchecked(std::move(cocircuits), std::move(dual));
}

std::vector<Subset> positive_circuits(const OrientedMatroid& om) {
  std::vector<Subset> out;
  for (const auto& x : om.representatives()) {
    // -X of a canonical representative always has a negative element.
    if (x.is_positive()) out.push_back(x.support());
  }
  sort_lex(out);
  return out;
}

std::optional<Subset> contains_positive_circuit(const OrientedMatroid& om, Subset s) {
  for (const auto& x : om.representatives()) {
    if (x.is_positive() && x.support().subset_of(s)) return x.support();
  }
  return std::nullopt;
}

OrientedMatroid add_coloops(const OrientedMatroid& om, const std::vector<std::string>& new_labels) {
  return OrientedMatroid::unchecked(om.representatives(), add_coloops(om.underlying(), new_labels));
}

OrientedMatroid restrict_to(const OrientedMatroid& om, Subset keep) {
  Matroid m = restrict_to(om.underlying(), keep);
  std::vector<SignedSet> reps;
  for (const auto& x : om.representatives()) {
    if (x.support().subset_of(keep)) {
      reps.push_back({transport(x.pos, om.ground(), m.ground()), transport(x.neg, om.ground(), m.ground())});
    }
  }
  return OrientedMatroid::unchecked(std::move(reps), std::move(m));
}

}  // namespace omlab
