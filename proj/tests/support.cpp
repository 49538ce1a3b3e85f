#include "support.hpp"

#include <algorithm>

#include "omlab/errors.hpp"

namespace omlab::testing {

GroundSet letters(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(labels));
}

namespace {

bool brute_independent(const std::vector<Subset>& circuits, Subset x) {
  return std::none_of(circuits.begin(), circuits.end(), [&](Subset c) { return c.subset_of(x); });
}

}  // namespace

std::size_t brute_rank(const std::vector<Subset>& circuits, Subset x) {
  std::size_t best = 0;
  for_each_submask(x, [&](Subset s) {
    if (s.size() > best && brute_independent(circuits, s)) best = s.size();
  });
  return best;
}

std::vector<Subset> brute_dual_circuits(const std::vector<Subset>& circuits, std::size_t n) {
  const Subset all = Subset::full(n);
  const std::size_t r = brute_rank(circuits, all);
  std::vector<Subset> bases;
  for_each_submask(all, [&](Subset s) {
    if (s.size() == r && brute_independent(circuits, s)) bases.push_back(s);
  });
  auto dual_independent = [&](Subset x) {
    return std::any_of(bases.begin(), bases.end(), [&](Subset b) { return b.subset_of(all - x); });
  };
  std::vector<Subset> out;
  for_each_submask(all, [&](Subset x) {
    if (dual_independent(x)) return;
    for (std::size_t e : x.indices()) {
      if (!dual_independent(x.without(e))) return;
    }
    out.push_back(x);
  });
  sort_lex(out);
  return out;
}

std::vector<Subset> brute_corank1(const std::vector<Subset>& circuits, std::size_t n, std::size_t r) {
  const Subset all = Subset::full(n);
  std::vector<Subset> hits;
  if (r == 0) return hits;
  for_each_submask(all, [&](Subset s) {
    if (brute_rank(circuits, all - s) == r - 1) hits.push_back(s);
  });
  std::vector<Subset> out;
  for (Subset s : hits) {
    const bool minimal = std::none_of(hits.begin(), hits.end(), [&](Subset t) { return t != s && t.subset_of(s); });
    if (minimal) out.push_back(s);
  }
  sort_lex(out);
  return out;
}

std::vector<Subset> brute_double_circuits(const std::vector<Subset>& circuits, std::size_t n) {
  std::vector<Subset> out;
  for_each_submask(Subset::full(n), [&](Subset d) {
    const std::size_t k = d.size();
    if (k < 2 || brute_rank(circuits, d) + 2 != k) return;
    for (std::size_t e : d.indices()) {
      if (brute_rank(circuits, d.without(e)) + 2 != k) return;
    }
    out.push_back(d);
  });
  sort_lex(out);
  return out;
}

std::vector<Matroid> all_matroids(std::size_t n) {
  const GroundSet ground = letters(n);
  const std::uint32_t nonempty = (std::uint32_t{1} << n) - 1;  // subsets 1 .. 2^n - 1
  std::vector<Matroid> out;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << nonempty); ++family) {
    std::vector<Subset> circuits;
    for (std::uint32_t s = 1; s <= nonempty; ++s) {
      if ((family >> (s - 1)) & 1u) circuits.push_back(Subset{s});
    }
    try {
      out.push_back(validate_matroid(ground, circuits));
    } catch (const AxiomViolation&) {
    }
  }
  return out;
}

Matroid linear_matroid(const std::vector<std::vector<int>>& columns) {
  const std::size_t n = columns.size();
  std::vector<Vector> vecs;
  for (const auto& c : columns) {
    Vector v;
    for (int x : c) v.emplace_back(x);
    vecs.push_back(std::move(v));
  }
  std::vector<Subset> circuits;
  for_each_submask(Subset::full(n), [&](Subset s) {
    if (s.empty()) return;
    auto cols_of = [&](Subset t) {
      ColumnMatrix m;
      for (std::size_t i : t.indices()) m.push_back(vecs[i]);
      return m;
    };
    if (matrix_rank(cols_of(s)) == s.size()) return;
    for (std::size_t e : s.indices()) {
      if (matrix_rank(cols_of(s.without(e))) != s.size() - 1) return;
    }
    circuits.push_back(s);
  });
  return validate_matroid(letters(n), circuits);
}

std::vector<Matroid> matroid_corpus(std::size_t max_n) {
  std::vector<Matroid> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 4); ++n) {
    auto all = all_matroids(n);
    out.insert(out.end(), all.begin(), all.end());
  }
  SplitMix64 rng(7);
  for (std::size_t n = 5; n <= max_n; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
      std::vector<std::vector<int>> cols(n, std::vector<int>(rows));
      for (auto& c : cols) {
        for (auto& x : c) x = static_cast<int>(rng.uniform(-2, 2));
      }
      out.push_back(linear_matroid(cols));
    }
    const GroundSet g = letters(n);
    for (std::size_t k = 0; k <= n; ++k) out.push_back(uniform_matroid(g, k));
    out.push_back(random_partition_matroid(g, 2, rng));
    out.push_back(random_partition_matroid(g, 3, rng));
    out.push_back(validate_matroid(g, {Subset::full(n - 1)}));  // single circuit plus a coloop
  }
  const std::size_t base = out.size();
  for (std::size_t i = 0; i < base; ++i) {
    if (out[i].size() >= 5) out.push_back(dual_matroid(out[i]));
  }
  return out;
}

PointConfig corpus_config(std::uint64_t seed) {
  GeneratorParams p;
  p.seed = seed;
  p.dim = 1 + seed % 3;
  p.min_per_color = 2;
  p.max_per_color = p.dim == 3 ? 3 : 4;
  return *gen_random(p).points;
}

PointConfig flat_config(std::uint64_t seed) {
  GeneratorParams p;
  p.seed = seed;
  if (seed % 3 == 0) {
    p.dim = 2;
    p.span_dim = 1;
    p.max_per_color = 4;
  } else {
    p.dim = 3;
    p.span_dim = seed % 3 == 1 ? 1 : 2;
    p.max_per_color = 3;
  }
  return *gen_random(p).points;
}

PointConfig w1_config() {
  PointConfig c;
  c.dim = 1;
  c.anchor = {Rational(0)};
  const std::vector<std::pair<const char*, int>> coords = {{"a", -1}, {"b", 2}, {"c", -2}, {"d", 1}};
  for (std::size_t i = 0; i < coords.size(); ++i) {
    c.points.push_back({coords[i].first, {Rational(coords[i].second)}, i < 2 ? 0u : 1u});
  }
  return c;
}

}  // namespace omlab::testing
