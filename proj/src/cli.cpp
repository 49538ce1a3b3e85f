#include "omlab/cli.hpp"

#include <CLI11.hpp>

#include <functional>

#include "omlab/cocircuit_analysis.hpp"
#include "omlab/errors.hpp"
#include "omlab/generator.hpp"
#include "omlab/holmsen.hpp"
#include "omlab/io.hpp"
#include "omlab/realization.hpp"

namespace omlab {

namespace {

// Math-level verdicts that end a command with exit code 1.
struct Violated {
  std::string message;
};

Matroid load_matroid(const std::string& path) {
  auto b = load_instance(path, InstanceKind::Matroid);
  return std::move(*b.matroid);
}

// An oriented matroid file, or a points file whose oriented matroid is taken.
OrientedMatroid load_om(const std::string& path) {
  auto b = load_instance(path);
  if (b.om) return std::move(*b.om);
  if (b.points) return om_from_points(*b.points);
  if (b.matroid && b.matroid->circuits().empty()) {
    return OrientedMatroid::unchecked(b.matroid->ground(), {});
  }
  throw ParseError(0, 0, "'" + path + "' does not describe an oriented matroid");
}

HypothesisMode parse_mode(const std::string& mode) {
  if (mode == "thm4") return HypothesisMode::General;
  if (mode == "thm5") return HypothesisMode::Tight;
  throw CLI::ValidationError("--mode", "expected thm4 or thm5");
}

int holmsen_command(const std::string& om_path, const std::string& m_path, const std::string& mode, bool witness,
                    std::ostream& out) {
  HolmsenInstance inst(load_om(om_path), load_matroid(m_path));
  const HypothesisMode m = parse_mode(mode);
  WitnessReport report = check_hypothesis(inst, m);
  if (witness && report.hypothesis_holds) report = find_witness(inst, m);
  out << format_report(inst.ground(), report, witness);
  if (!report.hypothesis_holds || (witness && !report.witness)) return kExitViolated;
  return kExitOk;
}

int dual_command(const std::string& m_path, const std::string& om_path, bool witness, std::ostream& out) {
  DualInstance inst(load_matroid(m_path), load_om(om_path));
  WitnessReport report = check_dual_hypothesis(inst);
  if (witness && report.hypothesis_holds) report = find_dual_witness(inst);
  out << format_report(inst.ground(), report, witness);
  if (!report.hypothesis_holds || (witness && !report.witness)) return kExitViolated;
  return kExitOk;
}

int solve_colorful(const std::string& path, std::ostream& out) {
  auto bundle = load_instance(path, InstanceKind::Points);
  const PointConfig& config = *bundle.points;
  const GroundSet ground = config.ground();
  HolmsenInstance inst = build_holmsen_instance(config);
  out << "colors: " << config.dim + 1 << "\n";
  out << "om-rank: " << inst.om_rank() << "\n";
  out << "matroid-rank: " << inst.matroid().rank() << "\n";
  WitnessReport report = find_witness(inst);
  out << "hypothesis: " << (report.hypothesis_holds ? "HOLDS" : "FAILS") << "\n";
  if (!report.witness) {
    out << "witness: none (theorem counterexample)\n";
    return kExitViolated;
  }
  out << "witness: " << ground.format(*report.witness) << "\n";
  const Subset transversal = lift_witness_to_colorful(*report.witness, config);
  out << "transversal: " << ground.format(transversal) << "\n";
  auto cert = hull_membership(config.points, transversal, config.anchor);
  if (!cert) {
    out << "certificate: none\nverified: no\n";
    return kExitViolated;
  }
  out << "certificate: " << format_certificate(ground, *cert) << "\n";
  const bool ok = verify_certificate(config.points, *cert, config.anchor);
  out << "verified: " << (ok ? "yes" : "no") << "\n";
  return ok ? kExitOk : kExitViolated;
}

int dispatch(CLI::App& app, const std::vector<std::string>& args, std::ostream& out) {
  std::function<int()> action;
  app.require_subcommand(1);

  auto add_file_command = [&](const std::string& name, const std::string& help, std::function<int(const std::string&)> fn) {
    auto* sub = app.add_subcommand(name, help);
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "input file")->required();
    sub->callback([&action, file, fn] { action = [file, fn] { return fn(*file); }; });
  };

  add_file_command("validate-matroid", "check (M1)-(M3) and print the canonical matroid", [&](const std::string& f) {
    Matroid m = load_matroid(f);
    out << "valid: matroid with " << m.size() << " elements, rank " << m.rank() << ", " << m.circuits().size()
        << " circuits\n"
        << emit_matroid(m);
    return int{kExitOk};
  });
  add_file_command("validate-om", "check (O1)-(O3) and print the canonical oriented matroid", [&](const std::string& f) {
    auto b = load_instance(f, InstanceKind::OrientedMatroid);
    out << "valid: oriented matroid with " << b.om->size() << " elements, rank " << b.om->rank() << ", "
        << b.om->representatives().size() << " circuit pairs\n"
        << emit_oriented_matroid(*b.om);
    return int{kExitOk};
  });
  add_file_command("dual", "print the dual matroid or dual oriented matroid", [&](const std::string& f) {
    auto b = load_instance(f);
    if (b.matroid) out << emit_matroid(dual_matroid(*b.matroid));
    if (b.om) out << emit_oriented_matroid(dual_oriented_matroid(*b.om));
    if (b.points) out << emit_oriented_matroid(dual_oriented_matroid(om_from_points(*b.points)));
    return int{kExitOk};
  });
  add_file_command("from-points", "print the oriented matroid of a point configuration", [&](const std::string& f) {
    auto b = load_instance(f, InstanceKind::Points);
    out << emit_oriented_matroid(om_from_points(*b.points));
    return int{kExitOk};
  });
  add_file_command("solve-colorful", "find a colorful simplex around the anchor", [&](const std::string& f) {
    return solve_colorful(f, out);
  });

  auto om_path = std::make_shared<std::string>();
  auto m_path = std::make_shared<std::string>();
  auto mode = std::make_shared<std::string>("thm4");
  for (const bool witness : {false, true}) {
    auto* sub = app.add_subcommand(witness ? "witness" : "check-holmsen",
                                   witness ? "find a positive circuit independent in the matroid"
                                           : "check the hypothesis on every minimal set with rank(E\\S) = r-1");
    sub->add_option("--om", *om_path, "oriented matroid or points file")->required();
    sub->add_option("--matroid", *m_path, "matroid file")->required();
    sub->add_option("--mode", *mode, "thm4 (rank(E) > r) or thm5 (rank(E) = r+1)")
        ->check(CLI::IsMember({"thm4", "thm5"}));
    sub->callback([&action, &out, om_path, m_path, mode, witness] {
      action = [&out, om_path, m_path, mode, witness] { return holmsen_command(*om_path, *m_path, *mode, witness, out); };
    });
  }
  for (const bool witness : {false, true}) {
    auto* sub = app.add_subcommand(witness ? "dual-witness" : "check-dual",
                                   witness ? "find a positive cocircuit whose complement spans the matroid"
                                           : "check that every double circuit holds a positive cocircuit");
    sub->add_option("--matroid", *m_path, "matroid file")->required();
    sub->add_option("--om", *om_path, "oriented matroid or points file")->required();
    sub->callback([&action, &out, om_path, m_path, witness] {
      action = [&out, om_path, m_path, witness] { return dual_command(*m_path, *om_path, witness, out); };
    });
  }

  auto adjacent_only = std::make_shared<bool>(false);
  auto* pairs = app.add_subcommand("analyze-pairs", "classify pairs of positive cocircuits");
  pairs->add_option("--om", *om_path, "oriented matroid or points file")->required();
  pairs->add_option("--matroid", *m_path, "matroid file")->required();
  pairs->add_flag("--adjacent-only", *adjacent_only, "only pairs whose zero sets share d-1 elements");
  pairs->callback([&action, &out, om_path, m_path, adjacent_only] {
    action = [&out, om_path, m_path, adjacent_only] {
      OrientedMatroid om = load_om(*om_path);
      Matroid m = load_matroid(*m_path);
      const auto result = analyze_pairs(om, m, *adjacent_only);
      out << format_pair_analysis(om.ground(), vertex_views(om), result);
      return int{kExitOk};
    };
  });

  auto params = std::make_shared<GeneratorParams>();
  auto* gen = app.add_subcommand("gen", "generate a seeded colorful configuration");
  gen->add_option("--seed", params->seed, "64-bit seed")->required();
  gen->add_option("--dim", params->dim, "dimension d in {1,2,3}")->required()->check(CLI::Range(1, 3));
  gen->add_option("--min-per-color", params->min_per_color, "fewest points per color");
  gen->add_option("--max-per-color", params->max_per_color, "most points per color");
  gen->add_option("--lo", params->coord_lo, "smallest coordinate");
  gen->add_option("--hi", params->coord_hi, "largest coordinate");
  gen->add_option("--span-dim", params->span_dim, "number of nonzero coordinates (0 = all)");
  gen->add_option("--max-retries", params->max_retries, "attempts per color before giving up");
  gen->callback([&action, &out, params] {
    action = [&out, params] {
      out << emit_instance(gen_random(*params));
      return int{kExitOk};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);
  return action ? action() : int{kExitUsage};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"omlab: matroid and oriented matroid verification tools", "omlab"};
  try {
    return dispatch(app, args, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const AxiomViolation& ex) {
    out << "invalid: " << ex.what() << "\n";
    return kExitViolated;
  } catch (const HypothesisUnmet& ex) {
    out << "hypothesis: FAILS\n" << ex.what() << "\n";
    return kExitViolated;
  } catch (const RankMismatch& ex) {
    out << "rank mismatch: " << ex.what() << "\n";
    return kExitViolated;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace omlab
