#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "omlab/errors.hpp"
#include "omlab/generator.hpp"
#include "omlab/holmsen.hpp"
#include "omlab/io.hpp"
#include "omlab/realization.hpp"

namespace py = pybind11;
using namespace omlab;

namespace {

using Labels = std::vector<std::string>;

std::vector<Labels> members_of(const GroundSet& g, const std::vector<Subset>& sets) {
  std::vector<Labels> out;
  for (const Subset s : sets) out.push_back(g.members(s));
  return out;
}

std::optional<Labels> maybe_members(const GroundSet& g, const std::optional<Subset>& s) {
  if (!s) return std::nullopt;
  return g.members(*s);
}

py::dict report_dict(const GroundSet& g, const WitnessReport& r) {
  py::dict d;
  d["hypothesis_holds"] = r.hypothesis_holds;
  d["violators"] = members_of(g, r.violators);
  d["witness"] = maybe_members(g, r.witness);
  d["counterexample"] = r.counterexample;
  return d;
}

std::map<std::string, std::string> certificate_dict(const GroundSet& g, const HullCertificate& cert) {
  std::map<std::string, std::string> out;
  const auto idx = cert.support.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) out[g.label(idx[i])] = to_string(cert.coefficients[i]);
  return out;
}

HypothesisMode parse_mode(const std::string& mode) {
  if (mode == "thm4") return HypothesisMode::General;
  if (mode == "thm5") return HypothesisMode::Tight;
  throw InvalidArgument("mode must be thm4 or thm5");
}

}  // namespace

PYBIND11_MODULE(_omlab, m) {
  m.doc() = "Matroids, oriented matroids and Holmsen-type witness search";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<AxiomViolation>(m, "AxiomViolation", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<HypothesisUnmet>(m, "HypothesisUnmet", error);
  py::register_exception<RankMismatch>(m, "RankMismatch", error);
  py::register_exception<GroundMismatch>(m, "GroundMismatch", error);

  py::class_<Matroid>(m, "Matroid")
      .def_property_readonly("labels", [](const Matroid& x) { return x.ground().labels(); })
      .def("rank", [](const Matroid& x) { return x.rank(); })
      .def("rank", [](const Matroid& x, const Labels& s) { return x.rank(x.ground().subset(s)); })
      .def("is_independent", [](const Matroid& x, const Labels& s) { return x.is_independent(x.ground().subset(s)); })
      .def("circuits", [](const Matroid& x) { return members_of(x.ground(), x.circuits()); })
      .def("double_circuits", [](const Matroid& x) { return members_of(x.ground(), double_circuits(x)); })
      .def("dual", &dual_matroid)
      .def("emit", &emit_matroid)
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("__repr__", [](const Matroid& x) { return "<Matroid rank " + std::to_string(x.rank()) + " on " +
                                                     std::to_string(x.size()) + " elements>"; });

  py::class_<OrientedMatroid>(m, "OrientedMatroid")
      .def_property_readonly("labels", [](const OrientedMatroid& x) { return x.ground().labels(); })
      .def_property_readonly("rank", &OrientedMatroid::rank)
      .def("circuits",
           [](const OrientedMatroid& x) {
             std::vector<std::string> out;
             for (const SignedSet& c : x.circuits()) out.push_back(format_signed(x.ground(), c));
             return out;
           })
      .def("positive_circuits", [](const OrientedMatroid& x) { return members_of(x.ground(), positive_circuits(x)); })
      .def("underlying", [](const OrientedMatroid& x) { return x.underlying(); })
      .def("dual", &dual_oriented_matroid)
      .def("emit", &emit_oriented_matroid)
      .def("__eq__", [](const OrientedMatroid& a, const OrientedMatroid& b) { return a == b; })
      .def("__repr__", [](const OrientedMatroid& x) {
        return "<OrientedMatroid rank " + std::to_string(x.rank()) + " on " + std::to_string(x.size()) + " elements>";
      });

  py::class_<PointConfig>(m, "PointConfig")
      .def_property_readonly("dim", [](const PointConfig& c) { return c.dim; })
      .def_property_readonly("labels", [](const PointConfig& c) { return c.ground().labels(); })
      .def("emit", &emit_points);

  m.def("parse_matroid", [](const std::string& t) { return parse_matroid(t); });
  m.def("parse_oriented_matroid", [](const std::string& t) { return parse_oriented_matroid(t); });
  m.def("parse_points", [](const std::string& t) { return parse_points(t); });
  m.def("uniform_matroid", [](const Labels& labels, std::size_t k) { return uniform_matroid(GroundSet(labels), k); });
  m.def("partition_matroid", [](const Labels& labels, const std::vector<Labels>& blocks) {
    const GroundSet g(labels);
    std::vector<Subset> bs;
    for (const auto& b : blocks) bs.push_back(g.subset(b));
    return partition_matroid(g, bs);
  });

  m.def("om_from_points", &om_from_points);
  m.def("hull_membership", [](const PointConfig& c, const Labels& s) -> std::optional<std::map<std::string, std::string>> {
    const GroundSet g = c.ground();
    const auto cert = hull_membership(c.points, g.subset(s), c.anchor);
    if (!cert) return std::nullopt;
    return certificate_dict(g, *cert);
  });

  m.def("solve_colorful", [](const PointConfig& c) {
    const HolmsenInstance inst = build_holmsen_instance(c);
    const auto report = find_witness(inst);
    py::dict d;
    d["witness"] = maybe_members(inst.ground(), report.witness);
    if (report.witness) {
      const Subset t = lift_witness_to_colorful(*report.witness, c);
      d["transversal"] = inst.ground().members(t);
      const auto cert = hull_membership(c.points, t, c.anchor);
      d["certificate"] = cert ? py::cast(certificate_dict(inst.ground(), *cert)) : py::none();
    }
    return d;
  });

  m.def(
      "check_hypothesis",
      [](const OrientedMatroid& om, const Matroid& mat, const std::string& mode) {
        return report_dict(om.ground(), check_hypothesis(HolmsenInstance(om, mat), parse_mode(mode)));
      },
      py::arg("om"), py::arg("matroid"), py::arg("mode") = "thm4");
  m.def(
      "find_witness",
      [](const OrientedMatroid& om, const Matroid& mat, const std::string& mode) {
        return report_dict(om.ground(), find_witness(HolmsenInstance(om, mat), parse_mode(mode)));
      },
      py::arg("om"), py::arg("matroid"), py::arg("mode") = "thm4");
  m.def(
      "find_dual_witness",
      [](const Matroid& mat, const OrientedMatroid& om) {
        return report_dict(om.ground(), find_dual_witness(DualInstance(mat, om)));
      },
      py::arg("matroid"), py::arg("om"));

  m.def(
      "gen_random",
      [](std::uint64_t seed, std::size_t dim, std::size_t min_per_color, std::size_t max_per_color) {
        GeneratorParams p;
        p.seed = seed;
        p.dim = dim;
        p.min_per_color = min_per_color;
        p.max_per_color = max_per_color;
        return emit_instance(gen_random(p));
      },
      py::arg("seed"), py::arg("dim"), py::arg("min_per_color") = 2, py::arg("max_per_color") = 4);
}
