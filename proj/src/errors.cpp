#include "omlab/errors.hpp"

namespace omlab {

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::M1: return "M1";
    case Axiom::M2: return "M2";
    case Axiom::M3: return "M3";
    case Axiom::O1: return "O1";
    case Axiom::O2: return "O2";
    case Axiom::O3: return "O3";
  }
  return "?";
}

namespace {

std::string describe(Axiom axiom, const std::vector<std::string>& offending) {
  std::string msg = "axiom (" + to_string(axiom) + ") violated";
  for (std::size_t i = 0; i < offending.size(); ++i) {
    msg += i == 0 ? ": " : ", ";
    msg += offending[i];
  }
  return msg;
}

}  // namespace

AxiomViolation::AxiomViolation(Axiom axiom, std::vector<std::string> offending)
    : Error(describe(axiom, offending)), axiom_(axiom), offending_(std::move(offending)) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& reason)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason),
      line_(line),
      column_(column) {}

}  // namespace omlab
