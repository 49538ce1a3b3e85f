#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace omlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which axiom a candidate circuit family broke.
enum class Axiom { M1, M2, M3, O1, O2, O3 };

std::string to_string(Axiom axiom);

class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, std::vector<std::string> offending);

  Axiom axiom() const noexcept { return axiom_; }
  const std::vector<std::string>& offending() const noexcept { return offending_; }

 private:
  Axiom axiom_;
  std::vector<std::string> offending_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

#define OMLAB_DEFINE_ERROR(Name)  \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  }

OMLAB_DEFINE_ERROR(GroundTooLarge);
OMLAB_DEFINE_ERROR(LabelCollision);
OMLAB_DEFINE_ERROR(PartitionInvalid);
OMLAB_DEFINE_ERROR(InternalInconsistency);
OMLAB_DEFINE_ERROR(AnchorInSet);
OMLAB_DEFINE_ERROR(HypothesisUnmet);
OMLAB_DEFINE_ERROR(WitnessNotTransversal);
OMLAB_DEFINE_ERROR(RankMismatch);
OMLAB_DEFINE_ERROR(NothingToReduce);
OMLAB_DEFINE_ERROR(GroundMismatch);
OMLAB_DEFINE_ERROR(GenerationExhausted);
OMLAB_DEFINE_ERROR(InvalidArgument);

#undef OMLAB_DEFINE_ERROR

}  // namespace omlab
