#pragma once

#include <stdexcept>
#include <string>

namespace superroots {

// Base class for every error raised by the library. Axiom and verification
// failures that are expected outcomes are returned as reports instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SUPERROOTS_ERROR(Name)              \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(std::string(#Name ": ") + what) {} \
  }

SUPERROOTS_ERROR(DivisionByZero);
SUPERROOTS_ERROR(NonLinearQuotient);
SUPERROOTS_ERROR(NonLinearProduct);
SUPERROOTS_ERROR(AmbiguousSign);
SUPERROOTS_ERROR(BasisMismatch);
SUPERROOTS_ERROR(IsotropicReflectionError);
SUPERROOTS_ERROR(AxiomViolation);
SUPERROOTS_ERROR(RankError);
SUPERROOTS_ERROR(UnknownType);
SUPERROOTS_ERROR(ParseError);
SUPERROOTS_ERROR(NotARoot);
SUPERROOTS_ERROR(NotRealRoot);
SUPERROOTS_ERROR(NotAFiniteRootSystem);
SUPERROOTS_ERROR(NotAShadowPattern);
SUPERROOTS_ERROR(DirectionNotDecidable);
SUPERROOTS_ERROR(HypothesisViolated);
SUPERROOTS_ERROR(NotUniformlyHybrid);
SUPERROOTS_ERROR(NoCompatibleBase);
SUPERROOTS_ERROR(CaseMismatch);
SUPERROOTS_ERROR(InvalidFunctional);

#undef SUPERROOTS_ERROR

}  // namespace superroots
