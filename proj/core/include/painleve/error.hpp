#pragma once

#include <stdexcept>
#include <string>

namespace painleve {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PAINLEVE_ERROR(Name)                  \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(#Name ": " + what) {}         \
  }

PAINLEVE_ERROR(ZeroDenominator);
PAINLEVE_ERROR(EvaluationExhausted);
PAINLEVE_ERROR(NotLaurentExpandable);
PAINLEVE_ERROR(BadConstantTerm);
PAINLEVE_ERROR(ExpressionTooLarge);
PAINLEVE_ERROR(UnknownSystem);
PAINLEVE_ERROR(UnknownName);
PAINLEVE_ERROR(IncompatibleComposition);
PAINLEVE_ERROR(NotClosedCorrection);
PAINLEVE_ERROR(NotInvertible);
PAINLEVE_ERROR(SingularityEncountered);
PAINLEVE_ERROR(EliminationFailed);
PAINLEVE_ERROR(TruncationUnstable);
PAINLEVE_ERROR(ParseError);
PAINLEVE_ERROR(NotDivisible);

#undef PAINLEVE_ERROR

}  // namespace painleve
