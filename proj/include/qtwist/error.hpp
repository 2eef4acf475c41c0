#pragma once

#include <stdexcept>
#include <string>

namespace qtwist {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QTWIST_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

QTWIST_DEFINE_ERROR(ParseError);
QTWIST_DEFINE_ERROR(DivisionByZero);
QTWIST_DEFINE_ERROR(PoleAtOne);
QTWIST_DEFINE_ERROR(RootDegreeMismatch);
QTWIST_DEFINE_ERROR(NotInvertible);
QTWIST_DEFINE_ERROR(MissingGenerator);
QTWIST_DEFINE_ERROR(MissingRule);
QTWIST_DEFINE_ERROR(LegMismatch);
QTWIST_DEFINE_ERROR(ZeroOrderArgument);
QTWIST_DEFINE_ERROR(HypothesisViolation);
QTWIST_DEFINE_ERROR(NonTerminating);
QTWIST_DEFINE_ERROR(Inexpressible);
QTWIST_DEFINE_ERROR(InconsistentIdeal);
QTWIST_DEFINE_ERROR(UnknownObject);
QTWIST_DEFINE_ERROR(ConfigError);

#undef QTWIST_DEFINE_ERROR

}  // namespace qtwist
