#pragma once

#include <stdexcept>
#include <string>

namespace acs {

// Base for every error raised by the library. Callers that only care about
// "the computation was rejected" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ACS_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

ACS_DEFINE_ERROR(SingularMatrix);
ACS_DEFINE_ERROR(DuplicateNodes);
ACS_DEFINE_ERROR(IndexOutOfRange);
ACS_DEFINE_ERROR(ZeroArgument);
ACS_DEFINE_ERROR(NotDivisible);
ACS_DEFINE_ERROR(DimensionMismatch);
ACS_DEFINE_ERROR(NonUnit);
ACS_DEFINE_ERROR(UnsupportedDimension);
ACS_DEFINE_ERROR(UnsupportedOperation);
ACS_DEFINE_ERROR(ConstraintViolated);
ACS_DEFINE_ERROR(ZeroFirstChern);
ACS_DEFINE_ERROR(ParseError);

// Two independent computations that must agree did not.
ACS_DEFINE_ERROR(InternalCheckFailure);

#undef ACS_DEFINE_ERROR

}  // namespace acs
