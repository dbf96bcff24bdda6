#pragma once

#include <stdexcept>
#include <string>

namespace schnizer {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SCHNIZER_ERROR(Name)                \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  };

SCHNIZER_ERROR(InvalidRootOrder)
SCHNIZER_ERROR(NonInvertibleDenominator)
SCHNIZER_ERROR(DivisionByZero)
SCHNIZER_ERROR(IndexOutOfRange)
SCHNIZER_ERROR(InvalidParameter)
SCHNIZER_ERROR(RankTooSmall)
SCHNIZER_ERROR(KindMismatch)
SCHNIZER_ERROR(NotInvariant)
SCHNIZER_ERROR(NotHighestWeight)
SCHNIZER_ERROR(ZeroWeight)
SCHNIZER_ERROR(FieldMismatch)
SCHNIZER_ERROR(ParseError)
SCHNIZER_ERROR(ConfigError)

#undef SCHNIZER_ERROR

}  // namespace schnizer
