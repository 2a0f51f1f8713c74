#pragma once

#include <stdexcept>
#include <string>

namespace hwvkit {

// Base of every error raised by the library. Callers that only care about
// "bad input" versus "bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HWVKIT_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

HWVKIT_DEFINE_ERROR(InvalidPartition);
HWVKIT_DEFINE_ERROR(ContainmentError);
HWVKIT_DEFINE_ERROR(SizeError);
HWVKIT_DEFINE_ERROR(SizeMismatch);
HWVKIT_DEFINE_ERROR(ShapeMismatch);
HWVKIT_DEFINE_ERROR(WeightMismatch);
HWVKIT_DEFINE_ERROR(CompatibilityError);
HWVKIT_DEFINE_ERROR(NotSubgroup);
HWVKIT_DEFINE_ERROR(DegreeMismatch);
HWVKIT_DEFINE_ERROR(CapExceeded);
HWVKIT_DEFINE_ERROR(RingMismatch);
HWVKIT_DEFINE_ERROR(AmbientMismatch);
HWVKIT_DEFINE_ERROR(IndexError);
HWVKIT_DEFINE_ERROR(DenominatorError);
HWVKIT_DEFINE_ERROR(FieldRequired);
HWVKIT_DEFINE_ERROR(EntryRange);
HWVKIT_DEFINE_ERROR(ParseError);

#undef HWVKIT_DEFINE_ERROR

}  // namespace hwvkit
