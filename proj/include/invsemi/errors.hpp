#pragma once

#include <stdexcept>
#include <string>

namespace invsemi {

// Every error raised by the library derives from Error, so front ends can
// catch one type and report `kind()` as a machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define INVSEMI_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  }

INVSEMI_DEFINE_ERROR(AxiomViolation);
INVSEMI_DEFINE_ERROR(CapExceeded);
INVSEMI_DEFINE_ERROR(FieldMismatch);
INVSEMI_DEFINE_ERROR(NotIdempotent);
INVSEMI_DEFINE_ERROR(NotBelow);
INVSEMI_DEFINE_ERROR(NotBoolean);
INVSEMI_DEFINE_ERROR(NotAdditiveIdeal);
INVSEMI_DEFINE_ERROR(WrongActionShape);
INVSEMI_DEFINE_ERROR(ShapeViolation);
INVSEMI_DEFINE_ERROR(UnsupportedAction);
INVSEMI_DEFINE_ERROR(Undecidable);
INVSEMI_DEFINE_ERROR(ParseError);
INVSEMI_DEFINE_ERROR(InvalidArgument);

#undef INVSEMI_DEFINE_ERROR

}  // namespace invsemi
