#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistgate {

/// Base class for every input-domain failure raised by the library.
/// The command line maps all of these to the "unsupported-input" status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual std::string_view kind() const noexcept { return "Error"; }
};

#define TWISTGATE_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                             \
   public:                                                                \
    using Error::Error;                                                   \
    std::string_view kind() const noexcept override { return #Name; }    \
  }

TWISTGATE_DEFINE_ERROR(DomainError);
TWISTGATE_DEFINE_ERROR(ZeroInputError);
TWISTGATE_DEFINE_ERROR(EvenModulusError);
TWISTGATE_DEFINE_ERROR(CompositeResidueError);
TWISTGATE_DEFINE_ERROR(SingularCurveError);
TWISTGATE_DEFINE_ERROR(NotSquarefreeError);
TWISTGATE_DEFINE_ERROR(UnsupportedPrimeError);
TWISTGATE_DEFINE_ERROR(PrimeTooLargeError);
TWISTGATE_DEFINE_ERROR(NonMinimalModelError);
TWISTGATE_DEFINE_ERROR(UnsupportedReductionError);
TWISTGATE_DEFINE_ERROR(UnsupportedPlaceError);
TWISTGATE_DEFINE_ERROR(HypothesisViolationError);
TWISTGATE_DEFINE_ERROR(TermBudgetError);
TWISTGATE_DEFINE_ERROR(BadAuxPrimeError);
TWISTGATE_DEFINE_ERROR(NotOnCurveError);
TWISTGATE_DEFINE_ERROR(NonCommutingActionError);
TWISTGATE_DEFINE_ERROR(NonInvolutiveActionError);
TWISTGATE_DEFINE_ERROR(CurveTableError);

#undef TWISTGATE_DEFINE_ERROR

}  // namespace twistgate
