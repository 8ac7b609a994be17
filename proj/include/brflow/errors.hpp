#pragma once
#include <stdexcept>
#include <string>

namespace brflow {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define BRFLOW_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                             \
    explicit Name(const std::string& msg) : Error(msg) {}           \
  }

BRFLOW_DEFINE_ERROR(NonUnimodular);
BRFLOW_DEFINE_ERROR(InvalidMetric);
BRFLOW_DEFINE_ERROR(IndexError);
BRFLOW_DEFINE_ERROR(WrongParams);
BRFLOW_DEFINE_ERROR(NoClosedForm);
BRFLOW_DEFINE_ERROR(TimeOutOfRange);
BRFLOW_DEFINE_ERROR(RootNotBracketed);
BRFLOW_DEFINE_ERROR(MaxStepsExceeded);
BRFLOW_DEFINE_ERROR(NonFiniteState);
BRFLOW_DEFINE_ERROR(NonDiagonalFlow);
BRFLOW_DEFINE_ERROR(InsufficientData);

#undef BRFLOW_DEFINE_ERROR

}  // namespace brflow
