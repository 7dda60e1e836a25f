// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_ERRORS_HPP
#define NRANGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nrange {

enum class ErrorCode {
    NonFinite,
    NotHermitian,
    NotPSD,
    NotContraction,
    NotUnitaryParameter,
    SingularChart,
    KOutOfRange,
    DefectMismatch,
    ConstraintViolated,
    TooLarge,
    EmptyModel,
    OptimizerDidNotConverge,
    WeightsNotSortedReal,
    PrescriptionInvalid,
    ParseError,
    ShapeError,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// All library errors carry a machine-readable code plus a human message.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace nrange

#endif // NRANGE_ERRORS_HPP
