// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include "nrange/errors.hpp"

namespace nrange {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotPSD: return "NotPSD";
        case ErrorCode::NotContraction: return "NotContraction";
        case ErrorCode::NotUnitaryParameter: return "NotUnitaryParameter";
        case ErrorCode::SingularChart: return "SingularChart";
        case ErrorCode::KOutOfRange: return "KOutOfRange";
        case ErrorCode::DefectMismatch: return "DefectMismatch";
        case ErrorCode::ConstraintViolated: return "ConstraintViolated";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::EmptyModel: return "EmptyModel";
        case ErrorCode::OptimizerDidNotConverge: return "OptimizerDidNotConverge";
        case ErrorCode::WeightsNotSortedReal: return "WeightsNotSortedReal";
        case ErrorCode::PrescriptionInvalid: return "PrescriptionInvalid";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace nrange
