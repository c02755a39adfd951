#pragma once

#include <stdexcept>
#include <string>

namespace tabml {

enum class ErrorCode {
    // table loading / validation
    FileNotFound,
    HeaderMismatch,
    RowWidthMismatch,
    UnparseableNumeric,
    MissingValue,
    UnknownCategory,
    EmptyTable,
    NonBinaryTarget,
    DegenerateSplit,
    TooFewRows,
    // tree / model contracts
    EmptyNode,
    EmptySampleSet,
    DimensionMismatch,
    SingleClassTraining,
    // metrics
    LengthMismatch,
    EmptyInput,
    SingleClassLabels,
    // harness
    InvalidConfig,
    BadModelFile,
    IoError,
};

// Coarse grouping used by the C API status codes and the CLI exit codes.
enum class ErrorCategory { Config, Data, Io };

inline ErrorCategory error_category(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidConfig:
        return ErrorCategory::Config;
    case ErrorCode::IoError:
        return ErrorCategory::Io;
    default:
        return ErrorCategory::Data;
    }
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::RowWidthMismatch: return "RowWidthMismatch";
    case ErrorCode::UnparseableNumeric: return "UnparseableNumeric";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::UnknownCategory: return "UnknownCategory";
    case ErrorCode::EmptyTable: return "EmptyTable";
    case ErrorCode::NonBinaryTarget: return "NonBinaryTarget";
    case ErrorCode::DegenerateSplit: return "DegenerateSplit";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::EmptyNode: return "EmptyNode";
    case ErrorCode::EmptySampleSet: return "EmptySampleSet";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingleClassTraining: return "SingleClassTraining";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::SingleClassLabels: return "SingleClassLabels";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::BadModelFile: return "BadModelFile";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace tabml
