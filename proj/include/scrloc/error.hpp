#pragma once

#include <stdexcept>
#include <string>

namespace scrloc {

// Error taxonomy shared by the C++ core and the C API. Every throwing
// operation in the library uses Error with one of these codes; the C API
// maps them 1:1 onto scrloc_status values.
enum class ErrorCode {
    kInvalidArgument,
    kInfeasibleConstraint,
    kDegeneratePair,
    kOverflow,
    kTooFewSamples,
    kDimensionMismatch,
    kCodebookMismatch,
    kDegenerateConfiguration,
    kNoConsensus,
    kNoValidPixels,
    kEmptyInput,
    kIo,
    kParse,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument: return "invalid-argument";
        case ErrorCode::kInfeasibleConstraint: return "infeasible-constraint";
        case ErrorCode::kDegeneratePair: return "degenerate-pair";
        case ErrorCode::kOverflow: return "overflow";
        case ErrorCode::kTooFewSamples: return "too-few-samples";
        case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
        case ErrorCode::kCodebookMismatch: return "codebook-mismatch";
        case ErrorCode::kDegenerateConfiguration: return "degenerate-configuration";
        case ErrorCode::kNoConsensus: return "no-consensus";
        case ErrorCode::kNoValidPixels: return "no-valid-pixels";
        case ErrorCode::kEmptyInput: return "empty-input";
        case ErrorCode::kIo: return "io";
        case ErrorCode::kParse: return "parse";
    }
    return "unknown";
}

}  // namespace scrloc
