#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace denominal {

enum class ErrorKind {
    // morphology
    ArityMismatch,
    UnknownLetter,
    NoTemplaticConsonant,
    NoPluralPattern,
    MalformedInventory,
    MalformedAlphabet,
    // datasetgen
    MalformedLine,
    EmptyCorpus,
    MalformedReviewFile,
    InvalidDataPoint,
    // vectors
    DimensionMismatch,
    NonNumericComponent,
    EmptyFile,
    // reduction / statistics
    DegenerateInput,
    ZeroVector,
    AllZeros,
    EmptySample,
    InsufficientData,
    TooFewPoints,
    // synthgeom
    InvalidConfig,
    // plumbing
    Io,
};

const char* to_string(ErrorKind kind);

/// True for failures of a statistical precondition (too few points, no
/// informative pairs, ...) as opposed to malformed input data.
bool is_statistical(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::size_t line = 0);

    ErrorKind kind() const noexcept { return kind_; }
    /// 1-based line number for file-format errors, 0 when not applicable.
    std::size_t line() const noexcept { return line_; }

private:
    ErrorKind kind_;
    std::size_t line_;
};

}  // namespace denominal
