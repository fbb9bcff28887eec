// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vve {

/// Machine-readable failure categories shared by every module.
enum class ErrorCode {
    // model-core
    NonPositiveSpot,
    DegenerateDiffusion,
    NegativeCoefficient,
    NegativePrice,
    NonPositivePrice,
    NegativeTime,
    InvalidCevParams,
    // sde-engine
    InvalidGrid,
    InvalidArgument,
    SigmaZeroUnsupported,
    GammaNearZero,
    // calibration
    SeriesTooShort,
    DegenerateX,
    TooFewPoints,
    NegativeSlope,
    // pricing
    SingularDelta,
    InverseOutOfRange,
    OutOfRange,
    ExplosionRegion,
    InvalidOption,
    // cli-io
    ParseError,
    DuplicateDate,
    NonPositiveClose,
    IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace vve
