// SPDX-License-Identifier: MIT
#include "vve/error.hpp"

namespace vve {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositiveSpot: return "NonPositiveSpot";
        case ErrorCode::DegenerateDiffusion: return "DegenerateDiffusion";
        case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
        case ErrorCode::NegativePrice: return "NegativePrice";
        case ErrorCode::NonPositivePrice: return "NonPositivePrice";
        case ErrorCode::NegativeTime: return "NegativeTime";
        case ErrorCode::InvalidCevParams: return "InvalidCevParams";
        case ErrorCode::InvalidGrid: return "InvalidGrid";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::SigmaZeroUnsupported: return "SigmaZeroUnsupported";
        case ErrorCode::GammaNearZero: return "GammaNearZero";
        case ErrorCode::SeriesTooShort: return "SeriesTooShort";
        case ErrorCode::DegenerateX: return "DegenerateX";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::NegativeSlope: return "NegativeSlope";
        case ErrorCode::SingularDelta: return "SingularDelta";
        case ErrorCode::InverseOutOfRange: return "InverseOutOfRange";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::ExplosionRegion: return "ExplosionRegion";
        case ErrorCode::InvalidOption: return "InvalidOption";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DuplicateDate: return "DuplicateDate";
        case ErrorCode::NonPositiveClose: return "NonPositiveClose";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace vve
