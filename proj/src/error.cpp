#include "gkit/error.hpp"

namespace gkit {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
        case ErrorCode::NonLocalGroup: return "NonLocalGroup";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::SocleNotSimple: return "SocleNotSimple";
        case ErrorCode::DepthExceeded: return "DepthExceeded";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::RankTooLarge: return "RankTooLarge";
        case ErrorCode::NotExact: return "NotExact";
        case ErrorCode::NonpositiveRank: return "NonpositiveRank";
        case ErrorCode::QuotientNotFree: return "QuotientNotFree";
        case ErrorCode::NotASubset: return "NotASubset";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::IncompatibleFamily: return "IncompatibleFamily";
        case ErrorCode::MissingDivisor: return "MissingDivisor";
        case ErrorCode::CorankNotOne: return "CorankNotOne";
        case ErrorCode::NonzeroDeterminant: return "NonzeroDeterminant";
        case ErrorCode::BadEmbedding: return "BadEmbedding";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::UsageError: return "UsageError";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace gkit
