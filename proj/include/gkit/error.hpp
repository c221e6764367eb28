#pragma once

#include <stdexcept>
#include <string>

namespace gkit {

enum class ErrorCode {
    NonPrimeModulus,
    NonLocalGroup,
    RingMismatch,
    SocleNotSimple,
    DepthExceeded,
    NoSolution,
    ZeroElement,
    RankTooLarge,
    NotExact,
    NonpositiveRank,
    QuotientNotFree,
    NotASubset,
    ShapeMismatch,
    IncompatibleFamily,
    MissingDivisor,
    CorankNotOne,
    NonzeroDeterminant,
    BadEmbedding,
    InvalidArgument,
    UsageError,
    ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace gkit
