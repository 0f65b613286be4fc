#pragma once

#include <stdexcept>
#include <string>

namespace hhd {

/// Machine-readable failure kinds surfaced by the library.
enum class ErrorCode {
    ShapeMismatch,
    ZeroEntry,
    InvalidPartition,
    EmptyInput,
    ZeroReference,
    IndexOutOfRange,
    NoFeasibleGrouping,
    DegeneratePencil,
    RankDeficient,
    SingularSubproblem,
    UnsortedInput,
    ZeroLeadingEntry,
    NotAdmissible,
    AmbiguousMagnitudes,
    VerificationFailed,
    TooLarge,
    RankMismatch,
    ZeroAnchor,
    ZeroTensor,
    IneffectivePartition,
    OrderTooSmall,
    TooManyModes,
    Overflow,
    InvalidArgument,
    IoError,
};

const char* to_string(ErrorCode code);

/// Exception carrying an ErrorCode so callers can dispatch without
/// parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace hhd
