#pragma once

#include <stdexcept>
#include <string>

namespace iqf {

enum class ErrorKind {
    InvalidInput,
    NotCoxRegular,
    NotNonNegative,
    NotIncidenceForm,
    NotTypeC,
    NotPositive,
    RadicalRoot,
    UnrepresentedWithinBound,
    GentlenessViolation,
    InfiniteDimensional,
    InfiniteGlobalDimensionSuspected,
    AmbiguousMatching,
    InconsistentPresentation,
};

const char* kind_name(ErrorKind kind);

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& what)
        : std::runtime_error(std::string(kind_name(k)) + ": " + what), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& what) { throw Error(k, what); }

inline void require(bool ok, ErrorKind k, const std::string& what) {
    if (!ok) fail(k, what);
}

}  // namespace iqf
