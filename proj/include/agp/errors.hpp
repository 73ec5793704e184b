#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BaseTooSmall : Error {
    BaseTooSmall() : Error("base must be at least 2") {}
};

struct ZeroInput : Error {
    ZeroInput() : Error("input must be positive") {}
};

struct IterZeroOnSentinel : Error {
    IterZeroOnSentinel() : Error("zero-fold iteration of the -1 sentinel has no value") {}
};

struct BadBases : Error {
    BadBases() : Error("target base must exceed source base") {}
};

struct ZeroTerm : Error {
    ZeroTerm() : Error("operation undefined on the zero term") {}
};

struct GuardViolated : Error {
    GuardViolated() : Error("expansion guard inequality fails; result is not normal") {}
};

struct NotApplicable : Error {
    using Error::Error;
};

struct InvalidTerm : Error {
    using Error::Error;
};

struct ZeroHasNoFS : Error {
    ZeroHasNoFS() : Error("zero has no fundamental sequence") {}
};

struct Overflow : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    size_t position;
    SyntaxError(size_t pos, const std::string& what)
        : Error("syntax error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
};

// Internal signal for budget exhaustion; public interfaces translate it into
// their Exceeded/Blowup result variants.
struct BudgetExhausted : Error {
    BudgetExhausted() : Error("evaluation budget exhausted") {}
};

}  // namespace agp
