#pragma once

#include <stdexcept>
#include <string>

namespace conjcert {

enum class Errc {
    DivisionByZero,
    DescriptorMismatch,
    UnsupportedField,
    NotMonic,
    SingularMatrix,
    ShapeMismatch,
    NotSquare,
    CyclicInput,
    NonInvertible,
    AlgebraMismatch,
    NotAnInvolution,
    BadTwist,
    EmptySolutionSpace,
    GridExhausted,
    InternalAssertion,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code), detail_(detail) {}

    Errc code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

// Invariants proved elsewhere are still re-checked at runtime; a failure
// signals an implementation bug, never an input problem.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw Error(Errc::InternalAssertion, what);
}

} // namespace conjcert
