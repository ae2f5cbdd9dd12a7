#include "conjcert/error.hpp"

namespace conjcert {
const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::DescriptorMismatch: return "DescriptorMismatch";
        case Errc::UnsupportedField: return "UnsupportedField";
        case Errc::NotMonic: return "NotMonic";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::NotSquare: return "NotSquare";
        case Errc::CyclicInput: return "CyclicInput";
        case Errc::NonInvertible: return "NonInvertible";
        case Errc::AlgebraMismatch: return "AlgebraMismatch";
        case Errc::NotAnInvolution: return "NotAnInvolution";
        case Errc::BadTwist: return "BadTwist";
        case Errc::EmptySolutionSpace: return "EmptySolutionSpace";
        case Errc::GridExhausted: return "GridExhausted";
        case Errc::InternalAssertion: return "InternalAssertion";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace conjcert
