#include "vfunc/error.hpp"

namespace vfunc {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::NontrivialUnramifiedPart: return "NontrivialUnramifiedPart";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotInJ: return "NotInJ";
        case ErrorKind::G1Zero: return "G1Zero";
        case ErrorKind::G2DependentOnG1: return "G2DependentOnG1";
        case ErrorKind::AInPrimeField: return "AInPrimeField";
        case ErrorKind::MixedExtensions: return "MixedExtensions";
        case ErrorKind::LatticeAssertionFailed: return "LatticeAssertionFailed";
        case ErrorKind::NotInTheta: return "NotInTheta";
        case ErrorKind::NumberingMismatch: return "NumberingMismatch";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace vfunc
