#ifndef VFUNC_ERROR_HPP
#define VFUNC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace vfunc {

enum class ErrorKind {
    DivisionByZero,
    InvalidField,
    NontrivialUnramifiedPart,
    NotDivisible,
    NonSquare,
    DimensionMismatch,
    NotInJ,
    G1Zero,
    G2DependentOnG1,
    AInPrimeField,
    MixedExtensions,
    LatticeAssertionFailed,
    NotInTheta,
    NumberingMismatch,
    ParseError,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Exception type for every library failure; kind() identifies the condition.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace vfunc

#endif  // VFUNC_ERROR_HPP
