#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace axetlab {

enum class ErrorKind {
    MixedFields,
    DivisionByZero,
    DenominatorVanishes,
    UnboundSymbol,
    BadField,
    DimensionMismatch,
    NotProperIdeal,
    DegenerateParameter,
    BadCharacteristic,
    NotPrimitive,
    NotSemisimple,
    NoGrading,
    NotAnAxis,
    NotClosedWithinBound,
    TooLarge,
    EvenK,
    IdentityFails,
    NonlinearInLambda2f,
    ContradictionNotFound,
    NoMatch,
    ParseError,
    UnknownSymbol,
    NoAxesDeclared,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::UnboundSymbol: return "UnboundSymbol";
    case ErrorKind::BadField: return "BadField";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotProperIdeal: return "NotProperIdeal";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NoGrading: return "NoGrading";
    case ErrorKind::NotAnAxis: return "NotAnAxis";
    case ErrorKind::NotClosedWithinBound: return "NotClosedWithinBound";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EvenK: return "EvenK";
    case ErrorKind::IdentityFails: return "IdentityFails";
    case ErrorKind::NonlinearInLambda2f: return "NonlinearInLambda2f";
    case ErrorKind::ContradictionNotFound: return "ContradictionNotFound";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::NoAxesDeclared: return "NoAxesDeclared";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

} // namespace axetlab
