#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kummer {

enum class Errc {
    DivisionByZero,
    BothZero,
    ZeroInput,
    UnsupportedField,
    ParseError,
    SourceTargetMismatch,
    NotInvertible,
    SingularLocus,
    NotVanishingOnIdentity,
    NotDetermined,
    ConstantInput,
    OrderTooLow,
    PoleOfMobius,
    WrongOrder,
    NonTraceFree,
    BasePointSingular,
    SingularEncounter,
    StepFailure,
    ZeroDenominatorOnPath,
    DomainMismatch,
    DegeneratePlane,
    InvalidArgument,
};

constexpr std::string_view errc_name(Errc e) noexcept
{
    switch (e) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::ParseError: return "ParseError";
    case Errc::SourceTargetMismatch: return "SourceTargetMismatch";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::SingularLocus: return "SingularLocus";
    case Errc::NotVanishingOnIdentity: return "NotVanishingOnIdentity";
    case Errc::NotDetermined: return "NotDetermined";
    case Errc::ConstantInput: return "ConstantInput";
    case Errc::OrderTooLow: return "OrderTooLow";
    case Errc::PoleOfMobius: return "PoleOfMobius";
    case Errc::WrongOrder: return "WrongOrder";
    case Errc::NonTraceFree: return "NonTraceFree";
    case Errc::BasePointSingular: return "BasePointSingular";
    case Errc::SingularEncounter: return "SingularEncounter";
    case Errc::StepFailure: return "StepFailure";
    case Errc::ZeroDenominatorOnPath: return "ZeroDenominatorOnPath";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::DegeneratePlane: return "DegeneratePlane";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this exception; the code
/// identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace kummer
