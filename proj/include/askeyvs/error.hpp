#ifndef ASKEYVS_ERROR_HPP
#define ASKEYVS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace askeyvs {

enum class Errc {
    DivisionByZero,
    VariableMismatch,
    ZeroDenominator,
    PoleAtPoint,
    DepthExceeded,
    CollidingEigenvalues,
    ZeroGInRange,
    DualNotDefined,
    InvalidSpec,
    RuleViolation,
    NotNormalizable,
    ZeroDenominatorInProduct,
    NoMatch,
    InadmissibleParameters,
    UnknownFamily,
    OracleUnavailable,
    UnknownLimitCase,
    NonIntegerExponent,
    PoleAtQ1,
    ParseError,
};

constexpr std::string_view errc_name(Errc e) noexcept
{
    switch (e) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::VariableMismatch: return "VariableMismatch";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::DepthExceeded: return "DepthExceeded";
    case Errc::CollidingEigenvalues: return "CollidingEigenvalues";
    case Errc::ZeroGInRange: return "ZeroGInRange";
    case Errc::DualNotDefined: return "DualNotDefined";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::RuleViolation: return "RuleViolation";
    case Errc::NotNormalizable: return "NotNormalizable";
    case Errc::ZeroDenominatorInProduct: return "ZeroDenominatorInProduct";
    case Errc::NoMatch: return "NoMatch";
    case Errc::InadmissibleParameters: return "InadmissibleParameters";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::OracleUnavailable: return "OracleUnavailable";
    case Errc::UnknownLimitCase: return "UnknownLimitCase";
    case Errc::NonIntegerExponent: return "NonIntegerExponent";
    case Errc::PoleAtQ1: return "PoleAtQ1";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this exception; `code()`
/// identifies the failure kind and `what()` reads "<Kind>: <detail>".
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code), detail_(detail)
    {
    }

    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

} // namespace askeyvs

#endif
