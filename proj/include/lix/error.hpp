#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lix {

enum class ErrorCode {
    ZeroRange,
    ZeroVolume,
    NonPositivePrice,
    InvalidInterval,
    InvalidAlpha,
    InvalidBar,
    EmptySide,
    CrossedBook,
    InvalidLevel,
    InvalidAdv,
    InvalidPlan,
    EmptyBasket,
    UnnormalizedWeights,
    NonPositiveWeight,
    MissingEtfLeg,
    EmptyList,
    NonFinite,
    InsufficientData,
    ZeroDollarVolume,
    InvalidWindow,
    InvalidParams,
    DegenerateGrid,
    DegenerateRegression,
    ParseError,
    InvariantViolation,
    GapInLevels,
    EmptyDataset,
    AllZeroVolume,
    Io,
};

std::string_view to_string(ErrorCode code);

/// Validation failure raised by every library operation.
///
/// `where()` names the offending field, parameter, or file location so the
/// CLI can report it verbatim.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string where, const std::string& detail = {});

    ErrorCode code() const noexcept { return code_; }
    const std::string& where() const noexcept { return where_; }

private:
    ErrorCode code_;
    std::string where_;
};

}  // namespace lix
