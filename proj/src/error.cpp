#include "lix/error.hpp"

namespace lix {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroRange: return "ZeroRange";
        case ErrorCode::ZeroVolume: return "ZeroVolume";
        case ErrorCode::NonPositivePrice: return "NonPositivePrice";
        case ErrorCode::InvalidInterval: return "InvalidInterval";
        case ErrorCode::InvalidAlpha: return "InvalidAlpha";
        case ErrorCode::InvalidBar: return "InvalidBar";
        case ErrorCode::EmptySide: return "EmptySide";
        case ErrorCode::CrossedBook: return "CrossedBook";
        case ErrorCode::InvalidLevel: return "InvalidLevel";
        case ErrorCode::InvalidAdv: return "InvalidAdv";
        case ErrorCode::InvalidPlan: return "InvalidPlan";
        case ErrorCode::EmptyBasket: return "EmptyBasket";
        case ErrorCode::UnnormalizedWeights: return "UnnormalizedWeights";
        case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorCode::MissingEtfLeg: return "MissingEtfLeg";
        case ErrorCode::EmptyList: return "EmptyList";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::ZeroDollarVolume: return "ZeroDollarVolume";
        case ErrorCode::InvalidWindow: return "InvalidWindow";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::DegenerateGrid: return "DegenerateGrid";
        case ErrorCode::DegenerateRegression: return "DegenerateRegression";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::GapInLevels: return "GapInLevels";
        case ErrorCode::EmptyDataset: return "EmptyDataset";
        case ErrorCode::AllZeroVolume: return "AllZeroVolume";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& where, const std::string& detail) {
    std::string msg{to_string(code)};
    if (!where.empty()) {
        msg += " [" + where + "]";
    }
    if (!detail.empty()) {
        msg += ": " + detail;
    }
    return msg;
}

}  // namespace

Error::Error(ErrorCode code, std::string where, const std::string& detail)
    : std::runtime_error(compose(code, where, detail)), code_(code), where_(std::move(where)) {}

}  // namespace lix
