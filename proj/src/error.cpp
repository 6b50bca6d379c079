#include "citenorm/error.hpp"

namespace citenorm {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositiveExpectedRate: return "NonPositiveExpectedRate";
        case ErrorCode::SelfCitationsExceedCitations: return "SelfCitationsExceedCitations";
        case ErrorCode::EmptyAfterFilter: return "EmptyAfterFilter";
        case ErrorCode::MissingSelfCitationData: return "MissingSelfCitationData";
        case ErrorCode::MissingColumn: return "MissingColumn";
        case ErrorCode::BadNumber: return "BadNumber";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::MissingFieldRate: return "MissingFieldRate";
        case ErrorCode::TooFewGroups: return "TooFewGroups";
        case ErrorCode::EmptyGroup: return "EmptyGroup";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ConstantInput: return "ConstantInput";
        case ErrorCode::EmptyReference: return "EmptyReference";
        case ErrorCode::MissingIndicator: return "MissingIndicator";
        case ErrorCode::NonPositiveBaseline: return "NonPositiveBaseline";
        case ErrorCode::TooFewUnits: return "TooFewUnits";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, std::optional<std::size_t> row) {
    std::string out(to_string(code));
    if (row) out += " (row " + std::to_string(*row) + ")";
    out += ": ";
    out += message;
    return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> row)
    : std::runtime_error(decorate(code, message, row)), code_(code), row_(row) {}

}  // namespace citenorm
