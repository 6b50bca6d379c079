#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace citenorm {

enum class ErrorCode {
    NonPositiveExpectedRate,
    SelfCitationsExceedCitations,
    EmptyAfterFilter,
    MissingSelfCitationData,
    MissingColumn,
    BadNumber,
    EmptySet,
    MissingFieldRate,
    TooFewGroups,
    EmptyGroup,
    InsufficientData,
    LengthMismatch,
    ConstantInput,
    EmptyReference,
    MissingIndicator,
    NonPositiveBaseline,
    TooFewUnits,
    Io,
};

std::string_view to_string(ErrorCode code);

// Domain/data error. Carries a machine-readable code and, for CSV input,
// the 1-based line number of the offending row.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<std::size_t> row = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> row() const noexcept { return row_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> row_;
};

}  // namespace citenorm
