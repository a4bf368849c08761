#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace evo {

enum class ErrorCode {
    SyntaxError,
    DomainError,
    DivisionByZero,
    MixedFields,
    AmbientMismatch,
    ShapeError,
    NotAnIdeal,
    NotNilpotent,
    SpecMismatch,
    SqrtUnavailable,
    KindMismatch,
    UnsupportedField,
    UnsupportedDim,
    FieldLacksI,
    BudgetExceeded,
    Singular,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace evo
