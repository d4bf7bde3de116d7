#include "frs/errors.hpp"

namespace frs {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::OrderTooSmall: return "OrderTooSmall";
        case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::TooManyErrors: return "TooManyErrors";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ParamsInfeasible: return "ParamsInfeasible";
        case ErrorKind::DegenerateSystem: return "DegenerateSystem";
        case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorKind::BadEpsilon: return "BadEpsilon";
        case ErrorKind::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

} // namespace frs
