#include "icis/error.hpp"

namespace icis {

std::string_view code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidInput: return "E_INVALID_INPUT";
    case ErrorCode::RingMismatch: return "E_RING_MISMATCH";
    case ErrorCode::UnknownVariable: return "E_UNKNOWN_VARIABLE";
    case ErrorCode::IncompleteBasis: return "E_INCOMPLETE_BASIS";
    case ErrorCode::BudgetExhausted: return "E_BUDGET";
    case ErrorCode::NotZeroDimensional: return "E_NOT_ZERO_DIMENSIONAL";
    case ErrorCode::InfiniteMilnor: return "E_INFINITE_MILNOR";
    case ErrorCode::GenericityFailure: return "E_GENERICITY";
    case ErrorCode::Unsupported: return "E_UNSUPPORTED";
    case ErrorCode::Syntax: return "E_SYNTAX";
    case ErrorCode::UnboundName: return "E_UNBOUND_NAME";
    case ErrorCode::MissingParameter: return "E_MISSING_PARAMETER";
    case ErrorCode::MissingBinding: return "E_MISSING_BINDING";
    case ErrorCode::UnknownKind: return "E_UNKNOWN_KIND";
    case ErrorCode::Io: return "E_IO";
    }
    return "E_UNKNOWN";
}

}  // namespace icis
