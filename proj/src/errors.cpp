#include "iqf/errors.hpp"

namespace iqf {

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::NotCoxRegular: return "NotCoxRegular";
        case ErrorKind::NotNonNegative: return "NotNonNegative";
        case ErrorKind::NotIncidenceForm: return "NotIncidenceForm";
        case ErrorKind::NotTypeC: return "NotTypeC";
        case ErrorKind::NotPositive: return "NotPositive";
        case ErrorKind::RadicalRoot: return "RadicalRoot";
        case ErrorKind::UnrepresentedWithinBound: return "UnrepresentedWithinBound";
        case ErrorKind::GentlenessViolation: return "GentlenessViolation";
        case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
        case ErrorKind::InfiniteGlobalDimensionSuspected: return "InfiniteGlobalDimensionSuspected";
        case ErrorKind::AmbiguousMatching: return "AmbiguousMatching";
        case ErrorKind::InconsistentPresentation: return "InconsistentPresentation";
    }
    return "Unknown";
}

}  // namespace iqf
