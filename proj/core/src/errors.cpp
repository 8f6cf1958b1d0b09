#include "zetalab/errors.hpp"

namespace zetalab {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::EtaPole: return "eta_pole";
    case ErrorKind::ProductSingularity: return "product_singularity";
    case ErrorKind::Config: return "config";
    case ErrorKind::GridTooCoarse: return "grid_too_coarse";
    case ErrorKind::EvaluatorAccuracy: return "evaluator_accuracy";
    case ErrorKind::NoSignChange: return "no_sign_change";
    case ErrorKind::SingularStep: return "singular_step";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

} // namespace zetalab
