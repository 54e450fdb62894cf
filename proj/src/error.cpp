#include "hopfkit/error.hpp"

namespace hopfkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_field: return "InvalidField";
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::not_invertible: return "NotInvertible";
    case ErrorKind::no_antipode: return "NoAntipode";
    case ErrorKind::class_condition_failed: return "ClassConditionFailed";
    case ErrorKind::non_symmetric_braiding: return "NonSymmetricBraiding";
    case ErrorKind::precondition_not_met: return "PreconditionNotMet";
    case ErrorKind::not_idempotent: return "NotIdempotent";
    case ErrorKind::beta_unavailable: return "BetaUnavailable";
    case ErrorKind::condition_b_failed: return "ConditionBFailed";
    case ErrorKind::not_phi_twisted: return "NotPhiTwisted";
    case ErrorKind::not_cocommutative: return "NotCocommutative";
    case ErrorKind::t_not_invertible: return "TNotInvertible";
    case ErrorKind::not_a_truss_morphism: return "NotATrussMorphism";
    case ErrorKind::not_an_rb_morphism: return "NotAnRBMorphism";
    case ErrorKind::invalid_group_table: return "InvalidGroupTable";
    case ErrorKind::invalid_action: return "InvalidAction";
    case ErrorKind::bound_exceeded: return "BoundExceeded";
    case ErrorKind::char_two: return "CharTwo";
    case ErrorKind::unknown_group: return "UnknownGroup";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::shape_error: return "ShapeError";
    case ErrorKind::unknown_kind: return "UnknownKind";
    case ErrorKind::domain_mismatch: return "DomainMismatch";
  }
  return "Unknown";
}

}  // namespace hopfkit
