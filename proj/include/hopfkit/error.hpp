#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfkit {

enum class ErrorKind {
  invalid_field,
  shape_mismatch,
  not_invertible,
  no_antipode,
  class_condition_failed,
  non_symmetric_braiding,
  precondition_not_met,
  not_idempotent,
  beta_unavailable,
  condition_b_failed,
  not_phi_twisted,
  not_cocommutative,
  t_not_invertible,
  not_a_truss_morphism,
  not_an_rb_morphism,
  invalid_group_table,
  invalid_action,
  bound_exceeded,
  char_two,
  unknown_group,
  parse_error,
  shape_error,
  unknown_kind,
  domain_mismatch,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library raises carries one of the kinds above so callers
// (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hopfkit
