#ifndef REDINV_ERROR_HPP
#define REDINV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace redinv {

enum class Errc {
  division_by_zero,
  mixed_fields,
  arity_mismatch,
  zero_polynomial,
  infinite_staircase,
  ideal_is_unit,
  unit_defining_ideal,
  bad_variable_names,
  ring_mismatch,
  not_homogeneous,
  not_m_primary,
  no_stabilization,
  containment_failed,
  differences_not_stabilized,
  exhausted_draws,
  r_cap_exceeded,
  multiplicity_mismatch,
  not_numerical_semigroup,
  parse_error,
  semantic_error,
  overflow,
  bad_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace redinv

#endif
