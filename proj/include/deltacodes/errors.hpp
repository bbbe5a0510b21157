#pragma once

#include <stdexcept>
#include <string>

namespace deltacodes {

enum class errc {
  division_by_zero,
  field_mismatch,
  param_mismatch,
  invalid_params,
  not_a_subfield,
  not_coprime,
  coefficient_not_in_subfield,
  u_not_coprime,
  not_in_ideal,
  length_mismatch,
  not_cyclic,
  empty_code,
  unsupported_t,
  too_large,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::param_mismatch: return "ParamMismatch";
    case errc::invalid_params: return "InvalidParams";
    case errc::not_a_subfield: return "NotASubfield";
    case errc::not_coprime: return "NotCoprime";
    case errc::coefficient_not_in_subfield: return "CoefficientNotInSubfield";
    case errc::u_not_coprime: return "UNotCoprime";
    case errc::not_in_ideal: return "NotInIdeal";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::not_cyclic: return "NotCyclic";
    case errc::empty_code: return "EmptyCode";
    case errc::unsupported_t: return "UnsupportedT";
    case errc::too_large: return "TooLarge";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc c, const std::string& what) { throw error(c, what); }

}  // namespace deltacodes
