#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chaincodes {

enum class ErrorKind {
  non_prime,
  depth_too_small,
  reducible_polynomial,
  invalid_parameters,
  ring_mismatch,
  index_out_of_range,
  enumeration_too_large,
  not_power_of_q,
  empty_code,
  trivial_code,
  internal_inconsistency,
  not_applicable,
  characterization_violated,
  invalid_t,
  length_mismatch,
  invalid_weights,
  weight_not_present,
  not_unit_stable,
  not_regular_vector,
  parse_error,
  io_error,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace chaincodes
