#include "chaincodes/error.hpp"

namespace chaincodes {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::non_prime: return "NonPrime";
    case ErrorKind::depth_too_small: return "DepthTooSmall";
    case ErrorKind::reducible_polynomial: return "ReduciblePolynomial";
    case ErrorKind::invalid_parameters: return "InvalidParameters";
    case ErrorKind::ring_mismatch: return "RingMismatch";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::enumeration_too_large: return "EnumerationTooLarge";
    case ErrorKind::not_power_of_q: return "NotPowerOfQ";
    case ErrorKind::empty_code: return "EmptyCode";
    case ErrorKind::trivial_code: return "TrivialCode";
    case ErrorKind::internal_inconsistency: return "InternalInconsistency";
    case ErrorKind::not_applicable: return "NotApplicable";
    case ErrorKind::characterization_violated: return "CharacterizationViolated";
    case ErrorKind::invalid_t: return "InvalidT";
    case ErrorKind::length_mismatch: return "LengthMismatch";
    case ErrorKind::invalid_weights: return "InvalidWeights";
    case ErrorKind::weight_not_present: return "WeightNotPresent";
    case ErrorKind::not_unit_stable: return "NotUnitStable";
    case ErrorKind::not_regular_vector: return "NotRegularVector";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::io_error: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

}  // namespace chaincodes
