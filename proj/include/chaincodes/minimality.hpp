#pragma once

#include <cstdint>
#include <vector>

#include "chaincodes/gray.hpp"

namespace chaincodes {

/// supp(c2) is a proper subset of supp(c1).
bool covers(std::span<const FieldElem> c1, std::span<const FieldElem> c2);

/// Nonzero vectors that cover no other nonzero vector of the set, in input order.
std::vector<FqVector> minimal_codewords(const std::vector<FqVector>& image,
                                        std::uint64_t guard = enumeration_guard());

/// w_min * q > w_max * (q - 1). Throws InvalidWeights unless 0 < w_min <= w_max.
bool ab_condition(std::uint64_t w_min, std::uint64_t w_max, std::uint64_t q);

struct MinimalityReport {
  std::uint64_t total = 0;  // nonzero image vectors
  std::uint64_t minimal = 0;
  bool all_minimal = false;
  bool ab_condition = false;
  bool linear = false;
};

MinimalityReport analyze_minimality(const LinearCode& code);
MinimalityReport analyze_minimality(const Field& field, const GrayImage& image);

}  // namespace chaincodes
