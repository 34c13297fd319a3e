#pragma once

#include <cstdint>
#include <vector>

#include "chaincodes/code.hpp"

namespace chaincodes {

using FqVector = std::vector<FieldElem>;

/// c_0, ..., c_{m-1} of length q^{m-1}; c_{m-1} is all-one.
struct GrayBasis {
  std::vector<FqVector> c;
};

GrayBasis gray_basis(const Ring& ring);

FqVector gray_element(const Ring& ring, Elem a);
FqVector gray_vector(const Ring& ring, std::span<const Elem> x);

std::uint64_t hamming_weight(std::span<const FieldElem> v);
std::uint64_t hamming_distance(std::span<const FieldElem> a, std::span<const FieldElem> b);
std::uint64_t hom_distance(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b);

struct GrayImage {
  std::vector<FqVector> vectors;  // sorted
  WeightDistribution hamming_distribution;
  bool injective = false;
  bool is_linear = false;
};

GrayImage gray_image(const LinearCode& code);

/// Whether a set of F_q vectors is closed under addition and scalar multiplication.
bool is_fq_linear(const Field& field, const std::vector<FqVector>& vectors);

struct Su1Parameters {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t w1 = 0;
  std::uint64_t w2 = 0;
  std::uint64_t a1 = 0;
  std::uint64_t a2 = 0;

  bool operator==(const Su1Parameters&) const = default;
};

/// Throws InvalidParameters unless l > 1 and 1 <= s <= l - 1.
Su1Parameters su1_parameters(std::uint64_t q, std::uint64_t l, std::uint64_t s);

/// Gray image of a two-weight characterized code against SU1(q, k, k - t).
bool compare_su1(const LinearCode& code);

}  // namespace chaincodes
