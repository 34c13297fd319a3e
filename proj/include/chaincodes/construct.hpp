#pragma once

#include <cstdint>
#include <vector>

#include "chaincodes/code.hpp"

namespace chaincodes {

/// (b_0, ..., b_{m-1}): b_j rows whose entries range over <theta^j>.
struct IdealBlockProfile {
  std::vector<std::uint32_t> sizes;

  /// Throws InvalidParameters unless there are m entries with at least one nonzero.
  void validate(const Ring& ring) const;
  std::uint32_t rows() const;
  /// k = sum (m - j) b_j.
  std::uint32_t qdim(const Ring& ring) const;
};

/// All distinct nonzero columns whose j-th row block lies in <theta^j>, in
/// lexicographic order. Spans a one-weight code.
CodeMatrix one_weight_generator(const Ring& ring, const IdealBlockProfile& profile,
                                std::uint64_t guard = enumeration_guard());

/// q^{m-m0} copies of G side by side plus a row (0*1, a_1*1, ...) over <theta^{m0}>.
CodeMatrix extend_generator(const CodeMatrix& gen, std::uint32_t m0, std::uint64_t guard = enumeration_guard());

/// Predicted distribution after one extend_generator step at m0.
WeightDistribution predict_extension_distribution(const Ring& ring, const WeightDistribution& dist, std::uint64_t n,
                                                  std::uint32_t m0);

/// k x q^{(m-1)k} matrix of every vector in <theta>^k, zero column first.
CodeMatrix b_matrix(const Ring& ring, std::uint32_t k, std::uint64_t guard = enumeration_guard());

/// Y_1 = [1], Y_k = [Y_{k-1} ... Y_{k-1} B_{k-1}; r_0*1 ... r_{q^m-1}*1 1].
CodeMatrix y_matrix(const Ring& ring, std::uint32_t k, std::uint64_t guard = enumeration_guard());

/// Y_t extended k_0 - t times at m0 = 0, then k_i times at m0 = i.
CodeMatrix optimal_two_weight_code(const Ring& ring, const CodeTypeProfile& profile, std::uint32_t t,
                                   std::uint64_t guard = enumeration_guard());

}  // namespace chaincodes
