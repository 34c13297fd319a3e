#include "chaincodes/minimality.hpp"

#include <algorithm>
#include <bit>

#include "chaincodes/error.hpp"

namespace chaincodes {

namespace {

using Support = std::vector<std::uint64_t>;

Support support_of(std::span<const FieldElem> v) {
  Support s((v.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (index_of(v[i]) != 0) s[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return s;
}

std::size_t popcount(const Support& s) {
  std::size_t n = 0;
  for (auto w : s) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

// small is a proper subset of big.
bool proper_subset(const Support& small, std::size_t small_size, const Support& big, std::size_t big_size) {
  if (small_size >= big_size) return false;
  for (std::size_t i = 0; i < small.size(); ++i) {
    if ((small[i] & ~big[i]) != 0) return false;
  }
  return true;
}

}  // namespace

bool covers(std::span<const FieldElem> c1, std::span<const FieldElem> c2) {
  if (c1.size() != c2.size()) throw Error(ErrorKind::length_mismatch, "vector lengths differ");
  const Support a = support_of(c1), b = support_of(c2);
  return proper_subset(b, popcount(b), a, popcount(a));
}

std::vector<FqVector> minimal_codewords(const std::vector<FqVector>& image, std::uint64_t guard) {
  if (image.size() > guard) throw Error(ErrorKind::enumeration_too_large, "image exceeds the enumeration guard");
  std::vector<Support> supports;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (!image.empty() && image[i].size() != image.front().size()) {
      throw Error(ErrorKind::length_mismatch, "image vectors of unequal length");
    }
    supports.push_back(support_of(image[i]));
    sizes.push_back(popcount(supports.back()));
    if (sizes.back() != 0) nonzero.push_back(i);
  }
  std::vector<FqVector> out;
  for (std::size_t i : nonzero) {
    const bool covering = std::any_of(nonzero.begin(), nonzero.end(), [&](std::size_t j) {
      return proper_subset(supports[j], sizes[j], supports[i], sizes[i]);
    });
    if (!covering) out.push_back(image[i]);
  }
  return out;
}

bool ab_condition(std::uint64_t w_min, std::uint64_t w_max, std::uint64_t q) {
  if (w_min == 0 || w_min > w_max) throw Error(ErrorKind::invalid_weights, "need 0 < w_min <= w_max");
  if (q < 2) throw Error(ErrorKind::invalid_parameters, "q must be at least 2");
  using boost::multiprecision::cpp_int;
  return cpp_int(w_min) * q > cpp_int(w_max) * (q - 1);
}

MinimalityReport analyze_minimality(const Field& field, const GrayImage& image) {
  MinimalityReport report;
  report.total = image.hamming_distribution.total() - image.hamming_distribution.count(0);
  report.minimal = minimal_codewords(image.vectors).size();
  report.all_minimal = report.minimal == report.total;
  report.linear = image.is_linear;
  if (report.total > 0) {
    report.ab_condition = ab_condition(image.hamming_distribution.min_nonzero(),
                                       image.hamming_distribution.max_nonzero(), field.size());
  }
  return report;
}

MinimalityReport analyze_minimality(const LinearCode& code) {
  return analyze_minimality(code.ring().residue_field(), gray_image(code));
}

}  // namespace chaincodes
