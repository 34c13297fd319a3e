#pragma once

#include <string>
#include <vector>

#include "chaincodes/code.hpp"
#include "chaincodes/construct.hpp"
#include "oracles.hpp"

namespace testing_support {

struct RingCase {
  std::string descriptor;
  chaincodes::Ring ring;
  oracle::Ring oracle;
};

inline oracle::Ring to_oracle(const chaincodes::Ring& r) {
  oracle::Ring o;
  o.zpm = r.family() == chaincodes::Family::zpm;
  o.p = r.p();
  o.e = r.e();
  o.m = r.m();
  o.f = r.residue_field().modulus();
  return o;
}

/// Every supported ring with at most 81 elements, with each irreducible modulus for e >= 2.
inline std::vector<RingCase> small_rings() {
  const std::vector<std::string> descriptors = {
      "zpm:p=2,m=2", "zpm:p=2,m=3", "zpm:p=2,m=4", "zpm:p=2,m=5", "zpm:p=2,m=6",
      "zpm:p=3,m=2", "zpm:p=3,m=3", "zpm:p=3,m=4", "zpm:p=5,m=2", "zpm:p=7,m=2",
      "fqum:p=2,e=1,m=2", "fqum:p=2,e=1,m=3", "fqum:p=2,e=1,m=4", "fqum:p=2,e=1,m=5",
      "fqum:p=2,e=1,m=6", "fqum:p=3,e=1,m=2", "fqum:p=3,e=1,m=3", "fqum:p=3,e=1,m=4",
      "fqum:p=5,e=1,m=2", "fqum:p=7,e=1,m=2", "fqum:p=2,e=2,m=2,poly=1,1,1",
      "fqum:p=2,e=2,m=3,poly=1,1,1", "fqum:p=2,e=3,m=2,poly=1,0,1,1", "fqum:p=3,e=2,m=2,poly=1,0,1",
      "fqum:p=2,e=3,m=2,poly=1,1,0,1", "fqum:p=3,e=2,m=2,poly=1,1,2", "fqum:p=3,e=2,m=2,poly=1,2,2"};
  std::vector<RingCase> out;
  for (const auto& d : descriptors) {
    auto r = chaincodes::parse_ring_descriptor(d);
    out.push_back({d, r, to_oracle(r)});
  }
  return out;
}

inline oracle::Matrix to_oracle(const chaincodes::CodeMatrix& g) {
  oracle::Matrix out(g.rows(), oracle::Vec(g.cols()));
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) out[r][c] = chaincodes::index_of(g.at(r, c));
  return out;
}

inline oracle::Vec to_oracle(const chaincodes::Word& w) {
  oracle::Vec out;
  for (auto a : w) out.push_back(chaincodes::index_of(a));
  return out;
}

inline chaincodes::Word to_word(const oracle::Vec& v) {
  chaincodes::Word out;
  for (auto a : v) out.push_back(chaincodes::Elem{a});
  return out;
}

inline chaincodes::CodeMatrix matrix(const chaincodes::Ring& ring, const std::vector<std::vector<std::uint32_t>>& rows) {
  std::vector<chaincodes::Word> words;
  for (const auto& r : rows) words.push_back(to_word(r));
  return chaincodes::CodeMatrix::from_rows(ring, words);
}

inline std::map<std::uint64_t, std::uint64_t> dist(const chaincodes::LinearCode& c) {
  return chaincodes::hom_weight_distribution(c).counts();
}

/// The four golden two-weight generators.
struct Golden {
  std::string name;
  chaincodes::CodeMatrix gen;
};

inline std::vector<Golden> golden_codes() {
  using namespace chaincodes;
  return {
      {"Y2 over Z8", y_matrix(Ring::zpm(2, 3), 2)},
      {"Y2 over F2+uF2", y_matrix(Ring::fqum(2, 1, 2), 2)},
      {"type (3,0,1) t=2 over Z8", optimal_two_weight_code(Ring::zpm(2, 3), CodeTypeProfile{{3, 0, 1}}, 2)},
      {"type (2,1) t=2 over Z9", optimal_two_weight_code(Ring::zpm(3, 2), CodeTypeProfile{{2, 1}}, 2)},
  };
}

}  // namespace testing_support
