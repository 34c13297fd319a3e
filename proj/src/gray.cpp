#include "chaincodes/gray.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "chaincodes/error.hpp"

namespace chaincodes {

namespace {

FqVector kronecker(const Field& field, const FqVector& a, const FqVector& b) {
  FqVector out;
  out.reserve(a.size() * b.size());
  for (FieldElem x : a) {
    for (FieldElem y : b) out.push_back(field.mul(x, y));
  }
  return out;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

GrayBasis gray_basis(const Ring& ring) {
  const Field& field = ring.residue_field();
  const FqVector u = field.elements();
  const FqVector v(u.size(), field.one());
  GrayBasis basis;
  for (std::uint32_t i = 0; i + 1 < ring.m(); ++i) {
    FqVector c{field.one()};
    for (std::uint32_t j = 0; j + 1 < ring.m(); ++j) c = kronecker(field, c, j == i ? u : v);
    basis.c.push_back(std::move(c));
  }
  basis.c.emplace_back(ring.q_pow(ring.m() - 1), field.one());
  return basis;
}

namespace {

FqVector image_with(const Ring& ring, const GrayBasis& basis, Elem a) {
  const Field& field = ring.residue_field();
  FqVector out(basis.c.front().size(), field.zero());
  for (std::uint32_t i = 0; i < ring.m(); ++i) {
    const FieldElem d = ring.digit(a, i);
    if (d == field.zero()) continue;
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = field.add(out[x], field.mul(d, basis.c[i][x]));
  }
  return out;
}

}  // namespace

FqVector gray_element(const Ring& ring, Elem a) { return image_with(ring, gray_basis(ring), a); }

FqVector gray_vector(const Ring& ring, std::span<const Elem> x) {
  const GrayBasis basis = gray_basis(ring);
  FqVector out;
  out.reserve(x.size() * ring.q_pow(ring.m() - 1));
  for (Elem a : x) {
    if (!ring.contains(a)) throw Error(ErrorKind::index_out_of_range, "element index out of range");
    const FqVector img = image_with(ring, basis, a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

std::uint64_t hamming_weight(std::span<const FieldElem> v) {
  return static_cast<std::uint64_t>(std::count_if(v.begin(), v.end(), [](FieldElem a) { return index_of(a) != 0; }));
}

std::uint64_t hamming_distance(std::span<const FieldElem> a, std::span<const FieldElem> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::length_mismatch, "vector lengths differ");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::uint64_t hom_distance(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b) {
  return ring.hom_weight(sub_words(ring, a, b));
}

bool is_fq_linear(const Field& field, const std::vector<FqVector>& vectors) {
  if (vectors.empty()) return false;
  const std::set<FqVector> members(vectors.begin(), vectors.end());
  const std::size_t len = members.begin()->size();
  std::set<FqVector> span{FqVector(len, field.zero())};
  if (!members.count(*span.begin())) return false;
  const auto scalars = field.elements();
  for (const auto& v : members) {
    if (span.count(v)) continue;
    std::set<FqVector> next;
    for (const auto& s : span) {
      for (FieldElem a : scalars) {
        FqVector w(len);
        for (std::size_t i = 0; i < len; ++i) w[i] = field.add(s[i], field.mul(a, v[i]));
        next.insert(std::move(w));
      }
    }
    span = std::move(next);
    if (span.size() > members.size()) return false;
  }
  return span.size() == members.size();
}

GrayImage gray_image(const LinearCode& code) {
  const Ring& ring = code.ring();
  GrayImage out;
  out.vectors.reserve(code.cardinality());
  for (const auto& w : code.codewords()) {
    out.vectors.push_back(gray_vector(ring, w));
    out.hamming_distribution.add(hamming_weight(out.vectors.back()));
  }
  std::sort(out.vectors.begin(), out.vectors.end());
  out.injective = std::adjacent_find(out.vectors.begin(), out.vectors.end()) == out.vectors.end();
  out.is_linear = out.injective && is_fq_linear(ring.residue_field(), out.vectors);
  return out;
}

Su1Parameters su1_parameters(std::uint64_t q, std::uint64_t l, std::uint64_t s) {
  if (q < 2 || l <= 1 || s < 1 || s > l - 1) {
    throw Error(ErrorKind::invalid_parameters, "SU1 needs l > 1 and 1 <= s <= l-1");
  }
  Su1Parameters out;
  out.n = (ipow(q, l) - ipow(q, s)) / (q - 1);
  out.k = l;
  out.w1 = ipow(q, l - 1) - ipow(q, s - 1);
  out.w2 = ipow(q, l - 1);
  out.a1 = ipow(q, l) - ipow(q, l - s);
  out.a2 = ipow(q, l - s) - 1;
  return out;
}

bool compare_su1(const LinearCode& code) {
  const auto characterization = characterize_two_weight(code);
  const std::uint32_t k = code.qdim();
  const std::uint32_t t = characterization.t;
  if (t >= k) return false;
  const Su1Parameters su1 = su1_parameters(code.ring().q(), k, k - t);
  const GrayImage image = gray_image(code);
  const std::uint64_t image_length = code.length() * code.ring().q_pow(code.ring().m() - 1);
  WeightDistribution expected;
  expected.add(0, 1);
  expected.add(su1.w1, su1.a1);
  expected.add(su1.w2, su1.a2);
  return image.injective && image_length == su1.n && image.vectors.size() == ipow(code.ring().q(), su1.k) &&
         image.hamming_distribution == expected;
}

}  // namespace chaincodes
