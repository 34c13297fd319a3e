#include <doctest.h>

#include "chaincodes/construct.hpp"
#include "chaincodes/error.hpp"
#include "support.hpp"

using namespace chaincodes;
using namespace testing_support;

namespace {

std::vector<std::uint32_t> iota_row(std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<std::uint32_t> concat(std::initializer_list<std::vector<std::uint32_t>> parts) {
  std::vector<std::uint32_t> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<std::uint32_t> repeat(const std::vector<std::uint32_t>& v, std::size_t times) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace

TEST_CASE("B_k matrices") {
  CHECK(b_matrix(Ring::zpm(2, 3), 1) == matrix(Ring::zpm(2, 3), {{0, 2, 4, 6}}));
  CHECK(b_matrix(Ring::zpm(3, 2), 1) == matrix(Ring::zpm(3, 2), {{0, 3, 6}}));
  CHECK(b_matrix(Ring::fqum(2, 1, 2), 1) == matrix(Ring::fqum(2, 1, 2), {{0, 2}}));
  const auto b2 = b_matrix(Ring::zpm(2, 2), 2);
  CHECK(b2 == matrix(Ring::zpm(2, 2), {{0, 0, 2, 2}, {0, 2, 0, 2}}));
}

TEST_CASE("Y_k reproduces the displayed generator matrices") {
  const Ring z8 = Ring::zpm(2, 3);
  CHECK(y_matrix(z8, 2) == matrix(z8, {concat({std::vector<std::uint32_t>(8, 1), {0, 2, 4, 6}}),
                                       concat({iota_row(8), {1, 1, 1, 1}})}));
  const Ring f2u = Ring::fqum(2, 1, 2);
  CHECK(y_matrix(f2u, 2) == matrix(f2u, {{1, 1, 1, 1, 0, 2}, {0, 1, 2, 3, 1, 1}}));
  const Ring z9 = Ring::zpm(3, 2);
  const auto y2 = matrix(z9, {concat({std::vector<std::uint32_t>(9, 1), {0, 3, 6}}), concat({iota_row(9), {1, 1, 1}})});
  CHECK(y_matrix(z9, 2) == y2);
  CHECK(y_matrix(z9, 1) == matrix(z9, {{1}}));
}

TEST_CASE("extension reproduces the displayed extended matrices") {
  const Ring z9 = Ring::zpm(3, 2);
  const auto y2 = y_matrix(z9, 2);
  const auto ext = extend_generator(y2, 1);
  CHECK(ext.rows() == 3);
  CHECK(ext.cols() == 36);
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t r = 0; r < 2; ++r) rows.push_back(repeat(to_oracle(Word(y2.row(r).begin(), y2.row(r).end())), 3));
  rows.push_back(concat({std::vector<std::uint32_t>(12, 0), std::vector<std::uint32_t>(12, 3),
                         std::vector<std::uint32_t>(12, 6)}));
  CHECK(ext == matrix(z9, rows));
  CHECK(optimal_two_weight_code(z9, CodeTypeProfile{{2, 1}}, 2) == ext);

  const Ring z8 = Ring::zpm(2, 3);
  const auto g = optimal_two_weight_code(z8, CodeTypeProfile{{3, 0, 1}}, 2);
  REQUIRE(g.rows() == 4);
  REQUIRE(g.cols() == 192);
  const auto y = y_matrix(z8, 2);
  for (std::size_t c = 0; c < 192; ++c) {
    REQUIRE(g.at(0, c) == y.at(0, c % 12));
    REQUIRE(g.at(1, c) == y.at(1, c % 12));
    REQUIRE(index_of(g.at(2, c)) == (c % 96) / 12);
    REQUIRE(index_of(g.at(3, c)) == (c < 96 ? 0u : 4u));
  }
}

TEST_CASE("one-weight generators") {
  const Ring z4 = Ring::zpm(2, 2);
  CHECK(one_weight_generator(z4, {{1, 0}}) == matrix(z4, {{1, 2, 3}}));
  CHECK(one_weight_generator(z4, {{0, 1}}) == matrix(z4, {{2}}));
  CHECK_THROWS_AS(one_weight_generator(z4, {{0, 0}}), Error);
  CHECK_THROWS_AS(one_weight_generator(z4, {{1}}), Error);

  const std::vector<std::pair<Ring, std::vector<std::uint32_t>>> cases = {
      {z4, {1, 0}}, {z4, {0, 1}}, {z4, {1, 1}}, {z4, {2, 0}}, {z4, {0, 2}},
      {Ring::zpm(2, 3), {1, 0, 0}}, {Ring::zpm(2, 3), {0, 1, 1}}, {Ring::zpm(2, 3), {1, 0, 1}},
      {Ring::zpm(3, 2), {1, 0}}, {Ring::zpm(3, 2), {1, 1}}, {Ring::fqum(2, 1, 2), {1, 1}},
      {Ring::fqum(2, 2, 2, {1, 1, 1}), {1, 0}}, {Ring::fqum(3, 1, 3), {0, 1, 0}}};
  for (const auto& [ring, sizes] : cases) {
    CAPTURE(ring.descriptor());
    const IdealBlockProfile profile{sizes};
    const auto g = one_weight_generator(ring, profile);
    const std::uint32_t k = profile.qdim(ring);
    CHECK(g.cols() == oracle::ipow(ring.q(), k) - 1);
    const auto code = LinearCode::span(g);
    CHECK(code.qdim() == k);
    CHECK(code_type(code).k == sizes);
    const auto d = hom_weight_distribution(code);
    CHECK(d.nonzero_weights() == std::vector<std::uint64_t>{oracle::ipow(ring.q(), k) * ring.gamma()});
  }
}

TEST_CASE("Y_k codes: free two-weight Plotkin-optimal with the predicted weights per message") {
  const std::vector<std::pair<Ring, std::uint32_t>> cases = {
      {Ring::zpm(2, 2), 1}, {Ring::zpm(2, 2), 2}, {Ring::zpm(2, 2), 3}, {Ring::zpm(2, 3), 2},
      {Ring::zpm(3, 2), 2}, {Ring::fqum(2, 1, 2), 3}, {Ring::fqum(2, 1, 3), 2},
      {Ring::fqum(2, 2, 2, {1, 1, 1}), 2}, {Ring::zpm(5, 2), 2}, {Ring::zpm(2, 4), 2}};
  for (const auto& [ring, k] : cases) {
    CAPTURE(ring.descriptor());
    CAPTURE(k);
    const auto q = ring.q();
    const auto m = ring.m();
    const auto y = y_matrix(ring, k);
    const auto qmk = oracle::ipow(q, m * k), qm1k = oracle::ipow(q, (m - 1) * k);
    CHECK(y.cols() == (qmk - qm1k) / ring.unit_count());
    const auto code = LinearCode::span(y);
    CHECK(code_type(code).is_free());
    CHECK(code_type(code).k[0] == k);
    const std::uint64_t w1 = qmk / q - qm1k / q, w2 = qmk / q;
    WeightDistribution expected({{0, 1}, {w2, oracle::ipow(q, k) - 1}});
    if (w1 != w2) expected.add(w1, qmk - oracle::ipow(q, k));
    CHECK(hom_weight_distribution(code) == expected);
    CHECK(is_plotkin_optimal(code));
    CHECK(is_regular(y));
    CHECK(is_projective(y));
    for_each_vector(ring.elements(), k, [&](const Word& x) {
      if (std::all_of(x.begin(), x.end(), [&](Elem a) { return a == ring.zero(); })) return;
      const bool socle = std::all_of(x.begin(), x.end(), [&](Elem a) { return ring.in_ideal(a, m - 1); });
      REQUIRE(ring.hom_weight(encode(y, x)) == (socle ? w2 : w1));
    });
  }
}

TEST_CASE("optimal two-weight family matches the characterization table") {
  struct Case {
    Ring ring;
    std::vector<std::uint32_t> type;
    std::uint32_t t;
  };
  const std::vector<Case> cases = {
      {Ring::zpm(2, 2), {2, 1}, 1}, {Ring::zpm(2, 2), {2, 1}, 2}, {Ring::zpm(2, 2), {3, 0}, 1},
      {Ring::zpm(2, 2), {3, 0}, 3}, {Ring::zpm(2, 3), {2, 1, 0}, 2}, {Ring::zpm(2, 3), {1, 0, 2}, 1},
      {Ring::fqum(2, 1, 2), {2, 1}, 2}, {Ring::zpm(3, 2), {1, 1}, 1}, {Ring::fqum(3, 1, 2), {2, 0}, 2}};
  for (const auto& c : cases) {
    CAPTURE(c.ring.descriptor());
    CAPTURE(c.t);
    const CodeTypeProfile profile{c.type};
    const auto g = optimal_two_weight_code(c.ring, profile, c.t);
    const auto code = LinearCode::span(g);
    const std::uint32_t k = profile.qdim();
    const auto q = c.ring.q();
    CHECK(g.cols() * c.ring.unit_count() == oracle::ipow(q, k - c.t) * (oracle::ipow(q, c.t) - 1));
    CHECK(code_type(code) == profile);
    CHECK(hom_weight_distribution(code) == two_weight_table(c.ring, k, c.t));
    CHECK(is_regular(g));
    CHECK(is_projective(g));
    CHECK(is_plotkin_optimal(code));
    if (k > c.t) CHECK(characterize_two_weight(code).t == c.t);
  }
  CHECK(optimal_two_weight_code(Ring::zpm(2, 3), CodeTypeProfile{{2, 0, 0}}, 2) == y_matrix(Ring::zpm(2, 3), 2));
  try {
    optimal_two_weight_code(Ring::zpm(2, 3), CodeTypeProfile{{1, 0, 1}}, 2);
    FAIL("expected InvalidT");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_t);
  }
  CHECK_THROWS_AS(optimal_two_weight_code(Ring::zpm(2, 3), CodeTypeProfile{{1, 0, 1}}, 0), Error);
}

TEST_CASE("extension: predicted distribution, type update and preserved statuses") {
  std::vector<CodeMatrix> bases;
  for (const auto& g : golden_codes()) {
    if (g.gen.cols() <= 40) bases.push_back(g.gen);
  }
  const Ring z4 = Ring::zpm(2, 2);
  bases.push_back(matrix(z4, {{2}}));             // no weight equal to gamma * n
  bases.push_back(matrix(z4, {{1, 1}}));          // not projective
  bases.push_back(matrix(z4, {{1, 2}, {0, 2}}));  // not regular
  bases.push_back(matrix(z4, {{1, 0, 1}, {0, 1, 3}}));
  bases.push_back(one_weight_generator(Ring::zpm(2, 3), {{0, 1, 0}}));
  for (const auto& g : bases) {
    const Ring& r = g.ring();
    const auto code = LinearCode::span(g);
    const auto d = hom_weight_distribution(code);
    const auto type = code_type(code);
    for (std::uint32_t m0 = 0; m0 < r.m(); ++m0) {
      CAPTURE(r.descriptor());
      CAPTURE(m0);
      const auto e = extend_generator(g, m0);
      CHECK(e.cols() == g.cols() * r.q_pow(r.m() - m0));
      const auto ext = LinearCode::span(e);
      CHECK(hom_weight_distribution(ext) == predict_extension_distribution(r, d, g.cols(), m0));
      auto expected_type = type;
      expected_type.k[m0] += 1;
      CHECK(code_type(ext) == expected_type);
      CHECK(is_regular(e) == is_regular(g));
      // Projectivity and optimality transfer only for regular generators.
      if (is_regular(g)) {
        CHECK(is_projective(e) == is_projective(g));
        CHECK(is_plotkin_optimal(ext) == is_plotkin_optimal(code));
      }
    }
  }
  CHECK_THROWS_AS(extend_generator(matrix(z4, {{1}}), 2), Error);
}

TEST_CASE("extension of a non-regular column can merge cyclic submodules") {
  const Ring z4 = Ring::zpm(2, 2);
  const auto g = matrix(z4, {{2}});
  CHECK(is_projective(g));
  const auto e = extend_generator(g, 0);
  // (2,1) and (2,3) = 3 * (2,1) generate the same submodule.
  CHECK_FALSE(is_projective(e));
  // A one-weight code on <theta> columns meets the bound; its extension does not.
  const auto h = one_weight_generator(Ring::zpm(2, 3), {{0, 1, 0}});
  CHECK_FALSE(is_regular(h));
  CHECK(is_plotkin_optimal(LinearCode::span(h)));
  CHECK_FALSE(is_plotkin_optimal(LinearCode::span(extend_generator(h, 0))));
}
