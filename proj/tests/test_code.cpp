#include <doctest.h>

#include <random>

#include "chaincodes/construct.hpp"
#include "chaincodes/error.hpp"
#include "support.hpp"

using namespace chaincodes;
using namespace testing_support;

namespace {

CodeMatrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, ring.size() - 1);
  std::vector<Elem> entries(rows * cols);
  for (auto& e : entries) e = Elem{pick(rng)};
  return CodeMatrix(ring, rows, cols, entries);
}

std::vector<Ring> analysis_rings() {
  return {Ring::zpm(2, 2), Ring::zpm(2, 3), Ring::zpm(3, 2), Ring::fqum(2, 1, 2), Ring::fqum(2, 1, 3),
          Ring::fqum(2, 2, 2, {1, 1, 1})};
}

ErrorKind characterize_kind(const Ring& ring, std::uint64_t n, const CodeTypeProfile& type,
                            const WeightDistribution& dist) {
  try {
    characterize_two_weight(ring, n, type, dist, true, true);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal_inconsistency;
}

}  // namespace

TEST_CASE("span, type, regularity and projectivity agree with brute force") {
  std::mt19937 rng(20240611);
  for (const auto& ring : analysis_rings()) {
    CAPTURE(ring.descriptor());
    const auto o = to_oracle(ring);
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t rows = 1 + trial % 3;
      const std::size_t cols = 1 + trial % 4;
      if (std::pow(ring.size(), rows) > 5000) continue;
      const CodeMatrix g = random_matrix(ring, rows, cols, rng);
      const auto code = LinearCode::span(g);
      const auto ospan = oracle::span(o, to_oracle(g));
      REQUIRE(code.cardinality() == ospan.size());
      for (const auto& w : code.codewords()) REQUIRE(ospan.count(to_oracle(w)));
      CHECK(code_type(code).k == oracle::code_type(o, ospan));
      CHECK(code_type(code).qdim() == code.qdim());
      CHECK(dist(code) == oracle::distribution(o, ospan));
      CHECK(is_regular(g) == oracle::regular(o, to_oracle(g)));
      CHECK(is_projective(g) == oracle::projective(o, to_oracle(g)));
    }
  }
}

TEST_CASE("dual: size identity, double dual and oracle agreement over Z4") {
  const Ring z4 = Ring::zpm(2, 2);
  const auto o = to_oracle(z4);
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const CodeMatrix g = random_matrix(z4, 1 + trial % 2, n, rng);
      const auto code = LinearCode::span(g);
      const auto d = dual_bruteforce(code);
      CHECK(code.cardinality() * d.cardinality() == oracle::ipow(4, n));
      const auto od = oracle::dual(o, oracle::span(o, to_oracle(g)), n);
      CHECK(d.cardinality() == od.size());
      const auto dd = dual_bruteforce(d);
      CHECK(dd.codewords() == code.codewords());
      CHECK(LinearCode::span(d.generator()).codewords() == d.codewords());
    }
  }
}

TEST_CASE("Plotkin bound and optimality on the golden codes") {
  CHECK(plotkin_bound(Ring::zpm(2, 3), 12, 64) == 24);
  CHECK(plotkin_bound(Ring::fqum(2, 1, 2), 6, 16) == 6);
  CHECK_THROWS_AS(plotkin_bound(Ring::zpm(2, 2), 3, 1), Error);
  for (const auto& g : golden_codes()) {
    CAPTURE(g.name);
    const auto code = LinearCode::span(g.gen);
    CHECK(is_regular(g.gen));
    CHECK(is_projective(g.gen));
    CHECK(is_plotkin_optimal(code));
    CHECK(min_hom_distance(code) == code.ring().gamma() * code.length());
  }
}

TEST_CASE("two-weight relation and characterization") {
  for (const auto& g : golden_codes()) {
    CAPTURE(g.name);
    const auto code = LinearCode::span(g.gen);
    const auto d = hom_weight_distribution(code);
    const auto w = d.nonzero_weights();
    REQUIRE(w.size() == 2);
    CHECK(check_two_weight_relation(code.ring(), code.length(), code.cardinality(), w[0], w[1], d.count(w[0]),
                                    d.count(w[1])));
    CHECK_FALSE(check_two_weight_relation(code.ring(), code.length(), code.cardinality(), w[0], w[1] + 1,
                                          d.count(w[0]), d.count(w[1])));
    const auto ch = characterize_two_weight(code);
    CHECK(ch.t == 2);
    CHECK(ch.table == d);
  }
}

TEST_CASE("characterization rejects perturbed data") {
  const Ring z8 = Ring::zpm(2, 3);
  const CodeTypeProfile type{{2, 0, 0}};
  // A count moved between weights: no longer q^t - 1 at the top weight.
  CHECK(characterize_kind(z8, 12, type, WeightDistribution({{0, 1}, {24, 59}, {32, 4}})) ==
        ErrorKind::characterization_violated);
  // Top weight altered.
  CHECK(characterize_kind(z8, 12, type, WeightDistribution({{0, 1}, {24, 60}, {40, 3}})) ==
        ErrorKind::characterization_violated);
  // Minimum weight altered breaks Plotkin optimality.
  CHECK(characterize_kind(z8, 12, type, WeightDistribution({{0, 1}, {16, 60}, {32, 3}})) ==
        ErrorKind::not_applicable);
  // Three weights.
  CHECK(characterize_kind(z8, 12, type, WeightDistribution({{0, 1}, {24, 59}, {28, 1}, {32, 3}})) ==
        ErrorKind::not_applicable);
  // t larger than k_0.
  CHECK(characterize_kind(z8, 12, CodeTypeProfile{{1, 0, 2}}, WeightDistribution({{0, 1}, {24, 60}, {32, 3}})) ==
        ErrorKind::characterization_violated);
  // Regularity and projectivity are required.
  CHECK_THROWS_AS(characterize_two_weight(z8, 12, type, WeightDistribution({{0, 1}, {24, 60}, {32, 3}}), false, true),
                  Error);
}

TEST_CASE("two_weight_table") {
  const Ring z9 = Ring::zpm(3, 2);
  CHECK(two_weight_table(z9, 5, 2) == WeightDistribution({{0, 1}, {72, 234}, {81, 8}}));
  CHECK(two_weight_table(Ring::zpm(2, 3), 10, 2) == WeightDistribution({{0, 1}, {384, 1020}, {512, 3}}));
  CHECK_THROWS_AS(two_weight_table(z9, 2, 3), Error);
}

TEST_CASE("coset sums over ideals are constant") {
  std::vector<CodeMatrix> gens;
  for (const auto& g : golden_codes()) gens.push_back(g.gen);
  gens.push_back(y_matrix(Ring::zpm(2, 2), 1));
  gens.push_back(y_matrix(Ring::zpm(2, 2), 2));
  for (const auto& g : gens) {
    const Ring& r = g.ring();
    if (g.cols() > 100) continue;  // the (3,0,1) code is covered by the acceptance run
    const auto code = LinearCode::span(g);
    for (std::uint32_t j = 0; j < r.m(); ++j) {
      const std::uint64_t expected = (r.q() - 1) * oracle::ipow(r.q(), 2 * r.m() - 2 - j) * code.length();
      for (const auto& c : code.codewords()) REQUIRE(coset_sum(r, c, j) == expected);
    }
  }
}

TEST_CASE("weights over message cosets of theta^{m-1}") {
  // Sum over u + <theta^{m-1}>^k of wt(x . c) for c outside <theta>^k.
  for (const Ring& r : {Ring::zpm(2, 2), Ring::zpm(2, 3), Ring::fqum(2, 1, 2), Ring::zpm(3, 2)}) {
    const std::size_t k = 2;
    const auto all = [&] {
      std::vector<Word> out;
      for_each_vector(r.elements(), k, [&](const Word& w) { out.push_back(w); });
      return out;
    }();
    const auto socle = r.ideal_elements(r.m() - 1);
    for (const auto& c : all) {
      if (std::all_of(c.begin(), c.end(), [&](Elem a) { return r.in_ideal(a, 1); })) continue;
      for (const auto& u : all) {
        std::uint64_t total = 0;
        for_each_vector(socle, k, [&](const Word& s) { total += r.hom_weight(dot(r, add_words(r, u, s), c)); });
        REQUIRE(total == oracle::ipow(r.q(), k) * r.gamma());
      }
    }
  }

  std::vector<CodeMatrix> gens;
  for (const auto& g : golden_codes()) gens.push_back(g.gen);
  gens.push_back(y_matrix(Ring::zpm(2, 2), 2));
  for (const auto& g : gens) {
    if (g.cols() > 100) continue;
    const Ring& r = g.ring();
    const std::uint64_t expected = oracle::ipow(r.q(), g.rows()) * r.gamma() * g.cols();
    for_each_vector(r.elements(), g.rows(), [&](const Word& u) {
      REQUIRE(message_coset_weight_sum(g, u) == expected);
      // Plotkin-optimal regular projective: constant weight off the socle.
      if (std::any_of(u.begin(), u.end(), [&](Elem a) { return !r.in_ideal(a, r.m() - 1); })) {
        REQUIRE(r.hom_weight(encode(g, u)) == r.gamma() * g.cols());
      }
    });
  }
}

TEST_CASE("enumeration guard") {
  const Ring z9 = Ring::zpm(3, 2);
  CodeMatrix g(z9, 4, 2);
  CHECK_NOTHROW(LinearCode::span(g, 9 * 9 * 9 * 9));
  try {
    LinearCode::span(g, 1000);
    FAIL("expected EnumerationTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::enumeration_too_large);
  }
  CHECK(guarded_power(2, 10, 1024, "x") == 1024);
  CHECK_THROWS_AS(guarded_power(2, 11, 1024, "x"), Error);
}

TEST_CASE("matrix validation") {
  const Ring z4 = Ring::zpm(2, 2);
  CHECK_THROWS_AS(CodeMatrix(z4, 1, 2, {Elem{0}, Elem{4}}), Error);
  CHECK_THROWS_AS(CodeMatrix(z4, 0, 2), Error);
  CHECK_THROWS_AS(CodeMatrix::from_rows(z4, {to_word({1, 2}), to_word({1})}), Error);
  const auto m = matrix(z4, {{1, 2, 3}, {0, 1, 2}});
  CHECK(m.column(2) == to_word({3, 2}));
  CHECK(encode(m, to_word({1, 1})) == to_word({1, 3, 1}));
}
