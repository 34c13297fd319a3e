#include <doctest.h>

#include <set>

#include "chaincodes/error.hpp"
#include "chaincodes/ring.hpp"
#include "support.hpp"

using namespace chaincodes;
using testing_support::small_rings;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::internal_inconsistency;
}

}  // namespace

TEST_CASE("arithmetic agrees with the polynomial oracle on every small ring") {
  for (const auto& rc : small_rings()) {
    CAPTURE(rc.descriptor);
    const auto& r = rc.ring;
    const auto& o = rc.oracle;
    REQUIRE(r.size() == o.size());
    for (std::uint32_t a = 0; a < r.size(); ++a) {
      for (std::uint32_t b = 0; b < r.size(); ++b) {
        REQUIRE(index_of(r.add(Elem{a}, Elem{b})) == o.add(a, b));
        REQUIRE(index_of(r.mul(Elem{a}, Elem{b})) == o.mul(a, b));
      }
    }
  }
}

TEST_CASE("ring axioms hold exhaustively") {
  for (const auto& rc : small_rings()) {
    CAPTURE(rc.descriptor);
    const auto& r = rc.ring;
    const auto els = r.elements();
    const bool cube = r.size() <= 32;
    for (Elem a : els) {
      CHECK(r.add(a, r.neg(a)) == r.zero());
      CHECK(r.mul(a, r.one()) == a);
      for (Elem b : els) {
        REQUIRE(r.add(a, b) == r.add(b, a));
        REQUIRE(r.mul(a, b) == r.mul(b, a));
        if (!cube) continue;
        for (Elem c : els) {
          REQUIRE(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
          REQUIRE(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
          REQUIRE(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("digits, valuation, units and ideals") {
  for (const auto& rc : small_rings()) {
    CAPTURE(rc.descriptor);
    const auto& r = rc.ring;
    const auto& o = rc.oracle;
    std::size_t units = 0;
    for (Elem a : r.elements()) {
      REQUIRE(r.from_digits(r.digits(a)) == a);
      REQUIRE(r.valuation(a) == o.valuation(index_of(a)));
      REQUIRE(r.is_unit(a) == o.is_unit(index_of(a)));
      units += r.is_unit(a);
    }
    CHECK(units == r.unit_count());
    CHECK(r.units().size() == r.unit_count());
    for (std::uint32_t j = 0; j <= r.m(); ++j) {
      const auto ideal = r.ideal_elements(j);
      CHECK(ideal.size() == r.q_pow(r.m() - j));
      CHECK(std::is_sorted(ideal.begin(), ideal.end()));
      for (Elem a : ideal) CHECK(r.in_ideal(a, j));
    }
    CHECK(r.valuation(r.theta()) == 1);
  }
}

TEST_CASE("homogeneous weight: oracle values, unit invariance, constant average on ideals") {
  for (const auto& rc : small_rings()) {
    CAPTURE(rc.descriptor);
    const auto& r = rc.ring;
    for (Elem a : r.elements()) {
      REQUIRE(r.hom_weight(a) == rc.oracle.hom_weight(index_of(a)));
      for (Elem u : r.units()) REQUIRE(r.hom_weight(r.mul(u, a)) == r.hom_weight(a));
    }
    // Average over every nonzero ideal equals gamma = (q-1) q^{m-2}.
    for (std::uint32_t j = 0; j < r.m(); ++j) {
      std::uint64_t total = 0;
      for (Elem a : r.ideal_elements(j)) total += r.hom_weight(a);
      CHECK(total == r.gamma() * r.ideal_elements(j).size());
    }
  }
}

TEST_CASE("tokens round trip and follow the file conventions") {
  const Ring f2u = Ring::fqum(2, 1, 2);
  CHECK(f2u.token(Elem{0}) == "00");
  CHECK(f2u.token(Elem{1}) == "01");
  CHECK(f2u.token(Elem{2}) == "10");
  CHECK(f2u.token(Elem{3}) == "11");
  CHECK(f2u.pretty(Elem{3}) == "1+u");
  CHECK(f2u.theta() == f2u.parse_token("10"));
  const Ring z8 = Ring::zpm(2, 3);
  CHECK(z8.token(Elem{7}) == "7");
  CHECK(z8.parse_token("5") == Elem{5});
  CHECK(kind_of([&] { z8.parse_token("8"); }) == ErrorKind::parse_error);
  CHECK(kind_of([&] { f2u.parse_token("2"); }) == ErrorKind::parse_error);
  for (const auto& rc : small_rings()) {
    for (Elem a : rc.ring.elements()) REQUIRE(rc.ring.parse_token(rc.ring.token(a)) == a);
  }
}

TEST_CASE("descriptors and headers") {
  const Ring r = parse_ring_descriptor("fqum:p=2,e=2,m=2,poly=1,1,1");
  CHECK(r.q() == 4);
  CHECK(r.size() == 16);
  CHECK(r.descriptor() == "fqum:p=2,e=2,m=2,poly=1,1,1");
  CHECK(r.header() == "ring fqum p=2 e=2 m=2 poly=1,1,1");
  CHECK(parse_ring_descriptor("zpm:p=3,m=2") == Ring::zpm(3, 2));
  CHECK(parse_ring_descriptor(Ring::zpm(5, 2).descriptor()) == Ring::zpm(5, 2));
  CHECK(kind_of([] { parse_ring_descriptor("zpm:p=2"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_ring_descriptor("gr:p=2,m=2"); }) == ErrorKind::parse_error);
}

TEST_CASE("construction errors") {
  CHECK(kind_of([] { Ring::zpm(4, 2); }) == ErrorKind::non_prime);
  CHECK(kind_of([] { Ring::zpm(2, 1); }) == ErrorKind::depth_too_small);
  CHECK(kind_of([] { Ring::fqum(2, 2, 2, {1, 0, 1}); }) == ErrorKind::reducible_polynomial);
  CHECK(kind_of([] { Ring::fqum(2, 2, 2, {1, 1, 0}); }) == ErrorKind::reducible_polynomial);
  CHECK_NOTHROW(Ring::fqum(2, 2, 2, {1, 1, 1}));
}

TEST_CASE("RingElement checks ranges and ring identity") {
  const Ring z4 = Ring::zpm(2, 2);
  const Ring z8 = Ring::zpm(2, 3);
  const RingElement a(z4, 3u), b(z4, 2u);
  CHECK((a + b).index() == 1);
  CHECK((a * b).index() == 2);
  CHECK((-a).index() == 1);
  CHECK((a - b).index() == 1);
  CHECK(a.is_unit());
  CHECK(b.hom_weight() == 2);
  CHECK(kind_of([&] { RingElement(z4, 4u); }) == ErrorKind::index_out_of_range);
  CHECK(kind_of([&] { (void)(a + RingElement(z8, 1u)); }) == ErrorKind::ring_mismatch);
}
