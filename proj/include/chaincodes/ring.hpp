#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chaincodes {

/// Canonical index of a ring element: sum of its theta-adic digit indices a_i * q^i.
enum class Elem : std::uint32_t {};

/// Index of a residue-field element: base-p digits are the polynomial coefficients
/// over F_p, constant term least significant.
enum class FieldElem : std::uint32_t {};

constexpr std::uint32_t index_of(Elem a) noexcept { return static_cast<std::uint32_t>(a); }
constexpr std::uint32_t index_of(FieldElem a) noexcept { return static_cast<std::uint32_t>(a); }

using Word = std::vector<Elem>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

enum class Family { zpm, fqum };

/// The residue field F_q = F_p[x]/(f), table driven.
class Field {
 public:
  /// `modulus` lists c_e, ..., c_0 (leading coefficient first).
  Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t size() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return FieldElem{0}; }
  FieldElem one() const noexcept { return FieldElem{1}; }

  FieldElem add(FieldElem a, FieldElem b) const { return add_[index_of(a) * q_ + index_of(b)]; }
  FieldElem mul(FieldElem a, FieldElem b) const { return mul_[index_of(a) * q_ + index_of(b)]; }
  FieldElem neg(FieldElem a) const { return neg_[index_of(a)]; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  /// Multiplicative inverse; a must be nonzero.
  FieldElem inv(FieldElem a) const;

  std::vector<FieldElem> elements() const;

 private:
  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<FieldElem> add_;
  std::vector<FieldElem> mul_;
  std::vector<FieldElem> neg_;
  std::vector<FieldElem> inv_;
};

/// A finite chain ring: Z_{p^m} (theta = p) or F_q[u]/(u^m) (theta = u).
///
/// Elements are canonical indices. For Z_{p^m} the index is the integer residue
/// and the theta-adic digits are its base-p digits; for F_q[u]/(u^m) the index is
/// sum a_i q^i over the coefficient indices of 1, u, ..., u^{m-1}. Either way the
/// digits of an element are the base-q digits of its index.
///
/// Copies share immutable tables, so passing a Ring by value is cheap.
class Ring {
 public:
  static Ring zpm(std::uint32_t p, std::uint32_t m);
  static Ring fqum(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                   std::vector<std::uint32_t> modulus = {});
  static Ring make(Family family, std::uint32_t p, std::uint32_t e, std::uint32_t m,
                   std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  Family family() const noexcept;
  std::uint32_t p() const noexcept;
  std::uint32_t e() const noexcept;
  std::uint32_t q() const noexcept;
  std::uint32_t m() const noexcept;
  std::uint32_t size() const noexcept;
  const Field& residue_field() const noexcept;

  /// q^i for 0 <= i <= m.
  std::uint64_t q_pow(std::uint32_t i) const;
  /// Number of units, q^m - q^{m-1}.
  std::uint64_t unit_count() const;
  /// (q-1) q^{m-2} = q^{m-1} - q^{m-2}: the weight of elements outside <theta^{m-1}>.
  std::uint64_t gamma() const;

  bool contains(Elem a) const noexcept { return index_of(a) < size(); }
  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  Elem theta() const noexcept { return Elem{q()}; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;

  std::vector<FieldElem> digits(Elem a) const;
  FieldElem digit(Elem a, std::uint32_t i) const;
  Elem from_digits(std::span<const FieldElem> digits) const;

  /// Largest j with a in <theta^j>; m for zero.
  std::uint32_t valuation(Elem a) const;
  bool is_unit(Elem a) const { return digit(a, 0) != FieldElem{0}; }
  bool in_ideal(Elem a, std::uint32_t j) const { return valuation(a) >= j; }

  std::uint64_t hom_weight(Elem a) const;
  std::uint64_t hom_weight(std::span<const Elem> word) const;

  std::vector<Elem> elements() const;
  std::vector<Elem> units() const;
  /// Multiples of theta^j in canonical order; j = m gives {0}.
  std::vector<Elem> ideal_elements(std::uint32_t j) const;

  std::string token(Elem a) const;
  Elem parse_token(std::string_view token) const;

  /// `ring zpm p=.. m=..` or `ring fqum p=.. e=.. m=.. poly=..`.
  std::string header() const;
  /// `zpm:p=..,m=..` or `fqum:p=..,e=..,m=..,poly=..`.
  std::string descriptor() const;
  /// Human-readable element, e.g. `3` or `1+u`.
  std::string pretty(Elem a) const;

  bool operator==(const Ring& other) const noexcept;

  struct Impl;

 private:
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// An element bundled with its ring; arithmetic across different rings throws RingMismatch.
class RingElement {
 public:
  RingElement(Ring ring, Elem value);
  RingElement(Ring ring, std::uint32_t index) : RingElement(std::move(ring), Elem{index}) {}

  const Ring& ring() const noexcept { return ring_; }
  Elem value() const noexcept { return value_; }
  std::uint32_t index() const noexcept { return index_of(value_); }

  bool is_unit() const { return ring_.is_unit(value_); }
  std::uint64_t hom_weight() const { return ring_.hom_weight(value_); }
  std::vector<FieldElem> digits() const { return ring_.digits(value_); }
  std::string token() const { return ring_.token(value_); }

  RingElement operator-() const { return {ring_, ring_.neg(value_)}; }
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  Ring ring_;
  Elem value_;
};

/// Parses the CLI ring descriptor micro-syntax.
Ring parse_ring_descriptor(std::string_view text);

bool is_prime(std::uint64_t n);

}  // namespace chaincodes
