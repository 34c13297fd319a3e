#include "chaincodes/ring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "chaincodes/error.hpp"

namespace chaincodes {

namespace {

// Rings at most this large get full add/mul tables.
constexpr std::uint32_t kTableLimit = 512;
constexpr std::uint64_t kMaxRingSize = std::uint64_t{1} << 24;
constexpr std::uint32_t kMaxFieldSize = 256;
// FQUM tokens spell one base-q digit per character.
constexpr std::uint32_t kMaxTokenBase = 36;

using Poly = std::vector<std::uint32_t>;  // coefficients, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over F_p; b must be trimmed and nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint64_t lead = b.back();
  std::uint64_t lead_inv = 1;
  for (std::uint64_t x = 1; x < p; ++x) {
    if (lead * x % p == 1) {
      lead_inv = x;
      break;
    }
  }
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return out;
}

Poly index_to_poly(std::uint32_t index, std::uint32_t p, std::uint32_t e) {
  Poly out(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    out[i] = index % p;
    index /= p;
  }
  return out;
}

std::uint32_t poly_to_index(const Poly& a, std::uint32_t p) {
  std::uint32_t index = 0;
  for (std::size_t i = a.size(); i-- > 0;) index = index * p + a[i];
  return index;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t degree = f.size() - 1;
  if (degree <= 1) return true;
  // Try every monic divisor of degree 1..degree/2.
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = index_to_poly(static_cast<std::uint32_t>(c), p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    out *= base;
    if (out > limit) return limit + 1;
  }
  return out;
}

std::uint32_t parse_uint(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::parse_error,
                "expected a nonnegative integer for " + std::string(what) + ", got '" +
                    std::string(text) + "'");
  }
  return value;
}

std::vector<std::uint32_t> parse_poly(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_uint(text.substr(start, end - start), "poly coefficient"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join_poly(const std::vector<std::uint32_t>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs[i]);
  }
  return out;
}

}  // namespace

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size();
  for (Elem a : w) {
    h ^= index_of(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Field

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw Error(ErrorKind::non_prime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::invalid_parameters, "extension degree must be >= 1");
  const std::uint64_t q = checked_pow(p, e, kMaxFieldSize);
  if (q > kMaxFieldSize) {
    throw Error(ErrorKind::invalid_parameters,
                "residue field larger than " + std::to_string(kMaxFieldSize));
  }
  q_ = static_cast<std::uint32_t>(q);
  if (modulus_.empty()) {
    if (e != 1) {
      throw Error(ErrorKind::invalid_parameters,
                  "an irreducible modulus polynomial is required when e > 1");
    }
    modulus_ = {1, 0};
  }
  if (modulus_.size() != e + 1) {
    throw Error(ErrorKind::invalid_parameters,
                "modulus polynomial needs e+1 = " + std::to_string(e + 1) + " coefficients");
  }
  for (std::uint32_t c : modulus_) {
    if (c >= p) throw Error(ErrorKind::invalid_parameters, "modulus coefficient outside F_p");
  }
  if (modulus_.front() == 0) {
    throw Error(ErrorKind::invalid_parameters, "modulus polynomial must have degree e");
  }
  Poly f(modulus_.rbegin(), modulus_.rend());
  if (!irreducible(f, p)) {
    throw Error(ErrorKind::reducible_polynomial,
                "x-polynomial " + join_poly(modulus_) + " is reducible over F_" + std::to_string(p));
  }

  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  inv_.assign(q_, FieldElem{0});
  for (std::uint32_t a = 0; a < q_; ++a) {
    const Poly pa = index_to_poly(a, p, e);
    Poly na(e);
    for (std::uint32_t i = 0; i < e; ++i) na[i] = (p - pa[i]) % p;
    neg_[a] = FieldElem{poly_to_index(na, p)};
    for (std::uint32_t b = 0; b < q_; ++b) {
      const Poly pb = index_to_poly(b, p, e);
      Poly sum(e);
      for (std::uint32_t i = 0; i < e; ++i) sum[i] = (pa[i] + pb[i]) % p;
      add_[a * q_ + b] = FieldElem{poly_to_index(sum, p)};
      Poly prod = poly_mod(poly_mul(pa, pb, p), f, p);
      prod.resize(e, 0);
      mul_[a * q_ + b] = FieldElem{poly_to_index(prod, p)};
      if (poly_to_index(prod, p) == 1) inv_[a] = FieldElem{b};
    }
  }
}

FieldElem Field::inv(FieldElem a) const {
  if (a == FieldElem{0}) throw Error(ErrorKind::invalid_parameters, "zero has no inverse");
  return inv_[index_of(a)];
}

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = FieldElem{i};
  return out;
}

// ---------------------------------------------------------------------------
// Ring

struct Ring::Impl {
  Family family;
  std::uint32_t p;
  std::uint32_t e;
  std::uint32_t q;
  std::uint32_t m;
  std::uint32_t size;
  Field field;
  std::vector<std::uint64_t> q_pows;
  std::vector<Elem> add_table;
  std::vector<Elem> mul_table;

  Impl(Family fam, std::uint32_t p_, std::uint32_t e_, std::uint32_t m_, Field f)
      : family(fam), p(p_), e(e_), q(f.size()), m(m_), size(0), field(std::move(f)) {}

  Elem add_direct(Elem a, Elem b) const {
    if (family == Family::zpm) return Elem{(index_of(a) + index_of(b)) % size};
    std::uint32_t x = index_of(a), y = index_of(b), out = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      const auto d = field.add(FieldElem{x % q}, FieldElem{y % q});
      out += index_of(d) * static_cast<std::uint32_t>(q_pows[i]);
      x /= q;
      y /= q;
    }
    return Elem{out};
  }

  Elem mul_direct(Elem a, Elem b) const {
    if (family == Family::zpm) {
      return Elem{static_cast<std::uint32_t>(std::uint64_t{index_of(a)} * index_of(b) % size)};
    }
    std::vector<FieldElem> da(m), db(m), dc(m, FieldElem{0});
    std::uint32_t x = index_of(a), y = index_of(b);
    for (std::uint32_t i = 0; i < m; ++i) {
      da[i] = FieldElem{x % q};
      db[i] = FieldElem{y % q};
      x /= q;
      y /= q;
    }
    // Truncated product modulo u^m.
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = 0; i + j < m; ++j) {
        dc[i + j] = field.add(dc[i + j], field.mul(da[i], db[j]));
      }
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < m; ++i) out += index_of(dc[i]) * static_cast<std::uint32_t>(q_pows[i]);
    return Elem{out};
  }
};

Ring Ring::zpm(std::uint32_t p, std::uint32_t m) { return make(Family::zpm, p, 1, m); }

Ring Ring::fqum(std::uint32_t p, std::uint32_t e, std::uint32_t m, std::vector<std::uint32_t> modulus) {
  return make(Family::fqum, p, e, m, std::move(modulus));
}

Ring Ring::make(Family family, std::uint32_t p, std::uint32_t e, std::uint32_t m,
                std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::non_prime, std::to_string(p) + " is not prime");
  if (m < 2) {
    throw Error(ErrorKind::depth_too_small, "depth m = " + std::to_string(m) + " but m >= 2 is required");
  }
  if (family == Family::zpm && e != 1) {
    throw Error(ErrorKind::invalid_parameters, "Z_{p^m} has residue field F_p, so e must be 1");
  }
  if (family == Family::zpm && modulus && !modulus->empty() && *modulus != std::vector<std::uint32_t>{1, 0}) {
    throw Error(ErrorKind::invalid_parameters, "Z_{p^m} takes no modulus polynomial");
  }
  Field field(p, e, family == Family::fqum && modulus ? *modulus : std::vector<std::uint32_t>{});
  if (family == Family::fqum && field.size() > kMaxTokenBase) {
    throw Error(ErrorKind::invalid_parameters,
                "F_q[u]/(u^m) supports residue fields up to q = " + std::to_string(kMaxTokenBase));
  }
  const std::uint64_t size = checked_pow(field.size(), m, kMaxRingSize);
  if (size > kMaxRingSize) {
    throw Error(ErrorKind::invalid_parameters, "ring larger than " + std::to_string(kMaxRingSize));
  }

  auto impl = std::make_shared<Impl>(family, p, e, m, std::move(field));
  impl->size = static_cast<std::uint32_t>(size);
  impl->q_pows.resize(m + 1);
  impl->q_pows[0] = 1;
  for (std::uint32_t i = 1; i <= m; ++i) impl->q_pows[i] = impl->q_pows[i - 1] * impl->q;
  if (impl->size <= kTableLimit) {
    const std::uint32_t n = impl->size;
    impl->add_table.resize(std::size_t{n} * n);
    impl->mul_table.resize(std::size_t{n} * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        impl->add_table[a * n + b] = impl->add_direct(Elem{a}, Elem{b});
        impl->mul_table[a * n + b] = impl->mul_direct(Elem{a}, Elem{b});
      }
    }
  }
  return Ring(std::move(impl));
}

Family Ring::family() const noexcept { return impl_->family; }
std::uint32_t Ring::p() const noexcept { return impl_->p; }
std::uint32_t Ring::e() const noexcept { return impl_->e; }
std::uint32_t Ring::q() const noexcept { return impl_->q; }
std::uint32_t Ring::m() const noexcept { return impl_->m; }
std::uint32_t Ring::size() const noexcept { return impl_->size; }
const Field& Ring::residue_field() const noexcept { return impl_->field; }

std::uint64_t Ring::q_pow(std::uint32_t i) const {
  if (i > m()) throw Error(ErrorKind::index_out_of_range, "q power above depth");
  return impl_->q_pows[i];
}

std::uint64_t Ring::unit_count() const { return impl_->q_pows[m()] - impl_->q_pows[m() - 1]; }

std::uint64_t Ring::gamma() const { return impl_->q_pows[m() - 1] - impl_->q_pows[m() - 2]; }

Elem Ring::add(Elem a, Elem b) const {
  if (!impl_->add_table.empty()) return impl_->add_table[index_of(a) * impl_->size + index_of(b)];
  return impl_->add_direct(a, b);
}

Elem Ring::mul(Elem a, Elem b) const {
  if (!impl_->mul_table.empty()) return impl_->mul_table[index_of(a) * impl_->size + index_of(b)];
  return impl_->mul_direct(a, b);
}

Elem Ring::neg(Elem a) const {
  if (family() == Family::zpm) return Elem{(size() - index_of(a)) % size()};
  std::uint32_t x = index_of(a), out = 0;
  for (std::uint32_t i = 0; i < m(); ++i) {
    out += index_of(impl_->field.neg(FieldElem{x % q()})) * static_cast<std::uint32_t>(impl_->q_pows[i]);
    x /= q();
  }
  return Elem{out};
}

Elem Ring::sub(Elem a, Elem b) const { return add(a, neg(b)); }

std::vector<FieldElem> Ring::digits(Elem a) const {
  std::vector<FieldElem> out(m());
  std::uint32_t x = index_of(a);
  for (auto& d : out) {
    d = FieldElem{x % q()};
    x /= q();
  }
  return out;
}

FieldElem Ring::digit(Elem a, std::uint32_t i) const {
  if (i >= m()) throw Error(ErrorKind::index_out_of_range, "digit index above depth");
  return FieldElem{static_cast<std::uint32_t>(index_of(a) / impl_->q_pows[i] % q())};
}

Elem Ring::from_digits(std::span<const FieldElem> digits) const {
  if (digits.size() != m()) throw Error(ErrorKind::length_mismatch, "expected m digits");
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < m(); ++i) {
    if (index_of(digits[i]) >= q()) throw Error(ErrorKind::index_out_of_range, "digit outside F_q");
    out += index_of(digits[i]) * static_cast<std::uint32_t>(impl_->q_pows[i]);
  }
  return Elem{out};
}

std::uint32_t Ring::valuation(Elem a) const {
  std::uint32_t x = index_of(a);
  if (x == 0) return m();
  std::uint32_t v = 0;
  while (x % q() == 0) {
    x /= q();
    ++v;
  }
  return v;
}

std::uint64_t Ring::hom_weight(Elem a) const {
  const std::uint32_t v = valuation(a);
  if (v == m()) return 0;
  if (v == m() - 1) return impl_->q_pows[m() - 1];
  return gamma();
}

std::uint64_t Ring::hom_weight(std::span<const Elem> word) const {
  std::uint64_t total = 0;
  for (Elem a : word) total += hom_weight(a);
  return total;
}

std::vector<Elem> Ring::elements() const { return ideal_elements(0); }

std::vector<Elem> Ring::units() const {
  std::vector<Elem> out;
  out.reserve(unit_count());
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (i % q() != 0) out.push_back(Elem{i});
  }
  return out;
}

std::vector<Elem> Ring::ideal_elements(std::uint32_t j) const {
  if (j > m()) {
    throw Error(ErrorKind::index_out_of_range,
                "ideal index " + std::to_string(j) + " exceeds depth " + std::to_string(m()));
  }
  const auto step = static_cast<std::uint32_t>(impl_->q_pows[j]);
  std::vector<Elem> out;
  out.reserve(size() / step);
  for (std::uint32_t i = 0; i < size(); i += step) out.push_back(Elem{i});
  return out;
}

std::string Ring::token(Elem a) const {
  if (!contains(a)) throw Error(ErrorKind::index_out_of_range, "element outside ring");
  if (family() == Family::zpm) return std::to_string(index_of(a));
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out(m(), '0');
  std::uint32_t x = index_of(a);
  for (std::uint32_t i = 0; i < m(); ++i) {
    out[m() - 1 - i] = kDigits[x % q()];
    x /= q();
  }
  return out;
}

Elem Ring::parse_token(std::string_view token) const {
  if (family() == Family::zpm) {
    const std::uint32_t value = parse_uint(token, "element");
    if (value >= size()) {
      throw Error(ErrorKind::parse_error, "element " + std::string(token) + " outside Z_" + std::to_string(size()));
    }
    return Elem{value};
  }
  if (token.size() != m()) {
    throw Error(ErrorKind::parse_error,
                "element token '" + std::string(token) + "' must have " + std::to_string(m()) + " digits");
  }
  std::uint32_t out = 0;
  for (char c : token) {
    std::uint32_t d = 0;
    if (c >= '0' && c <= '9') {
      d = static_cast<std::uint32_t>(c - '0');
    } else if (c >= 'a' && c <= 'z') {
      d = static_cast<std::uint32_t>(c - 'a') + 10;
    } else {
      throw Error(ErrorKind::parse_error, "bad digit in element token '" + std::string(token) + "'");
    }
    if (d >= q()) throw Error(ErrorKind::parse_error, "digit outside F_q in '" + std::string(token) + "'");
    out = out * q() + d;
  }
  return Elem{out};
}

std::string Ring::header() const {
  std::ostringstream os;
  if (family() == Family::zpm) {
    os << "ring zpm p=" << p() << " m=" << m();
  } else {
    os << "ring fqum p=" << p() << " e=" << e() << " m=" << m() << " poly=" << join_poly(impl_->field.modulus());
  }
  return os.str();
}

std::string Ring::descriptor() const {
  std::ostringstream os;
  if (family() == Family::zpm) {
    os << "zpm:p=" << p() << ",m=" << m();
  } else {
    os << "fqum:p=" << p() << ",e=" << e() << ",m=" << m() << ",poly=" << join_poly(impl_->field.modulus());
  }
  return os.str();
}

std::string Ring::pretty(Elem a) const {
  if (family() == Family::zpm) return std::to_string(index_of(a));
  if (a == zero()) return "0";
  std::string out;
  const auto ds = digits(a);
  for (std::uint32_t i = 0; i < m(); ++i) {
    if (ds[i] == FieldElem{0}) continue;
    if (!out.empty()) out += '+';
    const bool coeff_one = ds[i] == FieldElem{1};
    if (i == 0 || !coeff_one) out += std::to_string(index_of(ds[i]));
    if (i == 1) out += "u";
    if (i > 1) out += "u^" + std::to_string(i);
  }
  return out;
}

bool Ring::operator==(const Ring& other) const noexcept {
  if (impl_ == other.impl_) return true;
  return family() == other.family() && p() == other.p() && e() == other.e() && m() == other.m() &&
         impl_->field.modulus() == other.impl_->field.modulus();
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(Ring ring, Elem value) : ring_(std::move(ring)), value_(value) {
  if (!ring_.contains(value_)) {
    throw Error(ErrorKind::index_out_of_range,
                "index " + std::to_string(index_of(value_)) + " outside a ring of size " +
                    std::to_string(ring_.size()));
  }
}

namespace {
void require_same(const RingElement& a, const RingElement& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorKind::ring_mismatch, a.ring().descriptor() + " vs " + b.ring().descriptor());
  }
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return {a.ring_, a.ring_.add(a.value_, b.value_)};
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return {a.ring_, a.ring_.sub(a.value_, b.value_)};
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return {a.ring_, a.ring_.mul(a.value_, b.value_)};
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.ring_ == b.ring_ && a.value_ == b.value_;
}

// ---------------------------------------------------------------------------

Ring parse_ring_descriptor(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::parse_error, "ring descriptor needs 'zpm:' or 'fqum:' prefix");
  }
  const std::string_view family = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  std::optional<std::uint32_t> p, e, m;
  std::optional<std::vector<std::uint32_t>> poly;
  while (!rest.empty()) {
    const std::size_t eq = rest.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::parse_error, "expected key=value in ring descriptor");
    const std::string_view key = rest.substr(0, eq);
    rest = rest.substr(eq + 1);
    if (key == "poly") {
      // poly consumes the remainder: its coefficients are comma separated too.
      poly = parse_poly(rest);
      break;
    }
    const std::size_t comma = rest.find(',');
    const std::string_view value = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (key == "p") {
      p = parse_uint(value, "p");
    } else if (key == "e") {
      e = parse_uint(value, "e");
    } else if (key == "m") {
      m = parse_uint(value, "m");
    } else {
      throw Error(ErrorKind::parse_error, "unknown ring descriptor key '" + std::string(key) + "'");
    }
  }
  if (!p || !m) throw Error(ErrorKind::parse_error, "ring descriptor needs p and m");
  if (family == "zpm") {
    if (e && *e != 1) throw Error(ErrorKind::invalid_parameters, "Z_{p^m} requires e = 1");
    return Ring::make(Family::zpm, *p, 1, *m, poly);
  }
  if (family == "fqum") return Ring::make(Family::fqum, *p, e.value_or(1), *m, poly);
  throw Error(ErrorKind::parse_error, "unknown ring family '" + std::string(family) + "'");
}

}  // namespace chaincodes
