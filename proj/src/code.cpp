#include "chaincodes/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <unordered_set>

#include "chaincodes/error.hpp"

namespace chaincodes {

namespace {

using WordSet = std::unordered_set<Word, WordHash>;

constexpr std::uint64_t kDefaultGuard = std::uint64_t{1} << 24;

std::uint64_t read_guard_from_env() {
  const char* raw = std::getenv("CHAINCODES_ENUM_GUARD");
  if (raw == nullptr || *raw == '\0') return kDefaultGuard;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return kDefaultGuard;
  return value;
}

// Exact log_q(value), or nullopt when value is not a power of q.
std::optional<std::uint32_t> log_exact(std::uint64_t value, std::uint64_t q) {
  std::uint32_t k = 0;
  while (value > 1) {
    if (value % q != 0) return std::nullopt;
    value /= q;
    ++k;
  }
  if (value != 1) return std::nullopt;
  return k;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

std::uint64_t enumeration_guard() {
  static const std::uint64_t guard = read_guard_from_env();
  return guard;
}

std::uint64_t guarded_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t guard, const char* what) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > guard / base) {
      throw Error(ErrorKind::enumeration_too_large,
                  std::string(what) + ": " + std::to_string(base) + "^" + std::to_string(exponent) +
                      " exceeds the enumeration guard " + std::to_string(guard));
    }
    out *= base;
  }
  if (out > guard) {
    throw Error(ErrorKind::enumeration_too_large,
                std::string(what) + " exceeds the enumeration guard " + std::to_string(guard));
  }
  return out;
}

// ---------------------------------------------------------------------------
// CodeMatrix

CodeMatrix::CodeMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : CodeMatrix(std::move(ring), rows, cols, std::vector<Elem>(rows * cols, Elem{0})) {}

CodeMatrix::CodeMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorKind::invalid_parameters, "a matrix needs at least one row and one column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::length_mismatch, "entry count does not match rows x cols");
  }
  for (Elem a : entries_) {
    if (!ring_.contains(a)) throw Error(ErrorKind::ring_mismatch, "matrix entry outside the ring");
  }
}

CodeMatrix CodeMatrix::from_rows(Ring ring, const std::vector<Word>& rows) {
  if (rows.empty()) throw Error(ErrorKind::invalid_parameters, "a matrix needs at least one row");
  const std::size_t cols = rows.front().size();
  std::vector<Elem> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::length_mismatch, "rows of unequal length");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return CodeMatrix(std::move(ring), rows.size(), cols, std::move(entries));
}

CodeMatrix CodeMatrix::from_columns(Ring ring, std::size_t rows, const std::vector<Word>& columns) {
  CodeMatrix out(std::move(ring), rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::length_mismatch, "column of wrong height");
    for (std::size_t r = 0; r < rows; ++r) out.set(r, c, columns[c][r]);
  }
  return out;
}

void CodeMatrix::set(std::size_t r, std::size_t c, Elem value) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::index_out_of_range, "matrix position");
  if (!ring_.contains(value)) throw Error(ErrorKind::ring_mismatch, "matrix entry outside the ring");
  entries_[r * cols_ + c] = value;
}

Word CodeMatrix::column(std::size_t c) const {
  Word out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

bool CodeMatrix::operator==(const CodeMatrix& other) const {
  return ring_ == other.ring_ && rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

// ---------------------------------------------------------------------------
// Vector helpers

Word add_words(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::length_mismatch, "vector lengths differ");
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.add(a[i], b[i]);
  return out;
}

Word sub_words(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::length_mismatch, "vector lengths differ");
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.sub(a[i], b[i]);
  return out;
}

Word scale_word(const Ring& ring, Elem scalar, std::span<const Elem> a) {
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.mul(scalar, a[i]);
  return out;
}

Elem dot(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::length_mismatch, "vector lengths differ");
  Elem acc = ring.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = ring.add(acc, ring.mul(a[i], b[i]));
  return acc;
}

Word encode(const CodeMatrix& gen, std::span<const Elem> message) {
  if (message.size() != gen.rows()) throw Error(ErrorKind::length_mismatch, "message length != rows");
  const Ring& ring = gen.ring();
  Word out(gen.cols(), ring.zero());
  for (std::size_t r = 0; r < gen.rows(); ++r) {
    if (message[r] == ring.zero()) continue;
    const auto row = gen.row(r);
    for (std::size_t c = 0; c < gen.cols(); ++c) out[c] = ring.add(out[c], ring.mul(message[r], row[c]));
  }
  return out;
}

std::vector<Word> submodule_closure(const Ring& ring, std::size_t n, const std::vector<Word>& generators,
                                    std::uint64_t guard) {
  const auto elements = ring.elements();
  std::vector<Word> current{Word(n, ring.zero())};
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(ErrorKind::length_mismatch, "generator of wrong length");
    WordSet next;
    std::vector<Word> multiples;
    for (Elem r : elements) multiples.push_back(scale_word(ring, r, g));
    for (const auto& s : current) {
      for (const auto& mg : multiples) {
        next.insert(add_words(ring, s, mg));
        if (next.size() > guard) {
          throw Error(ErrorKind::enumeration_too_large, "submodule closure exceeds the enumeration guard");
        }
      }
    }
    current.assign(next.begin(), next.end());
  }
  std::sort(current.begin(), current.end());
  return current;
}

// ---------------------------------------------------------------------------
// LinearCode

LinearCode::LinearCode(CodeMatrix gen, std::vector<Word> words) : gen_(std::move(gen)), words_(std::move(words)) {
  const auto k = log_exact(words_.size(), gen_.ring().q());
  if (!k) {
    throw Error(ErrorKind::not_power_of_q,
                "code size " + std::to_string(words_.size()) + " is not a power of q");
  }
  qdim_ = *k;
}

LinearCode LinearCode::span(CodeMatrix gen, std::uint64_t guard) {
  const Ring& ring = gen.ring();
  guarded_power(ring.size(), gen.rows(), guard, "message space");
  std::vector<Word> rows;
  rows.reserve(gen.rows());
  for (std::size_t r = 0; r < gen.rows(); ++r) rows.emplace_back(gen.row(r).begin(), gen.row(r).end());
  auto words = submodule_closure(ring, gen.cols(), rows, guard);
  return LinearCode(std::move(gen), std::move(words));
}

bool LinearCode::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

// ---------------------------------------------------------------------------
// Type and weights

std::uint32_t CodeTypeProfile::qdim() const {
  const auto m = static_cast<std::uint32_t>(k.size());
  std::uint32_t total = 0;
  for (std::uint32_t i = 0; i < m; ++i) total += (m - i) * k[i];
  return total;
}

bool CodeTypeProfile::is_free() const {
  return std::all_of(k.begin() + (k.empty() ? 0 : 1), k.end(), [](std::uint32_t x) { return x == 0; });
}

WeightDistribution::WeightDistribution(std::map<std::uint64_t, std::uint64_t> counts) : counts_(std::move(counts)) {
  std::erase_if(counts_, [](const auto& kv) { return kv.second == 0; });
}

void WeightDistribution::add(std::uint64_t weight, std::uint64_t count) {
  if (count) counts_[weight] += count;
}

std::uint64_t WeightDistribution::count(std::uint64_t weight) const {
  const auto it = counts_.find(weight);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t total = 0;
  for (const auto& [w, c] : counts_) total += c;
  return total;
}

std::vector<std::uint64_t> WeightDistribution::nonzero_weights() const {
  std::vector<std::uint64_t> out;
  for (const auto& [w, c] : counts_) {
    if (w != 0) out.push_back(w);
  }
  return out;
}

std::uint64_t WeightDistribution::min_nonzero() const {
  for (const auto& [w, c] : counts_) {
    if (w != 0) return w;
  }
  throw Error(ErrorKind::empty_code, "the code has no nonzero codeword");
}

std::uint64_t WeightDistribution::max_nonzero() const {
  if (counts_.empty() || counts_.rbegin()->first == 0) {
    throw Error(ErrorKind::empty_code, "the code has no nonzero codeword");
  }
  return counts_.rbegin()->first;
}

CodeTypeProfile code_type(const LinearCode& code) {
  const Ring& ring = code.ring();
  const std::uint32_t m = ring.m();
  // d[j] = log_q |theta^j C|
  std::vector<std::uint32_t> d(m + 1, 0);
  d[0] = code.qdim();
  Elem theta_pow = ring.one();
  for (std::uint32_t j = 1; j < m; ++j) {
    theta_pow = ring.mul(theta_pow, ring.theta());
    WordSet scaled;
    for (const auto& w : code.codewords()) scaled.insert(scale_word(ring, theta_pow, w));
    const auto k = log_exact(scaled.size(), ring.q());
    if (!k) {
      throw Error(ErrorKind::not_power_of_q, "|theta^" + std::to_string(j) + " C| is not a power of q");
    }
    d[j] = *k;
  }
  std::vector<std::int64_t> s(m + 1, 0);
  for (std::uint32_t j = 0; j < m; ++j) s[j] = std::int64_t{d[j]} - d[j + 1];
  CodeTypeProfile out;
  out.k.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    const std::int64_t ki = s[m - 1 - i] - s[m - i];
    if (ki < 0) throw Error(ErrorKind::not_power_of_q, "inconsistent submodule chain");
    out.k[i] = static_cast<std::uint32_t>(ki);
  }
  return out;
}

WeightDistribution hom_weight_distribution(const LinearCode& code) {
  WeightDistribution out;
  for (const auto& w : code.codewords()) out.add(code.ring().hom_weight(w));
  return out;
}

std::uint64_t min_hom_distance(const LinearCode& code) { return hom_weight_distribution(code).min_nonzero(); }

bool is_regular(const CodeMatrix& gen) {
  const Ring& ring = gen.ring();
  for (std::size_t c = 0; c < gen.cols(); ++c) {
    bool has_unit = false;
    for (std::size_t r = 0; r < gen.rows() && !has_unit; ++r) has_unit = ring.is_unit(gen.at(r, c));
    if (!has_unit) return false;
  }
  return true;
}

bool is_projective(const CodeMatrix& gen) {
  const Ring& ring = gen.ring();
  const auto elements = ring.elements();
  std::set<std::vector<Word>> orbits;
  for (std::size_t c = 0; c < gen.cols(); ++c) {
    const Word col = gen.column(c);
    std::vector<Word> orbit;
    orbit.reserve(elements.size());
    for (Elem a : elements) orbit.push_back(scale_word(ring, a, col));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    if (!orbits.insert(std::move(orbit)).second) return false;
  }
  return true;
}

std::uint64_t plotkin_bound(const Ring& ring, std::uint64_t n, std::uint64_t card) {
  if (card < 2) throw Error(ErrorKind::trivial_code, "the Plotkin bound needs at least two codewords");
  using boost::multiprecision::cpp_int;
  const cpp_int num = cpp_int(ring.gamma()) * n * card;
  return static_cast<std::uint64_t>(cpp_int(num / (card - 1)));
}

bool is_plotkin_optimal(const LinearCode& code) {
  const auto d = min_hom_distance(code);
  const bool optimal = d == plotkin_bound(code.ring(), code.length(), code.cardinality());
  if (is_regular(code.generator()) && is_projective(code.generator())) {
    const bool via_length = d == code.ring().gamma() * code.length();
    if (via_length != optimal) {
      throw Error(ErrorKind::internal_inconsistency,
                  "Plotkin optimality disagrees with the regular projective distance test");
    }
  }
  return optimal;
}

LinearCode dual_bruteforce(const LinearCode& code, std::uint64_t guard) {
  const Ring& ring = code.ring();
  const CodeMatrix& gen = code.generator();
  const std::size_t n = code.length();
  guarded_power(ring.size(), n, guard, "ambient space");

  std::vector<Word> dual;
  for_each_vector(ring.elements(), n, [&](const Word& y) {
    for (std::size_t r = 0; r < gen.rows(); ++r) {
      if (dot(ring, gen.row(r), y) != ring.zero()) return;
    }
    dual.push_back(y);
  });

  // Greedy generating set: add any dual vector not yet in the span.
  std::vector<Word> rows;
  std::vector<Word> spanned{Word(n, ring.zero())};
  for (const auto& y : dual) {
    if (std::binary_search(spanned.begin(), spanned.end(), y)) continue;
    rows.push_back(y);
    spanned = submodule_closure(ring, n, rows, guard);
    if (spanned.size() == dual.size()) break;
  }
  if (rows.empty()) rows.push_back(Word(n, ring.zero()));
  return LinearCode(CodeMatrix::from_rows(ring, rows), std::move(dual));
}

bool check_two_weight_relation(const Ring& ring, std::uint64_t n, std::uint64_t card, std::uint64_t w1,
                               std::uint64_t w2, std::uint64_t a1, std::uint64_t a2) {
  if (w1 == w2) throw Error(ErrorKind::invalid_weights, "the two weights must differ");
  const Rational g(ring.gamma());
  const Rational nn(n), cc(card), o1(w1), o2(w2);
  const Rational units(ring.unit_count());

  const Rational lhs = (o1 + o2) * nn * g * cc;
  const Rational rhs = g * g * (nn / units + nn * nn) * cc + o1 * o2 * (cc - 1);
  if (lhs != rhs) return false;
  if (a1 + a2 + 1 != card) return false;
  if (Rational(a1) * o1 + Rational(a2) * o2 != nn * g * cc) return false;
  if (Rational(a1) * o1 * o1 + Rational(a2) * o2 * o2 != g * g * (nn / units + nn * nn) * cc) return false;
  return true;
}

WeightDistribution two_weight_table(const Ring& ring, std::uint32_t k, std::uint32_t t) {
  if (t < 1 || t > k) throw Error(ErrorKind::invalid_t, "need 1 <= t <= k");
  const std::uint64_t q = ring.q();
  WeightDistribution out;
  out.add(0, 1);
  if (k > t) out.add(ipow(q, k - t - 1) * (ipow(q, t) - 1), ipow(q, k) - ipow(q, t));
  out.add(ipow(q, k - 1), ipow(q, t) - 1);
  return out;
}

TwoWeightCharacterization characterize_two_weight(const Ring& ring, std::uint64_t n, const CodeTypeProfile& type,
                                                  const WeightDistribution& distribution, bool regular,
                                                  bool projective) {
  const auto weights = distribution.nonzero_weights();
  if (weights.size() != 2) throw Error(ErrorKind::not_applicable, "the code is not two-weight");
  if (!regular) throw Error(ErrorKind::not_applicable, "the code is not regular");
  if (!projective) throw Error(ErrorKind::not_applicable, "the code is not projective");
  if (distribution.count(0) != 1) throw Error(ErrorKind::not_applicable, "weight 0 must occur once");
  const std::uint64_t card = distribution.total();
  if (weights.front() != plotkin_bound(ring, n, card)) {
    throw Error(ErrorKind::not_applicable, "the code is not Plotkin-optimal");
  }

  const std::uint64_t q = ring.q();
  const std::uint32_t k = type.qdim();
  if (ipow(q, k) != card) throw Error(ErrorKind::characterization_violated, "|C| != q^k for the stated type");
  const auto t = log_exact(distribution.count(weights.back()) + 1, q);
  if (!t) throw Error(ErrorKind::characterization_violated, "A_{w2} + 1 is not a power of q");
  if (*t < 1 || type.k.empty() || *t > type.k[0]) {
    throw Error(ErrorKind::characterization_violated,
                "t = " + std::to_string(*t) + " outside 1..k_0");
  }
  if (n * ring.unit_count() != ipow(q, k - *t) * (ipow(q, *t) - 1)) {
    throw Error(ErrorKind::characterization_violated, "length does not match q^{k-t}(q^t-1)/(q^m-q^{m-1})");
  }
  auto table = two_weight_table(ring, k, *t);
  if (!(table == distribution)) {
    throw Error(ErrorKind::characterization_violated, "weight distribution differs from the predicted table");
  }
  return {*t, std::move(table)};
}

TwoWeightCharacterization characterize_two_weight(const LinearCode& code) {
  return characterize_two_weight(code.ring(), code.length(), code_type(code), hom_weight_distribution(code),
                                 is_regular(code.generator()), is_projective(code.generator()));
}

std::uint64_t coset_sum(const Ring& ring, std::span<const Elem> word, std::uint32_t j) {
  if (j >= ring.m()) throw Error(ErrorKind::index_out_of_range, "need 0 <= j <= m-1");
  std::uint64_t total = 0;
  for (Elem a : ring.ideal_elements(j)) {
    for (Elem c : word) total += ring.hom_weight(ring.add(c, a));
  }
  return total;
}

std::uint64_t message_coset_weight_sum(const CodeMatrix& gen, std::span<const Elem> u) {
  const Ring& ring = gen.ring();
  if (u.size() != gen.rows()) throw Error(ErrorKind::length_mismatch, "coset offset length != rows");
  std::uint64_t total = 0;
  Word x(u.size());
  for_each_vector(ring.ideal_elements(ring.m() - 1), gen.rows(), [&](const Word& offset) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = ring.add(u[i], offset[i]);
    total += ring.hom_weight(encode(gen, x));
  });
  return total;
}

}  // namespace chaincodes
