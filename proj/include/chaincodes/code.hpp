#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chaincodes/ring.hpp"

namespace chaincodes {

using Rational = boost::multiprecision::cpp_rational;

/// Cap on enumerated vectors (messages, ambient vectors, vertices). Defaults to 2^24;
/// the CHAINCODES_ENUM_GUARD environment variable overrides it.
std::uint64_t enumeration_guard();

/// Throws EnumerationTooLarge when base^exponent exceeds `guard`.
std::uint64_t guarded_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t guard,
                            const char* what);

/// A rows x cols matrix over a chain ring, row-major.
class CodeMatrix {
 public:
  CodeMatrix(Ring ring, std::size_t rows, std::size_t cols);
  CodeMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
  static CodeMatrix from_rows(Ring ring, const std::vector<Word>& rows);
  static CodeMatrix from_columns(Ring ring, std::size_t rows, const std::vector<Word>& columns);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem value);
  std::span<const Elem> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  Word column(std::size_t c) const;
  const std::vector<Elem>& entries() const noexcept { return entries_; }

  bool operator==(const CodeMatrix& other) const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

/// Elementwise vector helpers over a ring.
Word add_words(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b);
Word sub_words(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b);
Word scale_word(const Ring& ring, Elem scalar, std::span<const Elem> a);
Elem dot(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b);
/// xG for a message x of length G.rows().
Word encode(const CodeMatrix& gen, std::span<const Elem> message);

/// Calls `visit` on every vector of `values`^length in lexicographic order
/// (last coordinate fastest).
template <typename Visit>
void for_each_vector(const std::vector<Elem>& values, std::size_t length, Visit&& visit) {
  if (values.empty()) return;
  Word current(length, values.front());
  std::vector<std::size_t> pos(length, 0);
  while (true) {
    visit(static_cast<const Word&>(current));
    std::size_t i = length;
    while (true) {
      if (i == 0) return;
      --i;
      if (++pos[i] < values.size()) {
        current[i] = values[pos[i]];
        break;
      }
      pos[i] = 0;
      current[i] = values.front();
    }
  }
}

/// The R-submodule generated by `generators` (all of length n), sorted.
std::vector<Word> submodule_closure(const Ring& ring, std::size_t n, const std::vector<Word>& generators,
                                    std::uint64_t guard = enumeration_guard());

/// A linear code given by a generator matrix, with its codewords enumerated and
/// sorted lexicographically.
class LinearCode {
 public:
  /// Enumerates xG over all messages x in R^rows and deduplicates.
  static LinearCode span(CodeMatrix gen, std::uint64_t guard = enumeration_guard());

  const CodeMatrix& generator() const noexcept { return gen_; }
  const Ring& ring() const noexcept { return gen_.ring(); }
  std::size_t length() const noexcept { return gen_.cols(); }
  const std::vector<Word>& codewords() const noexcept { return words_; }
  std::uint64_t cardinality() const noexcept { return words_.size(); }
  /// k with |C| = q^k.
  std::uint32_t qdim() const noexcept { return qdim_; }
  bool contains(const Word& w) const;

 private:
  LinearCode(CodeMatrix gen, std::vector<Word> words);
  friend LinearCode dual_bruteforce(const LinearCode& code, std::uint64_t guard);

  CodeMatrix gen_;
  std::vector<Word> words_;
  std::uint32_t qdim_ = 0;
};

/// Type 1^{k_0} q^{k_1} ... (q^{m-1})^{k_{m-1}}.
struct CodeTypeProfile {
  std::vector<std::uint32_t> k;

  std::uint32_t qdim() const;
  bool is_free() const;
  bool operator==(const CodeTypeProfile&) const = default;
};

/// Exact weight -> multiplicity map.
class WeightDistribution {
 public:
  WeightDistribution() = default;
  explicit WeightDistribution(std::map<std::uint64_t, std::uint64_t> counts);

  void add(std::uint64_t weight, std::uint64_t count = 1);
  std::uint64_t count(std::uint64_t weight) const;
  std::uint64_t total() const;
  std::vector<std::uint64_t> nonzero_weights() const;
  /// Throws EmptyCode when no nonzero weight is present.
  std::uint64_t min_nonzero() const;
  std::uint64_t max_nonzero() const;
  const std::map<std::uint64_t, std::uint64_t>& counts() const noexcept { return counts_; }

  bool operator==(const WeightDistribution&) const = default;

 private:
  std::map<std::uint64_t, std::uint64_t> counts_;
};

CodeTypeProfile code_type(const LinearCode& code);

WeightDistribution hom_weight_distribution(const LinearCode& code);
std::uint64_t min_hom_distance(const LinearCode& code);

/// Every column contains a unit.
bool is_regular(const CodeMatrix& gen);
/// The cyclic submodules g_i R of the columns are pairwise distinct.
bool is_projective(const CodeMatrix& gen);

/// floor((q^{m-1} - q^{m-2}) n card / (card - 1)).
std::uint64_t plotkin_bound(const Ring& ring, std::uint64_t n, std::uint64_t card);
/// Cross-checks against d = (q^{m-1} - q^{m-2}) n when the generator is regular and projective.
bool is_plotkin_optimal(const LinearCode& code);

/// All y in R^n orthogonal to every row of the generator.
LinearCode dual_bruteforce(const LinearCode& code, std::uint64_t guard = enumeration_guard());

/// Weight relation and the first two moment identities for a two-weight code.
bool check_two_weight_relation(const Ring& ring, std::uint64_t n, std::uint64_t card, std::uint64_t w1,
                               std::uint64_t w2, std::uint64_t a1, std::uint64_t a2);

/// Parameters forced on a Plotkin-optimal two-weight regular projective code.
struct TwoWeightCharacterization {
  std::uint32_t t = 0;
  WeightDistribution table;
};

/// The predicted table {0:1, q^{k-t-1}(q^t-1): q^k-q^t, q^{k-1}: q^t-1}.
WeightDistribution two_weight_table(const Ring& ring, std::uint32_t k, std::uint32_t t);

/// Throws NotApplicable when the code is not two-weight, regular, projective and
/// Plotkin-optimal; CharacterizationViolated when it is but its parameters disagree.
TwoWeightCharacterization characterize_two_weight(const Ring& ring, std::uint64_t n,
                                                  const CodeTypeProfile& type,
                                                  const WeightDistribution& distribution, bool regular,
                                                  bool projective);
TwoWeightCharacterization characterize_two_weight(const LinearCode& code);

/// Sum of wt(c + a*1) over a in <theta^j>.
std::uint64_t coset_sum(const Ring& ring, std::span<const Elem> word, std::uint32_t j);

/// Sum of wt(xG) over x in u + <theta^{m-1}>^rows.
std::uint64_t message_coset_weight_sum(const CodeMatrix& gen, std::span<const Elem> u);

}  // namespace chaincodes
