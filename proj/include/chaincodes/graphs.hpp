#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chaincodes/code.hpp"

namespace chaincodes {

/// Simple undirected graph with bitset adjacency rows and vertex labels.
class Graph {
 public:
  explicit Graph(std::size_t n, std::vector<Word> labels = {});

  std::size_t size() const noexcept { return n_; }
  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const {
    return (rows_[a][b / 64] >> (b % 64)) & 1u;
  }
  std::size_t degree(std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t common_neighbors(std::size_t a, std::size_t b) const;
  const std::vector<Word>& labels() const noexcept { return labels_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<Word> labels_;
};

/// Vertices are codewords; x ~ y iff wt_hom(x - y) = weight.
Graph coset_graph(const LinearCode& code, std::uint64_t weight);

/// rational + coefficient * sqrt(radicand), radicand squarefree (1 means rational).
struct QuadraticSurd {
  Rational rational;
  Rational coefficient;
  std::uint64_t radicand = 1;

  double approx() const;
  std::string str() const;
  bool operator==(const QuadraticSurd&) const = default;
};

struct SrgParams {
  std::uint64_t N = 0;
  std::uint64_t K = 0;
  std::optional<std::uint64_t> lambda;  // absent when there are no edges
  std::optional<std::uint64_t> mu;      // absent for complete graphs
  std::vector<QuadraticSurd> restricted_eigenvalues;
};

struct NotSrg {
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> pair;
};

/// Exhaustive SRG check; restricted eigenvalues from x^2 + (mu - lambda) x + (mu - K),
/// cross-checked against the adjacency spectrum for N <= 256.
std::variant<SrgParams, NotSrg> verify_srg(const Graph& g);

/// Distinct adjacency eigenvalues (rounded to 1e-6) with multiplicities.
std::vector<std::pair<double, std::size_t>> spectrum(const Graph& g);

/// Number of parts and part size when the graph is complete multipartite with equal parts.
std::optional<std::pair<std::size_t, std::size_t>> complete_multipartite_type(const Graph& g);

/// Cayley graph on the R-column span of H with connection set {u h_i : u unit}.
Graph syndrome_graph(const CodeMatrix& h, std::uint64_t guard = enumeration_guard());

struct SwrgParams {
  std::uint64_t lambda = 0;
  std::optional<std::uint64_t> mu;
  std::uint64_t nu = 0;
};

struct NotSwrg {
  std::string reason;
  std::pair<std::size_t, std::size_t> pair;
};

/// Walk counts (A^ell)_{xy} constant per adjacency class. Requires N <= 4096.
std::variant<SwrgParams, NotSwrg> verify_swrg(const Graph& g, std::uint32_t ell = 3);

/// Unit-stable set of regular nonzero vectors in R^k.
class OmegaSet {
 public:
  /// Throws NotUnitStable, NotRegularVector or InvalidParameters.
  OmegaSet(Ring ring, std::size_t k, std::vector<Word> vectors);
  /// Unit orbits of the columns of H.
  static OmegaSet from_columns(const CodeMatrix& h);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t k() const noexcept { return k_; }
  const std::vector<Word>& vectors() const noexcept { return vectors_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  bool contains(const Word& w) const;

 private:
  Ring ring_;
  std::size_t k_;
  std::vector<Word> vectors_;
};

struct TssConstants {
  std::uint64_t sigma0 = 0;
  std::optional<std::uint64_t> sigma1;  // absent when the span has no nonzero vector outside Omega
};

struct NotTss {
  Word h;
  std::string reason;
};

/// Counts ordered triples of Omega summing to each nonzero h of the additive span of Omega.
std::variant<TssConstants, NotTss> is_tss(const OmegaSet& omega, std::uint64_t guard = enumeration_guard());

/// w1 + w2 + w3 = 3 n (q^{m-1} - q^{m-2}). Throws InvalidWeights unless three weights are given.
bool tss_criterion(const Ring& ring, std::uint64_t n, const std::vector<std::uint64_t>& weights);

/// {(a, b) : a in Omega, b in <theta^j>}.
OmegaSet extend_omega(const OmegaSet& omega, std::uint32_t j);

/// One lexicographically smallest representative per unit orbit, columns sorted.
CodeMatrix code_from_omega(const OmegaSet& omega);

/// Coset graph parameters predicted from normalized weights of a two-weight code.
struct PredictedSrg {
  Rational N, K, lambda, mu;
};
PredictedSrg predict_coset_srg(const Ring& ring, std::uint64_t n, std::uint64_t card, std::uint64_t w1,
                               std::uint64_t w2);

/// (q^m - q^{m-1}) n - q w for a syndrome graph of a two-weight code's dual.
std::int64_t syndrome_eigenvalue(const Ring& ring, std::uint64_t n, std::uint64_t w);

}  // namespace chaincodes
