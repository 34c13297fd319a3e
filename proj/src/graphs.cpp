#include "chaincodes/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <Eigen/Eigenvalues>

#include "chaincodes/error.hpp"

namespace chaincodes {

namespace {

constexpr std::size_t kSpectrumLimit = 256;
constexpr std::size_t kWalkLimit = 4096;

using WordIndex = std::unordered_map<Word, std::size_t, WordHash>;

Eigen::MatrixXd dense_adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (std::size_t j : g.neighbors(static_cast<std::size_t>(i))) a(i, static_cast<Eigen::Index>(j)) = 1.0;
  }
  return a;
}

// radicand = s^2 d with d squarefree; returns {s, d}.
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t radicand) {
  std::uint64_t s = 1, d = radicand;
  for (std::uint64_t f = 2; f * f <= d; ++f) {
    while (d % (f * f) == 0) {
      d /= f * f;
      s *= f;
    }
  }
  return {s, d};
}

std::vector<QuadraticSurd> quadratic_roots(std::int64_t b, std::int64_t c) {
  // x^2 + b x + c = 0, real roots assumed
  const std::int64_t disc = b * b - 4 * c;
  if (disc < 0) throw Error(ErrorKind::internal_inconsistency, "SRG eigenvalue discriminant is negative");
  const auto [s, d] = split_square(static_cast<std::uint64_t>(disc));
  const Rational mid(-b, 2);
  if (disc == 0) return {QuadraticSurd{mid, 0, 1}};
  if (d == 1) {
    return {QuadraticSurd{mid + Rational(static_cast<std::int64_t>(s), 2), 0, 1},
            QuadraticSurd{mid - Rational(static_cast<std::int64_t>(s), 2), 0, 1}};
  }
  const Rational coef(static_cast<std::int64_t>(s), 2);
  return {QuadraticSurd{mid, coef, d}, QuadraticSurd{mid, -coef, d}};
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n, std::vector<Word> labels)
    : n_(n), words_((n + 63) / 64), rows_(n, std::vector<std::uint64_t>(words_, 0)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_) {
    throw Error(ErrorKind::length_mismatch, "label count differs from vertex count");
  }
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= n_ || b >= n_) throw Error(ErrorKind::index_out_of_range, "vertex index");
  if (a == b) throw Error(ErrorKind::invalid_parameters, "loops are not allowed");
  rows_[a][b / 64] |= std::uint64_t{1} << (b % 64);
  rows_[b][a / 64] |= std::uint64_t{1} << (a % 64);
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto w : rows_[v]) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_; ++i) {
    std::uint64_t w = rows_[v][i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t Graph::common_neighbors(std::size_t a, std::size_t b) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_; ++i) c += static_cast<std::size_t>(std::popcount(rows_[a][i] & rows_[b][i]));
  return c;
}

Graph coset_graph(const LinearCode& code, std::uint64_t weight) {
  const Ring& ring = code.ring();
  const auto& words = code.codewords();
  if (weight == 0 || hom_weight_distribution(code).count(weight) == 0) {
    throw Error(ErrorKind::weight_not_present, "weight " + std::to_string(weight) + " does not occur in the code");
  }
  WordIndex index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  std::vector<const Word*> shifts;
  for (const auto& w : words) {
    if (ring.hom_weight(w) == weight) shifts.push_back(&w);
  }
  Graph g(words.size(), words);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (const Word* s : shifts) {
      const std::size_t j = index.at(add_words(ring, words[i], *s));
      if (i < j) g.add_edge(i, j);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// SRG

double QuadraticSurd::approx() const {
  return rational.convert_to<double>() + coefficient.convert_to<double>() * std::sqrt(static_cast<double>(radicand));
}

std::string QuadraticSurd::str() const {
  if (coefficient == 0 || radicand == 1) return Rational(rational + coefficient).str();
  std::string out = rational == 0 ? "" : rational.str();
  out += coefficient > 0 ? (out.empty() ? "" : "+") : "-";
  const Rational mag = coefficient > 0 ? coefficient : Rational(-coefficient);
  if (mag != 1) out += mag.str() + "*";
  out += "sqrt(" + std::to_string(radicand) + ")";
  return out;
}

std::variant<SrgParams, NotSrg> verify_srg(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) return NotSrg{"empty vertex set", std::nullopt};
  SrgParams out;
  out.N = n;
  out.K = g.degree(0);
  for (std::size_t v = 1; v < n; ++v) {
    if (g.degree(v) != out.K) return NotSrg{"degrees differ", std::make_pair(std::size_t{0}, v)};
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::uint64_t c = g.common_neighbors(a, b);
      auto& slot = g.adjacent(a, b) ? out.lambda : out.mu;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        return NotSrg{g.adjacent(a, b) ? "adjacent pairs have differing common neighbours"
                                       : "non-adjacent pairs have differing common neighbours",
                      std::make_pair(a, b)};
      }
    }
  }

  if (out.lambda && out.mu) {
    const auto K = static_cast<std::int64_t>(out.K);
    const auto l = static_cast<std::int64_t>(*out.lambda);
    const auto m = static_cast<std::int64_t>(*out.mu);
    if (K * (K - l - 1) != (static_cast<std::int64_t>(n) - K - 1) * m) {
      throw Error(ErrorKind::internal_inconsistency, "SRG feasibility identity fails");
    }
    out.restricted_eigenvalues = quadratic_roots(m - l, m - K);
  } else if (out.lambda) {
    out.restricted_eigenvalues = {QuadraticSurd{-1, 0, 1}};  // complete graph
  } else {
    out.restricted_eigenvalues = {QuadraticSurd{0, 0, 1}};  // edgeless graph
  }

  if (n <= kSpectrumLimit) {
    for (const auto& [value, mult] : spectrum(g)) {
      bool matched = std::abs(value - static_cast<double>(out.K)) < 1e-6;
      for (const auto& r : out.restricted_eigenvalues) matched = matched || std::abs(value - r.approx()) < 1e-6;
      if (!matched) {
        throw Error(ErrorKind::internal_inconsistency,
                    "adjacency eigenvalue " + std::to_string(value) + " is not K or a restricted eigenvalue");
      }
    }
  }
  return out;
}

std::vector<std::pair<double, std::size_t>> spectrum(const Graph& g) {
  if (g.size() > 2048) throw Error(ErrorKind::enumeration_too_large, "spectrum limited to 2048 vertices");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_adjacency(g), Eigen::EigenvaluesOnly);
  std::map<double, std::size_t> counts;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double v = std::round(solver.eigenvalues()(i) * 1e6) / 1e6;
    if (v == 0.0) v = 0.0;  // drop negative zero
    ++counts[v];
  }
  std::vector<std::pair<double, std::size_t>> out(counts.rbegin(), counts.rend());
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> complete_multipartite_type(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) return std::nullopt;
  // Non-adjacency is an equivalence relation iff non-adjacent vertices share neighbourhoods.
  std::vector<std::size_t> part(n, n);
  std::vector<std::size_t> part_sizes;
  for (std::size_t v = 0; v < n; ++v) {
    if (part[v] != n) continue;
    const auto nv = g.neighbors(v);
    part[v] = part_sizes.size();
    std::size_t size = 1;
    for (std::size_t u = v + 1; u < n; ++u) {
      if (g.adjacent(u, v)) continue;
      if (part[u] != n || g.neighbors(u) != nv) return std::nullopt;
      part[u] = part_sizes.size();
      ++size;
    }
    part_sizes.push_back(size);
  }
  if (std::adjacent_find(part_sizes.begin(), part_sizes.end(), std::not_equal_to<>()) != part_sizes.end()) {
    return std::nullopt;
  }
  return std::make_pair(part_sizes.size(), part_sizes.front());
}

// ---------------------------------------------------------------------------
// Syndrome graphs and walk regularity

Graph syndrome_graph(const CodeMatrix& h, std::uint64_t guard) {
  const Ring& ring = h.ring();
  std::set<Word> connection;
  for (std::size_t c = 0; c < h.cols(); ++c) {
    const Word col = h.column(c);
    for (Elem u : ring.units()) {
      Word w = scale_word(ring, u, col);
      if (std::any_of(w.begin(), w.end(), [&](Elem a) { return a != ring.zero(); })) connection.insert(std::move(w));
    }
  }
  // Every ring element is a sum of units, so S generates the whole column span.
  std::unordered_set<Word, WordHash> seen{Word(h.rows(), ring.zero())};
  std::vector<Word> frontier{Word(h.rows(), ring.zero())};
  while (!frontier.empty()) {
    const Word v = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& s : connection) {
      Word w = add_words(ring, v, s);
      if (seen.insert(w).second) {
        if (seen.size() > guard) {
          throw Error(ErrorKind::enumeration_too_large, "syndrome graph exceeds the enumeration guard");
        }
        frontier.push_back(std::move(w));
      }
    }
  }
  std::vector<Word> vertices(seen.begin(), seen.end());
  std::sort(vertices.begin(), vertices.end());
  WordIndex index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  Graph g(vertices.size(), vertices);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (const auto& s : connection) {
      const std::size_t j = index.at(add_words(ring, vertices[i], s));
      if (i < j) g.add_edge(i, j);
    }
  }
  return g;
}

std::variant<SwrgParams, NotSwrg> verify_swrg(const Graph& g, std::uint32_t ell) {
  const std::size_t n = g.size();
  if (ell < 2) throw Error(ErrorKind::invalid_parameters, "walk length must be at least 2");
  if (n > kWalkLimit) throw Error(ErrorKind::enumeration_too_large, "walk counts limited to 4096 vertices");
  if (n == 0) throw Error(ErrorKind::invalid_parameters, "empty graph");
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  // walks[i * n + j] = (A^len)_{ij}
  std::vector<std::uint64_t> walks(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : adj[i]) walks[i * n + j] = 1;
  }
  std::vector<std::uint64_t> next(n * n);
  for (std::uint32_t len = 1; len < ell; ++len) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k : adj[j]) s += walks[i * n + k];
        next[i * n + j] = s;
      }
    }
    walks.swap(next);
  }

  SwrgParams out;
  out.nu = walks[0];
  std::optional<std::uint64_t> lambda;
  for (std::size_t i = 0; i < n; ++i) {
    if (walks[i * n + i] != out.nu) return NotSwrg{"closed walk counts differ", {0, i}};
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t w = walks[i * n + j];
      auto& slot = g.adjacent(i, j) ? lambda : out.mu;
      if (!slot) {
        slot = w;
      } else if (*slot != w) {
        return NotSwrg{g.adjacent(i, j) ? "adjacent walk counts differ" : "non-adjacent walk counts differ", {i, j}};
      }
    }
  }
  out.lambda = lambda.value_or(0);
  return out;
}

// ---------------------------------------------------------------------------
// Triple sum sets

OmegaSet::OmegaSet(Ring ring, std::size_t k, std::vector<Word> vectors)
    : ring_(std::move(ring)), k_(k), vectors_(std::move(vectors)) {
  if (k_ == 0) throw Error(ErrorKind::invalid_parameters, "Omega needs k >= 1");
  if (vectors_.empty()) throw Error(ErrorKind::invalid_parameters, "Omega is empty");
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
  for (const auto& v : vectors_) {
    if (v.size() != k_) throw Error(ErrorKind::length_mismatch, "Omega vector of wrong length");
    for (Elem a : v) {
      if (!ring_.contains(a)) throw Error(ErrorKind::ring_mismatch, "Omega entry outside the ring");
    }
    if (std::none_of(v.begin(), v.end(), [&](Elem a) { return ring_.is_unit(a); })) {
      throw Error(ErrorKind::not_regular_vector, "Omega vector without a unit coordinate");
    }
  }
  for (const auto& v : vectors_) {
    for (Elem u : ring_.units()) {
      if (!contains(scale_word(ring_, u, v))) {
        throw Error(ErrorKind::not_unit_stable, "Omega is not closed under unit multiplication");
      }
    }
  }
}

OmegaSet OmegaSet::from_columns(const CodeMatrix& h) {
  std::vector<Word> vectors;
  for (std::size_t c = 0; c < h.cols(); ++c) {
    const Word col = h.column(c);
    for (Elem u : h.ring().units()) vectors.push_back(scale_word(h.ring(), u, col));
  }
  return OmegaSet(h.ring(), h.rows(), std::move(vectors));
}

bool OmegaSet::contains(const Word& w) const { return std::binary_search(vectors_.begin(), vectors_.end(), w); }

std::variant<TssConstants, NotTss> is_tss(const OmegaSet& omega, std::uint64_t guard) {
  const Ring& ring = omega.ring();
  const auto& vs = omega.vectors();
  using Counts = std::unordered_map<Word, std::uint64_t, WordHash>;

  Counts pairs;
  for (const auto& a : vs) {
    for (const auto& b : vs) ++pairs[add_words(ring, a, b)];
  }
  Counts triples;
  for (const auto& [p, c] : pairs) {
    for (const auto& a : vs) triples[add_words(ring, p, a)] += c;
  }

  // Additive span of Omega.
  const Word zero(omega.k(), ring.zero());
  std::unordered_set<Word, WordHash> span{zero};
  std::vector<Word> frontier{zero};
  while (!frontier.empty()) {
    const Word v = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& s : vs) {
      Word w = add_words(ring, v, s);
      if (span.insert(w).second) {
        if (span.size() > guard) throw Error(ErrorKind::enumeration_too_large, "span of Omega exceeds the guard");
        frontier.push_back(std::move(w));
      }
    }
  }
  std::vector<Word> ordered(span.begin(), span.end());
  std::sort(ordered.begin(), ordered.end());

  TssConstants out;
  std::optional<std::uint64_t> sigma0;
  for (const auto& h : ordered) {
    if (h == zero) continue;
    const auto it = triples.find(h);
    const std::uint64_t c = it == triples.end() ? 0 : it->second;
    const bool member = omega.contains(h);
    auto& slot = member ? sigma0 : out.sigma1;
    if (!slot) {
      slot = c;
    } else if (*slot != c) {
      return NotTss{h, member ? "representation counts differ inside Omega" : "representation counts differ outside Omega"};
    }
  }
  out.sigma0 = sigma0.value_or(0);
  return out;
}

bool tss_criterion(const Ring& ring, std::uint64_t n, const std::vector<std::uint64_t>& weights) {
  if (weights.size() != 3) throw Error(ErrorKind::invalid_weights, "the criterion needs exactly three weights");
  return weights[0] + weights[1] + weights[2] == 3 * n * ring.gamma();
}

OmegaSet extend_omega(const OmegaSet& omega, std::uint32_t j) {
  const Ring& ring = omega.ring();
  if (j >= ring.m()) throw Error(ErrorKind::index_out_of_range, "need 0 <= j <= m-1");
  std::vector<Word> out;
  for (const auto& a : omega.vectors()) {
    for (Elem b : ring.ideal_elements(j)) {
      Word w = a;
      w.push_back(b);
      out.push_back(std::move(w));
    }
  }
  return OmegaSet(ring, omega.k() + 1, std::move(out));
}

CodeMatrix code_from_omega(const OmegaSet& omega) {
  const Ring& ring = omega.ring();
  std::set<Word> reps;
  for (const auto& v : omega.vectors()) {
    Word best = v;
    for (Elem u : ring.units()) best = std::min(best, scale_word(ring, u, v));
    reps.insert(std::move(best));
  }
  return CodeMatrix::from_columns(ring, omega.k(), std::vector<Word>(reps.begin(), reps.end()));
}

PredictedSrg predict_coset_srg(const Ring& ring, std::uint64_t n, std::uint64_t card, std::uint64_t w1,
                               std::uint64_t w2) {
  if (w1 == w2) throw Error(ErrorKind::invalid_weights, "the two weights must differ");
  const Rational g(ring.gamma());
  const Rational o1 = Rational(w1) / g, o2 = Rational(w2) / g;
  const Rational nn(n), cc(card);
  PredictedSrg out;
  out.N = cc;
  out.K = ((nn - o2) * cc + o2) / (o1 - o2);
  const Rational r1 = 1 - o1 / nn, r2 = 1 - o2 / nn;
  out.lambda = (nn * out.K * (1 - r1 * r1) + o2 * (1 - out.K)) / (o1 - o2);
  out.mu = (nn * out.K * (1 - r1 * r2) - o2 * out.K) / (o1 - o2);
  return out;
}

std::int64_t syndrome_eigenvalue(const Ring& ring, std::uint64_t n, std::uint64_t w) {
  return static_cast<std::int64_t>(ring.unit_count() * n) - static_cast<std::int64_t>(ring.q() * w);
}

}  // namespace chaincodes
