#include "chaincodes/construct.hpp"

#include <numeric>
#include <string>

#include "chaincodes/error.hpp"

namespace chaincodes {

void IdealBlockProfile::validate(const Ring& ring) const {
  if (sizes.size() != ring.m()) {
    throw Error(ErrorKind::invalid_parameters, "block profile needs m = " + std::to_string(ring.m()) + " entries");
  }
  if (rows() == 0) throw Error(ErrorKind::invalid_parameters, "block profile is all zero");
}

std::uint32_t IdealBlockProfile::rows() const { return std::accumulate(sizes.begin(), sizes.end(), 0u); }

std::uint32_t IdealBlockProfile::qdim(const Ring& ring) const {
  std::uint32_t k = 0;
  for (std::uint32_t j = 0; j < sizes.size(); ++j) k += (ring.m() - j) * sizes[j];
  return k;
}

CodeMatrix one_weight_generator(const Ring& ring, const IdealBlockProfile& profile, std::uint64_t guard) {
  profile.validate(ring);
  guarded_power(ring.q(), profile.qdim(ring), guard, "one-weight generator width");
  const std::uint32_t rows = profile.rows();

  // Column entries: row r draws from the ideal of its block.
  std::vector<std::vector<Elem>> choices;
  for (std::uint32_t j = 0; j < profile.sizes.size(); ++j) {
    for (std::uint32_t b = 0; b < profile.sizes[j]; ++b) choices.push_back(ring.ideal_elements(j));
  }

  std::vector<Word> columns;
  Word col(rows);
  std::vector<std::size_t> pos(rows, 0);
  while (true) {
    for (std::uint32_t r = 0; r < rows; ++r) col[r] = choices[r][pos[r]];
    if (std::any_of(col.begin(), col.end(), [&](Elem a) { return a != ring.zero(); })) columns.push_back(col);
    std::size_t i = rows;
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) return CodeMatrix::from_columns(ring, rows, columns);
    }
  }
}

CodeMatrix extend_generator(const CodeMatrix& gen, std::uint32_t m0, std::uint64_t guard) {
  const Ring& ring = gen.ring();
  if (m0 >= ring.m()) throw Error(ErrorKind::index_out_of_range, "need 0 <= m0 <= m-1");
  const auto scalars = ring.ideal_elements(m0);
  const std::size_t n = gen.cols();
  if (scalars.size() * n > guard) {
    throw Error(ErrorKind::enumeration_too_large, "extended width exceeds the enumeration guard");
  }
  CodeMatrix out(ring, gen.rows() + 1, scalars.size() * n);
  for (std::size_t b = 0; b < scalars.size(); ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r < gen.rows(); ++r) out.set(r, b * n + c, gen.at(r, c));
      out.set(gen.rows(), b * n + c, scalars[b]);
    }
  }
  return out;
}

WeightDistribution predict_extension_distribution(const Ring& ring, const WeightDistribution& dist, std::uint64_t n,
                                                  std::uint32_t m0) {
  if (m0 >= ring.m()) throw Error(ErrorKind::index_out_of_range, "need 0 <= m0 <= m-1");
  const std::uint64_t factor = ring.q_pow(ring.m() - m0);
  WeightDistribution out;
  for (const auto& [w, c] : dist.counts()) out.add(w * factor, c);
  // Every codeword with a nonzero multiple of the new row weighs factor * gamma * n.
  out.add(factor * ring.gamma() * n, (factor - 1) * dist.total());
  return out;
}

CodeMatrix b_matrix(const Ring& ring, std::uint32_t k, std::uint64_t guard) {
  if (k < 1) throw Error(ErrorKind::invalid_parameters, "b_matrix needs k >= 1");
  guarded_power(ring.q_pow(ring.m() - 1), k, guard, "B_k width");
  std::vector<Word> columns;
  for_each_vector(ring.ideal_elements(1), k, [&](const Word& v) { columns.push_back(v); });
  return CodeMatrix::from_columns(ring, k, columns);
}

CodeMatrix y_matrix(const Ring& ring, std::uint32_t k, std::uint64_t guard) {
  if (k < 1) throw Error(ErrorKind::invalid_parameters, "y_matrix needs k >= 1");
  CodeMatrix y(ring, 1, 1, {ring.one()});
  const auto scalars = ring.elements();
  for (std::uint32_t level = 2; level <= k; ++level) {
    const CodeMatrix b = b_matrix(ring, level - 1, guard);
    const std::size_t n = y.cols();
    const std::size_t width = scalars.size() * n + b.cols();
    if (width > guard) throw Error(ErrorKind::enumeration_too_large, "Y_k width exceeds the enumeration guard");
    CodeMatrix next(ring, level, width);
    for (std::size_t s = 0; s < scalars.size(); ++s) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r + 1 < level; ++r) next.set(r, s * n + c, y.at(r, c));
        next.set(level - 1, s * n + c, scalars[s]);
      }
    }
    for (std::size_t c = 0; c < b.cols(); ++c) {
      for (std::size_t r = 0; r + 1 < level; ++r) next.set(r, scalars.size() * n + c, b.at(r, c));
      next.set(level - 1, scalars.size() * n + c, ring.one());
    }
    y = std::move(next);
  }
  return y;
}

CodeMatrix optimal_two_weight_code(const Ring& ring, const CodeTypeProfile& profile, std::uint32_t t,
                                   std::uint64_t guard) {
  if (profile.k.size() != ring.m()) {
    throw Error(ErrorKind::invalid_parameters, "type profile needs m = " + std::to_string(ring.m()) + " entries");
  }
  if (t < 1 || t > profile.k[0]) throw Error(ErrorKind::invalid_t, "need 1 <= t <= k_0");
  CodeMatrix gen = y_matrix(ring, t, guard);
  for (std::uint32_t i = t; i < profile.k[0]; ++i) gen = extend_generator(gen, 0, guard);
  for (std::uint32_t level = 1; level < ring.m(); ++level) {
    for (std::uint32_t i = 0; i < profile.k[level]; ++i) gen = extend_generator(gen, level, guard);
  }
  return gen;
}

}  // namespace chaincodes
