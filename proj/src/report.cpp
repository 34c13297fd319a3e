#include "chaincodes/report.hpp"

#include "chaincodes/error.hpp"

namespace chaincodes {

Json distribution_json(const WeightDistribution& dist) {
  Json out = Json::array();
  for (const auto& [w, c] : dist.counts()) out.push_back({w, c});
  return out;
}

Json analysis_json(const LinearCode& code) {
  const Ring& ring = code.ring();
  const auto dist = hom_weight_distribution(code);
  const auto type = code_type(code);
  Json out;
  out["ring"] = ring.descriptor();
  out["n"] = code.length();
  out["type"] = type.k;
  out["qdim"] = code.qdim();
  out["cardinality"] = code.cardinality();
  out["weight_distribution"] = distribution_json(dist);
  out["min_distance"] = dist.min_nonzero();
  const bool regular = is_regular(code.generator());
  const bool projective = is_projective(code.generator());
  out["regular"] = regular;
  out["projective"] = projective;
  out["plotkin_bound"] = plotkin_bound(ring, code.length(), code.cardinality());
  out["plotkin_optimal"] = is_plotkin_optimal(code);
  try {
    const auto ch = characterize_two_weight(ring, code.length(), type, dist, regular, projective);
    out["theorem_4_7"] = {{"t", ch.t}, {"table", distribution_json(ch.table)}};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::not_applicable) {
      out["theorem_4_7"] = nullptr;
    } else {
      out["theorem_4_7"] = {{"violation", e.what()}};
    }
  }
  return out;
}

Json gray_json(const LinearCode& code, const GrayImage& image) {
  const Ring& ring = code.ring();
  Json out;
  out["length"] = code.length() * ring.q_pow(ring.m() - 1);
  out["size"] = image.vectors.size();
  out["hamming_distribution"] = distribution_json(image.hamming_distribution);
  out["injective"] = image.injective;
  out["linear"] = image.is_linear;
  out["su1"] = nullptr;
  try {
    const auto ch = characterize_two_weight(code);
    if (ch.t < code.qdim()) {
      const auto su1 = su1_parameters(ring.q(), code.qdim(), code.qdim() - ch.t);
      out["su1"] = {{"n", su1.n}, {"k", su1.k}, {"w1", su1.w1}, {"w2", su1.w2},
                    {"a1", su1.a1}, {"a2", su1.a2}, {"match", compare_su1(code)}};
    }
  } catch (const Error&) {
    // Not a characterized two-weight code: no SU1 comparison.
  }
  return out;
}

Json minimality_json(const MinimalityReport& report) {
  return {{"total", report.total},
          {"minimal", report.minimal},
          {"all_minimal", report.all_minimal},
          {"ab_condition", report.ab_condition},
          {"linear", report.linear}};
}

Json surd_json(const QuadraticSurd& value) {
  if (value.coefficient == 0 || value.radicand == 1) {
    const Rational r = value.rational + (value.radicand == 1 ? value.coefficient : Rational(0));
    if (boost::multiprecision::denominator(r) == 1) {
      return boost::multiprecision::numerator(r).convert_to<std::int64_t>();
    }
  }
  return value.str();
}

Json graph_json(const Graph& g, bool swrg) {
  Json out;
  out["N"] = g.size();
  const auto srg = verify_srg(g);
  if (const auto* p = std::get_if<SrgParams>(&srg)) {
    out["srg"] = true;
    out["K"] = p->K;
    out["lambda"] = p->lambda ? Json(*p->lambda) : Json(nullptr);
    out["mu"] = p->mu ? Json(*p->mu) : Json(nullptr);
    Json eig = Json::array();
    for (const auto& r : p->restricted_eigenvalues) eig.push_back(surd_json(r));
    out["restricted_eigenvalues"] = eig;
  } else {
    const auto& bad = std::get<NotSrg>(srg);
    out["srg"] = false;
    out["K"] = g.size() ? Json(g.degree(0)) : Json(nullptr);
    out["lambda"] = nullptr;
    out["mu"] = nullptr;
    out["restricted_eigenvalues"] = Json::array();
    out["not_srg"] = {{"reason", bad.reason}};
    if (bad.pair) out["not_srg"]["pair"] = {bad.pair->first, bad.pair->second};
  }
  const auto multipartite = complete_multipartite_type(g);
  out["complete_multipartite"] =
      multipartite ? Json{multipartite->first, multipartite->second} : Json(nullptr);
  if (g.size() <= 256) {
    Json spec = Json::array();
    for (const auto& [value, mult] : spectrum(g)) spec.push_back({value, mult});
    out["spectrum"] = spec;
  }
  if (swrg) {
    const auto walks = verify_swrg(g, 3);
    if (const auto* w = std::get_if<SwrgParams>(&walks)) {
      out["swrg3"] = {{"lambda", w->lambda}, {"mu", w->mu ? Json(*w->mu) : Json(nullptr)}, {"nu", w->nu}};
    } else {
      const auto& bad = std::get<NotSwrg>(walks);
      out["swrg3"] = nullptr;
      out["not_swrg3"] = {{"reason", bad.reason}, {"pair", {bad.pair.first, bad.pair.second}}};
    }
  }
  return out;
}

Json tss_json(const OmegaSet& omega) {
  Json out;
  out["k"] = omega.k();
  out["size"] = omega.size();
  const auto result = is_tss(omega);
  if (const auto* c = std::get_if<TssConstants>(&result)) {
    out["tss"] = true;
    out["sigma0"] = c->sigma0;
    out["sigma1"] = c->sigma1 ? Json(*c->sigma1) : Json(nullptr);
  } else {
    const auto& bad = std::get<NotTss>(result);
    out["tss"] = false;
    out["sigma0"] = nullptr;
    out["sigma1"] = nullptr;
    std::string h;
    for (Elem a : bad.h) h += (h.empty() ? "" : " ") + omega.ring().token(a);
    out["violation"] = {{"h", h}, {"reason", bad.reason}};
  }
  const CodeMatrix h = code_from_omega(omega);
  const LinearCode dual = LinearCode::span(h);
  const auto dist = hom_weight_distribution(dual);
  out["columns"] = h.cols();
  out["span_distribution"] = distribution_json(dist);
  const auto weights = dist.nonzero_weights();
  out["criterion"] = weights.size() == 3 ? Json(tss_criterion(omega.ring(), h.cols(), weights)) : Json(nullptr);
  return out;
}

}  // namespace chaincodes
