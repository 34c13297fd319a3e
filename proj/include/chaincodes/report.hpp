#pragma once

#include <json.hpp>

#include "chaincodes/code.hpp"
#include "chaincodes/gray.hpp"
#include "chaincodes/graphs.hpp"
#include "chaincodes/minimality.hpp"

namespace chaincodes {

using Json = nlohmann::json;

Json distribution_json(const WeightDistribution& dist);

/// Code analysis record; throws EmptyCode for codes without a nonzero codeword.
Json analysis_json(const LinearCode& code);
Json gray_json(const LinearCode& code, const GrayImage& image);
Json minimality_json(const MinimalityReport& report);

Json surd_json(const QuadraticSurd& value);
/// Summary of verify_srg, plus the complete multipartite type and spectrum for small graphs.
Json graph_json(const Graph& g, bool swrg);
Json tss_json(const OmegaSet& omega);

}  // namespace chaincodes
