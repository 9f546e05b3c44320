// TSV and JSON rendering of row results; verdicts can be recomputed from the JSON fields.
#pragma once

#include <string>

#include "json.hpp"
#include "lcong/pipeline.hpp"

namespace lcong {

nlohmann::json padic_json(const PadicNumber& x);
PadicNumber padic_from_json(const nlohmann::json& j);
nlohmann::json row_json(const RowResult& r, const FixtureComparison& fx);
// Verdicts recomputed from the "l_sigma"/"l_rho"/"central_vanishing" fields of row_json.
CongruenceReport congruence_from_json(const nlohmann::json& j);

std::string row_tsv_header();
std::string row_tsv(const RowResult& r, const FixtureComparison& fx);

}  // namespace lcong
