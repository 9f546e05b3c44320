#include "lcong/report.hpp"

#include <sstream>

namespace lcong {

namespace {

nlohmann::json rational_json(const mpq_class& x) { return {{"factored", factored(x)}, {"decimal", x.get_str()}}; }

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
  return out;
}

}  // namespace

nlohmann::json padic_json(const PadicNumber& x) {
  nlohmann::json j = {{"p", x.p()}, {"residue", x.residue_string()}, {"expansion", x.expansion(4)}};
  if (x.is_exact_zero()) {
    j["zero"] = "exact";
  } else if (x.is_zero()) {
    j["zero"] = "inexact";
    j["abs_prec"] = x.valuation();
  } else {
    j["valuation"] = x.valuation();
    j["unit"] = x.unit().get_str();
    j["prec"] = x.prec();
  }
  return j;
}

PadicNumber padic_from_json(const nlohmann::json& j) {
  long p = j.at("p").get<long>();
  if (j.contains("zero")) {
    if (j["zero"] == "exact") return PadicNumber::exact_zero(p);
    return PadicNumber::zero_mod(p, j.at("abs_prec").get<long>());
  }
  return PadicNumber::from_parts(p, j.at("valuation").get<long>(), mpz_class(j.at("unit").get<std::string>()),
                                 j.at("prec").get<int>());
}

nlohmann::json row_json(const RowResult& r, const FixtureComparison& fx) {
  nlohmann::json j;
  j["form"] = r.form_id;
  j["m"] = r.m;
  j["n"] = r.n;
  nlohmann::json ls = {{"decimal", r.lstar_rho.numeric.str(30)}, {"error", r.lstar_rho.error.str(3)}};
  if (r.lstar_rho.exact) ls["factored"] = factored(*r.lstar_rho.exact);
  if (!r.lstar_rho.note.empty()) ls["note"] = r.lstar_rho.note;
  j["lstar_rho"] = ls;
  if (r.lstar_sigma) j["lstar_sigma"] = rational_json(*r.lstar_sigma);
  j["p3_rho"] = rational_json(r.p3_rho);
  j["p3_sigma"] = rational_json(r.p3_sigma);
  j["conductor_rho"] = {{"factored", factored(r.conductor_rho)}, {"decimal", r.conductor_rho.get_str()}};
  j["l_sigma"] = padic_json(r.l_sigma.value);
  j["l_rho"] = padic_json(r.l_rho.value);
  j["congruence"] = {{"l_sigma", r.congruence.residue_sigma},
                     {"l_rho", r.congruence.residue_rho},
                     {"mod_p", to_string(r.congruence.mod_p)},
                     {"mod_p2", to_string(r.congruence.mod_p2)}};
  j["central_vanishing"] = r.congruence.central_vanishing;
  j["root_number"] = {{"formula", r.w_formula}};
  if (r.w_solved) j["root_number"]["solved"] = r.w_solved->raw;
  j["h2_override"] = r.h2_override;
  if (fx.has_fixture) j["table_match"] = fx.ok();
  if (!fx.mismatches.empty()) j["mismatches"] = fx.mismatches;
  return j;
}

CongruenceReport congruence_from_json(const nlohmann::json& j) {
  return compare_congruence(j.at("form").get<std::string>(), j.at("m").get<long>(), j.at("n").get<int>(),
                            padic_from_json(j.at("l_sigma")), padic_from_json(j.at("l_rho")),
                            j.at("central_vanishing").get<bool>());
}

std::string row_tsv_header() {
  return "form\tm\tn\tL*(rho)\tP3(rho)\tP3(sigma)\tN(f,rho)\tL3(sigma)\tL3(rho)\tmod_p\tmod_p2\tw\ttable";
}

std::string row_tsv(const RowResult& r, const FixtureComparison& fx) {
  std::ostringstream os;
  os << r.form_id << '\t' << r.m << '\t' << r.n << '\t'
     << (r.lstar_rho.exact ? factored(*r.lstar_rho.exact) : r.lstar_rho.numeric.str(20) + "(numeric)") << '\t'
     << factored(r.p3_rho) << '\t' << factored(r.p3_sigma) << '\t' << factored(r.conductor_rho) << '\t'
     << r.l_sigma.value.residue_string() << '\t' << r.l_rho.value.residue_string() << '\t'
     << to_string(r.congruence.mod_p) << '\t' << to_string(r.congruence.mod_p2) << '\t' << r.w_formula << '\t'
     << (!fx.has_fixture ? "-" : fx.ok() ? "match" : "MISMATCH " + join(fx.mismatches, "; "));
  return os.str();
}

}  // namespace lcong
