#include "conway/report.hpp"

#include "conway/enumerate.hpp"
#include "conway/moves.hpp"

namespace conway {
namespace {

std::string YesNo(bool v) { return v ? "yes" : "no"; }

}  // namespace

nlohmann::json ToJson(const ValidationReport& report) {
  nlohmann::json j;
  j["is_2_design"] = report.is_2_design;
  j["observed_lambda_range"] = {report.observed_lambda_range.first,
                                report.observed_lambda_range.second};
  j["is_simple"] = report.is_simple;
  j["is_supersimple"] = report.is_supersimple;
  j["first_violation"] = report.first_violation ? nlohmann::json(*report.first_violation)
                                                : nlohmann::json(nullptr);
  return j;
}

nlohmann::json ToJson(const Signature& sig) {
  nlohmann::json j;
  j["degree"] = sig.degree;
  j["order"] = sig.order.str();
  j["transitive"] = sig.transitive;
  j["primitive"] = sig.primitive ? nlohmann::json(*sig.primitive) : nlohmann::json(nullptr);
  j["generously_transitive"] = sig.generously_transitive;
  j["contains_alt"] = sig.contains_alt;
  j["all_even"] = sig.all_even;
  return j;
}

nlohmann::json ToJson(const ConsistencyReport& report) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : report.claims) {
    claims.push_back({{"id", c.id}, {"status", ToString(c.status)}, {"witness", c.witness}});
  }
  return claims;
}

nlohmann::json ToJson(const CriterionResult& result) {
  nlohmann::json j;
  j["case"] = ToString(result.which);
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : result.witnesses) witnesses.push_back(w.ToString());
  j["witnesses"] = witnesses;
  if (result.shared_transposition) {
    j["shared_transposition"] = "(" + std::to_string(result.shared_transposition->first + 1) +
                                "," + std::to_string(result.shared_transposition->second + 1) +
                                ")";
  }
  return j;
}

nlohmann::json HoleStabilizerReport(const Design& d, Point hole, const Group& group) {
  Signature sig = ComputeSignature(group);
  nlohmann::json j;
  j["design_hash"] = d.n() <= kCanonicalSizeCap ? CanonicalHash(d) : std::string();
  j["n"] = d.n();
  j["lambda"] = d.lambda();
  j["infinity"] = hole + 1;
  nlohmann::json point_map = nlohmann::json::array();
  for (std::size_t i = 0; i + 1 < d.n(); ++i) point_map.push_back(HoleIndexToPoint(static_cast<Point>(i), hole) + 1);
  j["point_map"] = point_map;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : group.generators()) gens.push_back(g.ToString());
  j["generators"] = gens;
  j["signature"] = ToJson(sig);
  j["recognized"] = Recognize(sig);
  nlohmann::json checks;
  checks["degree_bounds"] = ToJson(CheckDegreeBounds(d.n(), d.lambda(), sig));
  if (d.lambda() == 3) checks["lambda3_classification"] = ToJson(CheckLambda3Classification(d.n(), sig));
  j["checks"] = checks;
  return j;
}

std::string FormatSignature(const Signature& sig) {
  std::string out;
  out += "degree               " + std::to_string(sig.degree) + "\n";
  out += "order                " + sig.order.str() + "\n";
  out += "transitive           " + YesNo(sig.transitive) + "\n";
  out += "primitive            " + (sig.primitive ? YesNo(*sig.primitive) : std::string("n/a")) + "\n";
  out += "generously transitive " + YesNo(sig.generously_transitive) + "\n";
  out += "contains Alt         " + YesNo(sig.contains_alt) + "\n";
  out += "all generators even  " + YesNo(sig.all_even) + "\n";
  return out;
}

}  // namespace conway
