#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eisencoh/error.hpp"
#include "eisencoh/sweep.hpp"
#include "eisencoh/verifier.hpp"

namespace eisencoh {

using Json = nlohmann::ordered_json;

inline Json toJson(const HodgeSet& h) {
  Json pairs = Json::array();
  for (const auto& [pq, mult] : h.pairs()) pairs.push_back({{"p", pq.first}, {"q", pq.second}, {"mult", mult}});
  return {{"weight", h.weight()}, {"pairs", std::move(pairs)}};
}

inline Json toJson(const RatioStatement& s) {
  return {{"m", s.m.str()},
          {"m0", s.m0},
          {"epsilon_m", s.epsilon_m},
          {"epsilon_sigma_prime", "symbolic"},
          {"claim", s.claim()}};
}

namespace detail {

inline Json halfInts(const std::vector<HalfInt>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(x.str());
  return out;
}

}  // namespace detail

inline Json toJson(const LemmaReport& r) {
  const auto& inst = r.instance;
  const auto& d = r.derived;
  Json j;
  j["block"] = inst.block.str();
  j["lambda"] = inst.lambda.str();
  j["lambda_prime"] = inst.lambda_prime.str();
  j["mu"] = inst.mu().str();
  j["a"] = inst.params.a;
  j["d"] = d.d.str();
  j["a_prime"] = inst.params_prime.a;
  j["d_prime"] = d.d_prime.str();
  j["w"] = d.w;
  j["w_prime"] = d.w_prime;
  j["hodge"] = toJson(d.hodge);
  j["middle_hodge"] = d.middle_hodge;
  j["verdict"] = std::string(to_string(r.verdict));
  j["closed_form"] = r.closed_form;
  j["brute_force"] = r.brute_force;
  if (r.witness)
    j["witness"] = {{"w", r.witness->w.str()}, {"length", r.witness->w.length()}, {"mu_tilde", r.witness->mu_tilde.str()}};
  else
    j["witness"] = nullptr;
  j["witness_count"] = r.witness_count;
  j["witness_valid"] = r.witness_valid;
  j["a_mu"] = d.a_mu.str();
  j["nu0"] = d.nu0.value.str();
  j["nu0_integral"] = d.nu0.integral;
  j["nu0_automorphic"] = d.nu0.automorphic_image.str();
  if (d.critical) {
    j["p_mu"] = d.critical->p_mu;
    j["interval"] = {{"lower", d.interval->lower.str()}, {"upper", d.interval->upper.str()}, {"count", d.interval->count()}};
    j["critical_coh"] = d.crit_coh;
    j["critical_automorphic"] = detail::halfInts(d.crit_aut);
    j["automorphic_center"] = automorphicCenter(*d.critical).str();
    j["symmetric_about_half"] = d.symmetric_about_half;
    j["count_formulas_ok"] = d.count_formulas_ok;
    j["nu0_pair_ok"] = d.nu0_pair_ok ? Json(*d.nu0_pair_ok) : Json(nullptr);
    Json ratios = Json::array();
    for (const auto& s : d.ratios) ratios.push_back(toJson(s));
    j["ratio_statements"] = std::move(ratios);
  }
  return j;
}

inline Json toJson(const VerdictCounts& c) {
  return {{"agree_true", c.agree_true},
          {"agree_false", c.agree_false},
          {"discrepancy", c.discrepancy},
          {"hypothesis_fail", c.hypothesis_fail}};
}

inline Json toJson(const OrbitResult& o) {
  return {{"block", o.block.str()},
          {"shape", o.shape.str()},
          {"shape_prime", o.shape_prime.str()},
          {"hypothesis", o.hypothesis},
          {"expected_true", o.expected_true},
          {"twist_min", o.twists.empty() ? 0 : o.twists.front()},
          {"twist_max", o.twists.empty() ? 0 : o.twists.back()},
          {"agree_true_twists", o.agree_true_twists},
          {"coverage", std::string(to_string(o.coverage))},
          {"note", o.note}};
}

inline std::string verbosityName(Verbosity v) { return v == Verbosity::Full ? "full" : "summary"; }

/// Aggregate report. `instances` and `orbits` appear only at full
/// verbosity; discrepancies and failed orbits are always listed.
inline Json toJson(const SweepReport& r) {
  Json j;
  Json blocks = Json::array();
  for (const auto& b : r.config.block_pairs) blocks.push_back(b.str());
  j["config"] = {{"blocks", std::move(blocks)},
                 {"entry_bound", r.config.entry_bound},
                 {"twist_range", r.config.twist_range.str()},
                 {"verbosity", verbosityName(r.config.verbosity)}};
  j["counts"] = toJson(r.counts);
  Json byBlock = Json::object();
  for (const auto& b : r.config.block_pairs) {
    auto it = r.counts_by_block.find(b.str());
    byBlock[b.str()] = toJson(it == r.counts_by_block.end() ? VerdictCounts{} : it->second);
  }
  j["counts_by_block"] = std::move(byBlock);
  const auto& c = r.checks;
  j["checks"] = {{"count_formula_failures", c.count_formula_failures},
                 {"nu0_failures", c.nu0_failures},
                 {"invalid_witnesses", c.invalid_witnesses},
                 {"shift_failures", c.shift_failures},
                 {"coverage_verified", c.coverage_verified},
                 {"coverage_failures", c.coverage_failures},
                 {"coverage_not_applicable", c.coverage_not_applicable},
                 {"asymmetric_automorphic", c.asymmetric_automorphic},
                 {"max_witness_count", c.max_witness_count}};
  Json discrepancies = Json::array();
  for (const auto& inst : r.instances)
    if (inst.verdict == Verdict::Discrepancy) discrepancies.push_back(toJson(inst));
  j["discrepancies"] = std::move(discrepancies);
  Json failedOrbits = Json::array();
  for (const auto& o : r.orbits)
    if (o.coverage == Coverage::Failed) failedOrbits.push_back(toJson(o));
  j["failed_orbits"] = std::move(failedOrbits);
  if (r.config.verbosity == Verbosity::Full) {
    Json orbits = Json::array();
    for (const auto& o : r.orbits) orbits.push_back(toJson(o));
    j["orbits"] = std::move(orbits);
    Json instances = Json::array();
    for (const auto& inst : r.instances) instances.push_back(toJson(inst));
    j["instances"] = std::move(instances);
  }
  return j;
}

/// Machine-readable counterexample dump: config plus every discrepancy.
inline Json counterexamplesJson(const SweepReport& r) {
  Json j = toJson(r);
  Json out;
  out["config"] = j["config"];
  out["discrepancies"] = j["discrepancies"];
  return out;
}

namespace detail {

inline void requireReport(const Json& j) {
  if (!j.is_object() || !j.contains("config") || !j.contains("counts") || !j.contains("discrepancies"))
    throw Error(ErrorCode::ParseError, "not a sweep report (missing config/counts/discrepancies)");
}

inline std::string csvField(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline std::string quoted(const std::string& s) { return "\"" + s + "\""; }

inline std::string list(const Json& arr) {
  std::string out = "[";
  bool first = true;
  for (const auto& x : arr) {
    if (!first) out += ",";
    out += csvField(x);
    first = false;
  }
  return out + "]";
}

}  // namespace detail

inline std::string csvHeader() {
  return "block,lambda,lambda_prime,w,w_prime,p_mu,a_mu,interval_lower,interval_upper,closed_form,brute_force,"
         "verdict,nu0,witness_count\n";
}

inline std::string csvRow(const Json& inst) {
  using detail::csvField;
  using detail::quoted;
  std::string row;
  row += csvField(inst["block"]) + ",";
  row += quoted(csvField(inst["lambda"])) + ",";
  row += quoted(csvField(inst["lambda_prime"])) + ",";
  row += csvField(inst["w"]) + "," + csvField(inst["w_prime"]) + ",";
  row += csvField(inst.value("p_mu", Json())) + ",";
  row += csvField(inst["a_mu"]) + ",";
  const Json interval = inst.value("interval", Json::object());
  row += csvField(interval.value("lower", Json())) + "," + csvField(interval.value("upper", Json())) + ",";
  row += csvField(inst["closed_form"]) + "," + csvField(inst["brute_force"]) + ",";
  row += csvField(inst["verdict"]) + "," + csvField(inst["nu0"]) + "," + csvField(inst["witness_count"]);
  return row + "\n";
}

/// One row per instance; summary-verbosity reports only carry their
/// discrepancies, so only those rows can be produced from them.
inline std::string renderCsv(const Json& report) {
  detail::requireReport(report);
  std::string out = csvHeader();
  const Json& rows = report.contains("instances") ? report["instances"] : report["discrepancies"];
  for (const auto& inst : rows) out += csvRow(inst);
  return out;
}

inline std::string renderInstanceText(const Json& inst) {
  std::ostringstream os;
  os << "instance   λ = " << inst["lambda"].get<std::string>() << "  λ′ = " << inst["lambda_prime"].get<std::string>()
     << "  (" << inst["block"].get<std::string>() << ")\n";
  os << "  GL_n      a = " << detail::list(inst["a"]) << "  d = " << inst["d"].get<std::string>()
     << "  w = " << inst["w"] << "\n";
  os << "  GL_n′     a′ = " << detail::list(inst["a_prime"]) << "  d′ = " << inst["d_prime"].get<std::string>()
     << "  w′ = " << inst["w_prime"] << "\n";
  os << "  μ = λ+λ′  " << inst["mu"].get<std::string>() << "\n";
  os << "  Hodge pairs (weight " << inst["hodge"]["weight"] << "):";
  for (const auto& p : inst["hodge"]["pairs"]) {
    os << " (" << p["p"] << "," << p["q"] << ")";
    if (p["mult"].get<std::int64_t>() != 1) os << "x" << p["mult"];
  }
  os << "\n  middle Hodge number  " << inst["middle_hodge"] << "\n";
  os << "  a(μ) = " << inst["a_mu"].get<std::string>() << "\n";
  if (inst.contains("p_mu")) {
    const auto& iv = inst["interval"];
    os << "  p(μ) = " << inst["p_mu"] << "\n";
    os << "  admissible a(μ) interval  [" << iv["lower"].get<std::string>() << ", " << iv["upper"].get<std::string>()
       << "]  count " << iv["count"] << "\n";
    os << "  critical set (cohomological)  " << detail::list(inst["critical_coh"]) << "\n";
    os << "  critical set (automorphic)    " << detail::list(inst["critical_automorphic"]) << "\n";
    os << "  automorphic centre  " << inst["automorphic_center"].get<std::string>()
       << (inst["symmetric_about_half"].get<bool>() ? "  (symmetric about 1/2)" : "  (not symmetric about 1/2)") << "\n";
  }
  os << "  ν₀ = " << inst["nu0"].get<std::string>() << (inst["nu0_integral"].get<bool>() ? "" : " (not integral)")
     << "  ↦ " << inst["nu0_automorphic"].get<std::string>() << "\n";
  os << "  closed form " << (inst["closed_form"].get<bool>() ? "true" : "false") << ", brute force "
     << (inst["brute_force"].get<bool>() ? "true" : "false") << "\n";
  if (!inst["witness"].is_null())
    os << "  witness  w = " << inst["witness"]["w"].get<std::string>() << " (length " << inst["witness"]["length"]
       << ")  μ̃ = " << inst["witness"]["mu_tilde"].get<std::string>() << "  [" << inst["witness_count"]
       << " total]\n";
  if (inst.contains("ratio_statements"))
    for (const auto& s : inst["ratio_statements"])
      os << "  ratio  m = " << s["m"].get<std::string>() << "  m0 = " << s["m0"] << "  ε_m = "
         << (s["epsilon_m"].get<int>() > 0 ? "+1" : "-1") << "  " << s["claim"].get<std::string>() << "\n";
  os << "  verdict  " << inst["verdict"].get<std::string>() << "\n";
  return os.str();
}

inline std::string renderText(const Json& report) {
  detail::requireReport(report);
  std::ostringstream os;
  const auto& cfg = report["config"];
  os << "sweep  blocks " << detail::list(cfg["blocks"]) << "  bound " << cfg["entry_bound"] << "  twists "
     << cfg["twist_range"].get<std::string>() << "\n";
  const auto& c = report["counts"];
  os << "total  agree_true " << c["agree_true"] << "  agree_false " << c["agree_false"] << "  discrepancy "
     << c["discrepancy"] << "  hypothesis_fail " << c["hypothesis_fail"] << "\n";
  if (report.contains("counts_by_block"))
    for (const auto& [block, bc] : report["counts_by_block"].items())
      os << "  " << block << "  agree_true " << bc["agree_true"] << "  agree_false " << bc["agree_false"]
         << "  discrepancy " << bc["discrepancy"] << "  hypothesis_fail " << bc["hypothesis_fail"] << "\n";
  if (report.contains("checks")) {
    os << "checks";
    for (const auto& [name, value] : report["checks"].items()) os << "  " << name << " " << value;
    os << "\n";
  }
  os << "discrepancies " << report["discrepancies"].size() << "\n";
  for (const auto& inst : report["discrepancies"]) os << renderInstanceText(inst);
  if (report.contains("instances")) {
    os << "instances " << report["instances"].size() << "\n";
    for (const auto& inst : report["instances"])
      os << "  " << inst["lambda"].get<std::string>() << " " << inst["lambda_prime"].get<std::string>() << "  a(μ) "
         << inst["a_mu"].get<std::string>() << "  " << inst["verdict"].get<std::string>() << "\n";
  }
  return os.str();
}

inline std::string render(const Json& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return report.dump(2) + "\n";
    case ReportFormat::Csv: return renderCsv(report);
    case ReportFormat::Text: return renderText(report);
  }
  return {};
}

}  // namespace eisencoh
