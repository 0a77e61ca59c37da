#include "siegel/report.hpp"

#include <sstream>

namespace siegel {

namespace {

nlohmann::json exact(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

}  // namespace

nlohmann::json to_json(const TraceReport& r) {
  nlohmann::json j;
  j["k1"] = r.weight.k1;
  j["k2"] = r.weight.k2;
  j["r1"] = r.weight.r1();
  j["r2"] = r.weight.r2();
  j["l"] = r.weight.local_system().l;
  j["m"] = r.weight.local_system().m;
  j["p"] = r.p;
  j["traceA2"] = exact(r.trace_a2);
  j["jacobianTerm"] = r.jacobian_term.get_str();
  j["productTerm"] = r.product_term.get_str();
  j["secondRow"] = exact(r.second_row);
  j["endoscopicTerm"] = exact(r.endoscopic_term);
  j["eisensteinTerm"] = exact(r.eisenstein_term);
  j["fourTimesTrace"] = exact(r.four_times_trace);
  j["normalizationFactor"] = r.normalization;
  j["divisible"] = r.divisible;
  j["heckeTrace"] = r.hecke_trace ? exact(*r.hecke_trace) : nlohmann::json(nullptr);
  j["checksPassed"] = r.checks_passed();
  j["provenance"] = nlohmann::json::object();
  for (const auto& [key, value] : r.provenance) j["provenance"][key] = value;
  return j;
}

std::string csv_header() { return "k1,k2,p,traceA2,secondRow,endoTerm,fourTimesTrace,heckeTrace,checksPassed"; }

std::string csv_row(const TraceReport& r) {
  std::ostringstream s;
  s << r.weight.k1 << ',' << r.weight.k2 << ',' << r.p << ',' << r.trace_a2 << ',' << r.second_row << ','
    << r.endoscopic_term << ',' << r.four_times_trace << ',' << (r.hecke_trace ? r.hecke_trace->get_str() : "") << ','
    << (r.checks_passed() ? "true" : "false");
  return s.str();
}

std::string to_csv(const std::vector<TraceReport>& reports) {
  std::string out = csv_header() + "\n";
  for (const auto& r : reports) out += csv_row(r) + "\n";
  return out;
}

std::string to_json_array(const std::vector<TraceReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace siegel
