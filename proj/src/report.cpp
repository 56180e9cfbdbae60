#include "mcolour/report.hpp"

namespace mcolour {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::report:
      return "report";
  }
  return "?";
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const CheckWitness& w : report.witnesses)
    witnesses.push_back({{"m", w.m}, {"m_prime", w.m_prime}, {"subset", w.subset}});
  return {{"check", report.check},
          {"params", report.params},
          {"verdict", to_string(report.verdict)},
          {"witnesses", witnesses},
          {"narrative", report.narrative}};
}

std::string check_csv_row(const std::string& template_id, const CheckReport& report) {
  return template_id + "," + report.check + "," + to_string(report.verdict) + "\n";
}

}  // namespace mcolour
