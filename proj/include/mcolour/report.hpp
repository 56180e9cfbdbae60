#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mcolour {

// pass/fail are hard verdicts; report means the instance was computed and
// recorded but nothing stronger is claimed for it.
enum class Verdict { pass, fail, report };

const char* to_string(Verdict v);

struct CheckWitness {
  std::int64_t m = 0;
  std::int64_t m_prime = 0;
  std::string subset;  // vertex list, "1 2 3"
};

// Machine-readable certificate for one checked instance. The witnesses
// carry the numbers the verdict was computed from; the narrative spells
// the instantiated inequalities out for humans.
struct CheckReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::report;
  std::vector<CheckWitness> witnesses;
  std::string narrative;
};

nlohmann::json to_json(const CheckReport& report);

// one CSV row: <template-id>,<check>,<verdict>
std::string check_csv_row(const std::string& template_id, const CheckReport& report);

}  // namespace mcolour
