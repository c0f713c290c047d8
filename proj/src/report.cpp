#include "report.hpp"

#include <sstream>
#include <stdexcept>

#include "jsonio.hpp"

namespace comeasure {

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  if (!command.empty()) j["command"] = command;
  j["verdicts"] = nlohmann::json::array();
  for (const auto& v : verdicts) {
    nlohmann::json e;
    e["law"] = v.law;
    e["pass"] = v.pass;
    if (!v.pass) e["witness"] = v.witness;
    j["verdicts"].push_back(e);
  }
  if (!rows.empty()) {
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json e;
      e["family"] = r.family;
      nlohmann::json args;
      for (const auto& [k, val] : r.args) args[k] = val;
      e["args"] = args;
      e["value"] = rat_to_json(r.value);
      j["rows"].push_back(e);
    }
  }
  if (!notes.empty()) {
    j["notes"] = nlohmann::json::array();
    for (const auto& [name, text] : notes) {
      nlohmann::json e;
      e["name"] = name;
      e["text"] = text;
      j["notes"].push_back(e);
    }
  }
  j["version"] = version;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (!command.empty()) os << "command: " << command << "\n";
  for (const auto& v : verdicts) {
    os << (v.pass ? "PASS  " : "FAIL  ") << v.law;
    if (!v.pass) os << "  witness " << v.witness;
    os << "\n";
  }
  for (const auto& r : rows) {
    os << r.family;
    for (const auto& [k, val] : r.args) os << "  " << k << "=" << val;
    os << "  value=" << rat_str(r.value) << "\n";
  }
  for (const auto& [name, text] : notes) os << "note [" << name << "]: " << text << "\n";
  os << "version: " << version << "\n";
  if (!verdicts.empty()) os << (passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

std::string emit_report(const Report& rep, const std::string& format) {
  if (format == "json") return rep.to_json().dump(2) + "\n";
  if (format == "text") return rep.to_text();
  throw std::invalid_argument("unknown report format \"" + format + "\"");
}

}  // namespace comeasure
