#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rational.hpp"
#include "verdict.hpp"

namespace comeasure {

// Machine-readable result of one CLI command. JSON output is byte-stable
// for identical inputs: object keys are sorted, rationals canonical,
// empty sections omitted.
struct Report {
  struct Row {
    std::string family;
    std::vector<std::pair<std::string, long>> args;
    Rat value;
  };

  std::string command;
  std::vector<Verdict> verdicts;
  std::vector<Row> rows;
  std::vector<std::pair<std::string, std::string>> notes;
  std::string version = "0.1.0";

  bool passed() const { return all_pass(verdicts); }
  void note(const std::string& name, const std::string& text) { notes.push_back({name, text}); }
  void row(const std::string& family, std::vector<std::pair<std::string, long>> args,
           const Rat& value) {
    rows.push_back({family, std::move(args), value});
  }

  nlohmann::json to_json() const;
  std::string to_text() const;
};

std::string emit_report(const Report& rep, const std::string& format);  // "json" or "text"

}  // namespace comeasure
