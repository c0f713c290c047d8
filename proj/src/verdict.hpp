#pragma once

#include <string>
#include <vector>

namespace comeasure {

// Outcome of one structural law check. On failure the witness pins down the
// first probe where the two sides disagreed.
struct Verdict {
  bool pass = true;
  std::string law;      // which identity was probed
  std::string witness;  // empty on success

  static Verdict ok(std::string law_name) { return {true, std::move(law_name), ""}; }
  static Verdict fail(std::string law_name, std::string w) {
    return {false, std::move(law_name), std::move(w)};
  }
};

// All checks passed iff every entry passed.
inline bool all_pass(const std::vector<Verdict>& vs) {
  for (const auto& v : vs)
    if (!v.pass) return false;
  return true;
}

}  // namespace comeasure
