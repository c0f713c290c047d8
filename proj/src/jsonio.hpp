#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "algebra.hpp"
#include "coalgebra.hpp"
#include "connection.hpp"
#include "group.hpp"
#include "liealg.hpp"

namespace comeasure {

struct JsonFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One loaded structure file. kind selects which pointer is set; a gmodule
// also keeps its group alive, a comodule its coalgebra.
struct Structure {
  std::string kind;
  std::shared_ptr<Coalgebra> coalgebra;
  std::shared_ptr<Comodule> comodule;
  std::shared_ptr<Algebra> algebra;
  std::shared_ptr<FiniteGroup> group;
  std::shared_ptr<GModule> gmodule;
  std::shared_ptr<KoszulData> koszul;
  std::shared_ptr<LieAlgebraFD> lie;
};

// Rationals travel as [numerator, denominator] with a positive
// denominator; values outside int64 use decimal strings.
nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

Structure load_structure(const nlohmann::json& j);
Structure load_structure_text(const std::string& text);
Structure load_structure_path(const std::string& path);
nlohmann::json save_structure(const Structure& s);

}  // namespace comeasure
