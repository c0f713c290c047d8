#pragma once

#include <functional>
#include <vector>

#include "freevec.hpp"

namespace comeasure {

enum class ClosureStatus { Finite, NotLocallyFinite };

struct ClosureResult {
  ClosureStatus status = ClosureStatus::Finite;
  std::vector<FreeVec> basis;  // echelonized spanning set when finite
  long dim() const { return long(basis.size()); }
};

// Smallest subspace containing v and stable under every operator, found
// by a worklist sweep. Gives up once the dimension passes the cap.
ClosureResult locally_finite_closure(const std::vector<std::function<FreeVec(const FreeVec&)>>& ops,
                                     const FreeVec& v, long cap);

}  // namespace comeasure
