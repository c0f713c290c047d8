#include "closure.hpp"

#include <deque>

namespace comeasure {

ClosureResult locally_finite_closure(const std::vector<std::function<FreeVec(const FreeVec&)>>& ops,
                                     const FreeVec& v, long cap) {
  ClosureResult res;
  SpanBuilder span;
  std::deque<FreeVec> work;
  if (span.insert(v)) work.push_back(v);
  while (!work.empty()) {
    FreeVec cur = std::move(work.front());
    work.pop_front();
    for (const auto& op : ops) {
      FreeVec img = op(cur);
      if (span.insert(img)) {
        if (span.dim() > cap) {
          res.status = ClosureStatus::NotLocallyFinite;
          return res;
        }
        work.push_back(img);
      }
    }
  }
  res.basis = span.basis();
  return res;
}

}  // namespace comeasure
