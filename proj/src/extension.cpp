#include "extension.hpp"

namespace comeasure {

BandOperator ExtensionScheme::section(int v) const {
  BandOperator b = base_section(v);
  auto it = perturbation.find(v);
  if (it != perturbation.end()) b = b + it->second;
  return b;
}

BandOperator ExtensionScheme::bracket_image(int v, int w) const {
  BandOperator out;
  for (const auto& [label, coeff] : bracket(v, w)) out = out + base_section(label).scale(coeff);
  return out;
}

BandOperator curvature_operator(const ExtensionScheme& scheme, int v, int w) {
  BandOperator mv = scheme.section(v), mw = scheme.section(w);
  return mv.compose(mw) - mw.compose(mv) - scheme.bracket_image(v, w);
}

Rat cocycle_value(const ExtensionScheme& scheme, int v, int w) {
  return curvature_operator(scheme, v, w).tau();
}

ExtensionScheme heisenberg_scheme() {
  ExtensionScheme s;
  s.base_section = [](int k) { return BandOperator::shift(k); };
  s.bracket = [](int, int) { return std::vector<std::pair<int, Rat>>{}; };
  return s;
}

ExtensionScheme virasoro_scheme() {
  ExtensionScheme s;
  s.base_section = [](int m) { return BandOperator::witt(m); };
  s.bracket = [](int a, int b) {
    std::vector<std::pair<int, Rat>> out;
    Rat c = rat(b - a);
    if (!is_zero(c)) out.emplace_back(a + b, c);
    return out;
  };
  return s;
}

Rat loop_cocycle(const LieAlgebraFD& L, int m, int xi, int n, int psi) {
  return cocycle_value(heisenberg_scheme(), m, n) * killing_form(L, xi, psi);
}

}  // namespace comeasure
