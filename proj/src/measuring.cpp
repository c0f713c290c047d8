#include "measuring.hpp"

#include <sstream>
#include <stdexcept>

namespace comeasure {

FreeVec ModuleAction::apply(const FreeVec& a, const FreeVec& m) const {
  FreeVec out;
  for (const auto& [i, c] : a.terms()) {
    FreeVec part = act[int(i)].apply(m);
    part *= c;
    out += part;
  }
  return out;
}

namespace {

// Polynomial product on degree-labelled sparse vectors.
FreeVec poly_mul(const FreeVec& a, const FreeVec& b) {
  FreeVec out;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) out.add(i + j, ci * cj);
  return out;
}

FreeVec band_apply(const BandOperator& op, const FreeVec& v) {
  FreeVec out;
  for (const auto& [n, c] : v.terms()) {
    FreeVec img = op.apply_scalar(n);
    img *= c;
    out += img;
  }
  return out;
}

}  // namespace

std::vector<Verdict> check_measuring(const MeasuringMap& mc, const std::vector<int>& generatorsA) {
  const Coalgebra& C = *mc.C;
  std::vector<Verdict> out;
  bool prod = true;
  std::string w_prod;
  for (int c = 0; c < C.dim() && prod; ++c)
    for (int a : generatorsA) {
      if (!prod) break;
      for (int a2 : generatorsA) {
        FreeVec lhs = mc.phi[c].apply(mc.A->mult[a][a2]);
        FreeVec rhs;
        for (const auto& [l, r, q] : C.delta[c]) {
          FreeVec term = mc.B->multiply(mc.phi[l].apply(FreeVec::unit(a)), mc.phi[r].apply(FreeVec::unit(a2)));
          term *= q;
          rhs += term;
        }
        if (!(lhs == rhs)) {
          prod = false;
          w_prod = "(c=" + C.labels[c] + ", a=" + mc.A->labels[a] + ", a'=" + mc.A->labels[a2] + ")";
          break;
        }
      }
    }
  out.push_back(prod ? Verdict::ok("measuring product law") : Verdict::fail("measuring product law", w_prod));
  bool unit = true;
  std::string w_unit;
  for (int c = 0; c < C.dim() && unit; ++c) {
    FreeVec lhs = mc.phi[c].apply(mc.A->unit);
    FreeVec rhs = mc.B->unit;
    rhs *= C.counit[c];
    if (!(lhs == rhs)) {
      unit = false;
      w_unit = "c=" + C.labels[c];
    }
  }
  out.push_back(unit ? Verdict::ok("measuring unit law") : Verdict::fail("measuring unit law", w_unit));
  return out;
}

std::vector<Verdict> check_measuring_graded(const GradedMeasuringMap& mc, int deg_max) {
  const Coalgebra& C = *mc.C;
  std::vector<Verdict> out;
  bool prod = true;
  std::string w_prod;
  for (int c = 0; c < C.dim() && prod; ++c)
    for (int a = 0; a <= deg_max && prod; ++a)
      for (int b = 0; b <= deg_max; ++b) {
        FreeVec lhs = mc.phi[c].apply_scalar(a + b);
        FreeVec rhs;
        for (const auto& [l, r, q] : C.delta[c]) {
          FreeVec term = poly_mul(mc.phi[l].apply_scalar(a), mc.phi[r].apply_scalar(b));
          term *= q;
          rhs += term;
        }
        if (!(lhs == rhs)) {
          prod = false;
          std::ostringstream os;
          os << "(c=" << C.labels[c] << ", a=" << a << ", b=" << b << ")";
          w_prod = os.str();
          break;
        }
      }
  out.push_back(prod ? Verdict::ok("measuring product law") : Verdict::fail("measuring product law", w_prod));
  bool unit = true;
  std::string w_unit;
  for (int c = 0; c < C.dim() && unit; ++c) {
    FreeVec lhs = mc.phi[c].apply_scalar(0);
    FreeVec rhs;
    rhs.add(0, C.counit[c]);
    if (!(lhs == rhs)) {
      unit = false;
      w_unit = "c=" + C.labels[c];
    }
  }
  out.push_back(unit ? Verdict::ok("measuring unit law") : Verdict::fail("measuring unit law", w_unit));
  return out;
}

std::vector<Verdict> check_measuring_comodule(const ComoduleMeasuring& md,
                                              const std::vector<int>& generatorsA,
                                              const std::vector<FreeVec>& probesM) {
  const Comodule& D = *md.D;
  bool pass = true;
  std::string witness;
  for (int d = 0; d < D.dim() && pass; ++d)
    for (int a : generatorsA) {
      if (!pass) break;
      for (std::size_t mi = 0; mi < probesM.size(); ++mi) {
        FreeVec am = md.actM.apply(FreeVec::unit(a), probesM[mi]);
        FreeVec lhs = md.psi[d].apply(am);
        FreeVec rhs;
        for (const auto& [c, d2, q] : D.delta[d]) {
          FreeVec phi_a = md.phi[c].apply(FreeVec::unit(a));
          FreeVec term = md.actN.apply(phi_a, md.psi[d2].apply(probesM[mi]));
          term *= q;
          rhs += term;
        }
        if (!(lhs == rhs)) {
          pass = false;
          std::ostringstream os;
          os << "(d=" << D.labels[d] << ", a=" << md.A->labels[a] << ", m=probe" << mi << ")";
          witness = os.str();
          break;
        }
      }
    }
  return {pass ? Verdict::ok("comodule measuring law") : Verdict::fail("comodule measuring law", witness)};
}

std::vector<Verdict> check_transpose_intertwines(const ComoduleMeasuring& md,
                                                 const std::vector<int>& generatorsA,
                                                 const std::vector<FreeVec>& probesM) {
  // Hom(D, N) coordinates: label d * dimN + n.
  const Comodule& D = *md.D;
  long dimN = md.actN.mdim;
  auto transpose_of = [&](const FreeVec& m) {
    FreeVec beta;
    for (int d = 0; d < D.dim(); ++d) {
      FreeVec img = md.psi[d].apply(m);
      for (const auto& [n, c] : img.terms()) beta.add(d * dimN + n, c);
    }
    return beta;
  };
  auto hom_action = [&](int a, const FreeVec& beta) {
    FreeVec out;
    for (int d = 0; d < D.dim(); ++d)
      for (const auto& [c, d2, q] : D.delta[d]) {
        // beta component at d2, pushed forward by phi_c(a) acting on N.
        FreeVec comp;
        for (int n = 0; n < dimN; ++n) {
          Rat v = beta.at(long(d2) * dimN + n);
          if (!is_zero(v)) comp.add(n, v);
        }
        FreeVec moved = md.actN.apply(md.phi[c].apply(FreeVec::unit(a)), comp);
        moved *= q;
        for (const auto& [n, cv] : moved.terms()) out.add(long(d) * dimN + n, cv);
      }
    return out;
  };
  bool pass = true;
  std::string witness;
  for (int a : generatorsA) {
    if (!pass) break;
    for (std::size_t mi = 0; mi < probesM.size(); ++mi) {
      FreeVec lhs = transpose_of(md.actM.apply(FreeVec::unit(a), probesM[mi]));
      FreeVec rhs = hom_action(a, transpose_of(probesM[mi]));
      if (!(lhs == rhs)) {
        pass = false;
        witness = "(a=" + md.A->labels[a] + ", m=probe" + std::to_string(mi) + ")";
        break;
      }
    }
  }
  return {pass ? Verdict::ok("transpose intertwines") : Verdict::fail("transpose intertwines", witness)};
}

BandOperator operator_product(const BandOperator& f, const BandOperator& g) { return f.compose(g); }
LinMap operator_product(const LinMap& f, const LinMap& g) { return compose(f, g); }

Coalgebra primitive_coalgebra(const std::vector<std::string>& primitive_labels) {
  Coalgebra C;
  C.labels.push_back("g");
  C.delta.push_back({{0, 0, Rat(1)}});
  C.counit.push_back(Rat(1));
  for (const auto& name : primitive_labels) {
    int i = C.dim();
    C.labels.push_back(name);
    C.delta.push_back({{0, i, Rat(1)}, {i, 0, Rat(1)}});
    C.counit.push_back(Rat(0));
  }
  return C;
}

Coalgebra build_standard_coalgebra(const std::string& kind) {
  if (kind == "C0") return trivial_coalgebra();
  if (kind == "C1") return primitive_pair_coalgebra();
  if (kind == "difference") return difference_coalgebra();
  throw std::invalid_argument("unknown coalgebra kind: " + kind);
}

MeasuringMap homomorphism_measuring(std::shared_ptr<const Algebra> A) {
  MeasuringMap mc;
  mc.C = std::make_shared<Coalgebra>(trivial_coalgebra());
  mc.A = A;
  mc.B = A;
  mc.phi = {LinMap::identity(A->dim())};
  return mc;
}

GradedMeasuringMap derivation_measuring() {
  GradedMeasuringMap mc;
  mc.C = std::make_shared<Coalgebra>(primitive_pair_coalgebra());
  mc.phi = {BandOperator::identity_op(), BandOperator::witt(-1)};
  return mc;
}

GradedMeasuringMap derivation_measuring_broken() {
  GradedMeasuringMap mc;
  mc.C = std::make_shared<Coalgebra>(primitive_pair_coalgebra());
  mc.phi = {BandOperator::identity_op(), BandOperator::shift(1)};
  return mc;
}

MeasuringMap permutation_difference_measuring(int n, const std::vector<int>& perm) {
  if (int(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  auto A = std::make_shared<Algebra>(cyclic_function_algebra(n));
  // K acts by pullback: chi_i -> chi_{perm^{-1}(i)} means values move along perm.
  LinMap K = LinMap::zero(n, n), Kinv = LinMap::zero(n, n);
  for (int i = 0; i < n; ++i) {
    K.cols[perm[i]] = FreeVec::unit(i);
    Kinv.cols[i] = FreeVec::unit(perm[i]);
  }
  LinMap E{n, n, {}};
  for (int i = 0; i < n; ++i) E.cols.push_back(K.cols[i] - Kinv.cols[i]);
  MeasuringMap mc;
  mc.C = std::make_shared<Coalgebra>(difference_coalgebra());
  mc.A = A;
  mc.B = A;
  mc.phi = {K, Kinv, E};
  return mc;
}

MeasuringMap difference_measuring(int n) {
  std::vector<int> shift(n);
  for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
  return permutation_difference_measuring(n, shift);
}

namespace {

ModuleAction regular_action(const Algebra& A) {
  ModuleAction act;
  act.mdim = A.dim();
  for (int i = 0; i < A.dim(); ++i) act.act.push_back(left_mult_map(A, i));
  return act;
}

Comodule grouplike_point_comodule(std::shared_ptr<const Coalgebra> C0) {
  Comodule D;
  D.coalg = std::move(C0);
  D.labels = {"d"};
  D.delta = {{{0, 0, Rat(1)}}};
  return D;
}

}  // namespace

ComoduleMeasuring pullback_comodule(std::shared_ptr<const Algebra> A, const FreeVec& right_factor) {
  ComoduleMeasuring md;
  auto C0 = std::make_shared<Coalgebra>(trivial_coalgebra());
  md.C = C0;
  md.A = A;
  md.B = A;
  md.phi = {LinMap::identity(A->dim())};
  md.D = std::make_shared<Comodule>(grouplike_point_comodule(C0));
  md.actM = regular_action(*A);
  md.actN = md.actM;
  // Right multiplication commutes with the left action, a genuine module map.
  LinMap psi{A->dim(), A->dim(), {}};
  for (int j = 0; j < A->dim(); ++j)
    psi.cols.push_back(A->multiply(FreeVec::unit(j), right_factor));
  md.psi = {psi};
  return md;
}

ComoduleMeasuring pullback_comodule_broken(std::shared_ptr<const Algebra> A, const FreeVec& left_factor) {
  ComoduleMeasuring md = pullback_comodule(A, A->unit);
  LinMap psi{A->dim(), A->dim(), {}};
  for (int j = 0; j < A->dim(); ++j)
    psi.cols.push_back(A->multiply(left_factor, FreeVec::unit(j)));
  md.psi = {psi};
  return md;
}

ComoduleMeasuring inner_comodule(std::shared_ptr<const Algebra> A) {
  int n = A->dim();
  // Independent inner derivations, with every basis derivation expressed
  // through the chosen representatives.
  std::vector<RatMatrix> ad(n);
  for (int j = 0; j < n; ++j) ad[j] = inner_derivation(*A, FreeVec::unit(j));
  SpanBuilder span;
  std::vector<int> reps;
  for (int j = 0; j < n; ++j) {
    FreeVec v;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) v.add(r * n + c, ad[j].at(r, c));
    if (span.insert(v)) reps.push_back(j);
  }
  int rank = int(reps.size());
  RatMatrix repcols(n * n, rank);
  for (int k = 0; k < rank; ++k)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) repcols.at(r * n + c, k) = ad[reps[k]].at(r, c);

  Coalgebra C;
  C.labels.push_back("g");
  C.delta.push_back({{0, 0, Rat(1)}});
  C.counit.push_back(Rat(1));
  for (int k = 0; k < rank; ++k) {
    int i = C.dim();
    C.labels.push_back("iota" + std::to_string(k));
    C.delta.push_back({{0, i, Rat(1)}, {i, 0, Rat(1)}});
    C.counit.push_back(Rat(0));
  }
  auto Cp = std::make_shared<Coalgebra>(C);

  ComoduleMeasuring md;
  md.C = Cp;
  md.A = A;
  md.B = A;
  md.phi.push_back(LinMap::identity(n));
  for (int k = 0; k < rank; ++k) md.phi.push_back(linmap_from_matrix(ad[reps[k]]));

  Comodule D;
  D.coalg = Cp;
  D.labels = A->labels;
  for (int j = 0; j < n; ++j) {
    std::vector<std::tuple<int, int, Rat>> row;
    row.emplace_back(0, j, Rat(1));
    std::vector<Rat> target(n * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) target[r * n + c] = ad[j].at(r, c);
    std::vector<Rat> lambda;
    if (!solve_linear(repcols, target, lambda))
      throw std::logic_error("inner derivation failed to decompose");
    for (int k = 0; k < rank; ++k) {
      if (is_zero(lambda[k])) continue;
      for (const auto& [u, cu] : A->unit.terms()) row.emplace_back(1 + k, int(u), lambda[k] * cu);
    }
    D.delta.push_back(std::move(row));
  }
  md.D = std::make_shared<Comodule>(std::move(D));
  md.actM = regular_action(*A);
  md.actN = md.actM;
  for (int j = 0; j < n; ++j) md.psi.push_back(left_mult_map(*A, j));
  return md;
}

ComoduleMeasuring inner_comodule_broken(std::shared_ptr<const Algebra> A) {
  ComoduleMeasuring md = inner_comodule(A);
  // Forget the derivation leg of the coaction.
  Comodule D = *md.D;
  for (int j = 0; j < D.dim(); ++j) D.delta[j] = {{0, j, Rat(1)}};
  md.D = std::make_shared<Comodule>(std::move(D));
  return md;
}

GradedMeasuringMap shift_family_measuring(int i_max) {
  GradedMeasuringMap mc;
  Coalgebra C;
  C.labels.push_back("a0");
  C.delta.push_back({{0, 0, Rat(1)}});
  C.counit.push_back(Rat(1));
  for (int i = 1; i <= i_max; ++i) {
    C.labels.push_back("a-" + std::to_string(i));
    C.counit.push_back(Rat(0));
  }
  int boff = i_max + 1;
  for (int j = 0; j < i_max; ++j) {
    C.labels.push_back("b" + std::to_string(j));
    C.counit.push_back(j == 0 ? Rat(1) : Rat(0));
  }
  C.delta.resize(C.labels.size());
  for (int i = 1; i <= i_max; ++i) {
    auto& row = C.delta[i];
    row.emplace_back(i, 0, Rat(1));
    for (int k = 0; k < i; ++k) row.emplace_back(boff + k, i - k, Rat(1));
  }
  for (int j = 0; j < i_max; ++j) {
    auto& row = C.delta[boff + j];
    for (int k = 0; k <= j; ++k) row.emplace_back(boff + k, boff + j - k, Rat(1));
  }
  mc.C = std::make_shared<Coalgebra>(std::move(C));
  mc.phi.push_back(BandOperator::identity_op());
  for (int i = 1; i <= i_max; ++i) mc.phi.push_back(BandOperator::shift(-i));
  for (int j = 0; j < i_max; ++j) {
    std::map<std::pair<int, int>, RatMatrix> entries;
    entries[{j, -j}] = NPoly::scalar_mat(1, Rat(1));
    mc.phi.push_back(BandOperator::finite(1, entries));
  }
  return mc;
}

GradedMeasuringMap shift_family_measuring_broken(int i_max) {
  GradedMeasuringMap mc = shift_family_measuring(i_max);
  Coalgebra C = *mc.C;
  for (int i = 1; i <= i_max; ++i) C.delta[i] = {{i, 0, Rat(1)}};
  mc.C = std::make_shared<Coalgebra>(std::move(C));
  return mc;
}

std::vector<Verdict> check_alpha_measuring(int i_max, int deg_max) {
  return check_measuring_graded(shift_family_measuring(i_max), deg_max);
}

}  // namespace comeasure
