#include "builtins.hpp"

#include <memory>
#include <stdexcept>

#include "group.hpp"
#include "liealg.hpp"
#include "multipoly.hpp"

namespace comeasure {

namespace {

std::shared_ptr<const Algebra> shared_ut2() {
  return std::make_shared<Algebra>(upper_triangular2());
}

Structure koszul_structure(int which) {
  auto K = std::make_shared<KoszulData>();
  K->rank = 2;
  K->vars = {"u", "v"};
  K->gamma.assign(2, pm_zero(2, 2));
  if (which == 1) K->gamma[0][0][1] = MultiPoly::constant(2, rat(1));
  Structure s;
  s.kind = "koszul";
  s.koszul = K;
  return s;
}

std::vector<int> all_indices(int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) out.push_back(i);
  return out;
}

std::vector<FreeVec> basis_probes(int n) {
  std::vector<FreeVec> out;
  for (int i = 0; i < n; ++i) out.push_back(FreeVec::unit(i));
  return out;
}

std::vector<Verdict> comodule_suite(const ComoduleMeasuring& md) {
  auto v = check_measuring_comodule(md, all_indices(int(md.A->labels.size())),
                                    basis_probes(md.actM.mdim));
  auto t = check_transpose_intertwines(md, all_indices(int(md.A->labels.size())),
                                       basis_probes(md.actM.mdim));
  v.insert(v.end(), t.begin(), t.end());
  return v;
}

}  // namespace

std::vector<std::string> builtin_structure_names() {
  return {"alpha",  "c0",          "c1",           "chain-broken", "diag2",       "difference",
          "koszul-nilpotent", "koszul-zero", "s3",           "s3-regular",   "s4",
          "sl2",    "taylor",      "taylor-broken", "taylor-chain", "ut2",        "z3-fun"};
}

Structure builtin_structure(const std::string& name) {
  Structure s;
  if (name == "c0") {
    s.kind = "coalgebra";
    s.coalgebra = std::make_shared<Coalgebra>(trivial_coalgebra());
  } else if (name == "c1") {
    s.kind = "coalgebra";
    s.coalgebra = std::make_shared<Coalgebra>(primitive_pair_coalgebra());
  } else if (name == "taylor") {
    s.kind = "coalgebra";
    s.coalgebra = std::make_shared<Coalgebra>(taylor_coalgebra(9));
  } else if (name == "taylor-broken") {
    // One-sided deletion in Delta b_2 so the counit law fails at b_2.
    auto C = std::make_shared<Coalgebra>(taylor_coalgebra(9));
    auto& row = C->delta[2];
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (std::get<0>(*it) == 0 && std::get<1>(*it) == 2) {
        row.erase(it);
        break;
      }
    }
    s.kind = "coalgebra";
    s.coalgebra = C;
  } else if (name == "difference") {
    s.kind = "coalgebra";
    s.coalgebra = std::make_shared<Coalgebra>(difference_coalgebra());
  } else if (name == "alpha") {
    s.kind = "coalgebra";
    s.coalgebra = std::make_shared<Coalgebra>(*shift_family_measuring(4).C);
  } else if (name == "taylor-chain") {
    auto C = std::make_shared<const Coalgebra>(taylor_coalgebra(9));
    s.kind = "comodule";
    s.coalgebra = std::const_pointer_cast<Coalgebra>(C);
    s.comodule = std::make_shared<Comodule>(taylor_chain_comodule(C, 4));
  } else if (name == "chain-broken") {
    auto C = std::make_shared<const Coalgebra>(taylor_coalgebra(9));
    auto D = std::make_shared<Comodule>(taylor_chain_comodule(C, 4));
    auto& row = D->delta[1];
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (std::get<0>(*it) == 0) {
        row.erase(it);
        break;
      }
    }
    s.kind = "comodule";
    s.coalgebra = std::const_pointer_cast<Coalgebra>(C);
    s.comodule = D;
  } else if (name == "ut2") {
    s.kind = "algebra";
    s.algebra = std::make_shared<Algebra>(upper_triangular2());
  } else if (name == "diag2") {
    s.kind = "algebra";
    s.algebra = std::make_shared<Algebra>(diagonal2());
  } else if (name == "z3-fun") {
    s.kind = "algebra";
    s.algebra = std::make_shared<Algebra>(cyclic_function_algebra(3));
  } else if (name == "s3") {
    s.kind = "group";
    s.group = std::make_shared<FiniteGroup>(symmetric_group(3));
  } else if (name == "s4") {
    s.kind = "group";
    s.group = std::make_shared<FiniteGroup>(symmetric_group(4));
  } else if (name == "s3-regular") {
    s.kind = "gmodule";
    s.group = std::make_shared<FiniteGroup>(symmetric_group(3));
    s.gmodule = std::make_shared<GModule>(regular_representation(*s.group));
    s.gmodule->G = s.group.get();
  } else if (name == "sl2") {
    s.kind = "lie";
    s.lie = std::make_shared<LieAlgebraFD>(sl2());
  } else if (name == "koszul-nilpotent") {
    s = koszul_structure(1);
  } else if (name == "koszul-zero") {
    s = koszul_structure(0);
  } else {
    throw std::out_of_range("unknown builtin structure \"" + name + "\"");
  }
  return s;
}

std::vector<std::string> builtin_measuring_names() {
  return {"alpha",     "alpha-broken",     "c0-ut2",       "c1-multx",
          "c1-poly",   "diff-z3",          "inner-ut2",    "inner-ut2-broken",
          "pullback-ut2", "pullback-ut2-broken"};
}

std::vector<Verdict> run_builtin_measuring(const std::string& name) {
  if (name == "c1-poly") return check_measuring_graded(derivation_measuring(), 8);
  if (name == "c1-multx") return check_measuring_graded(derivation_measuring_broken(), 8);
  if (name == "alpha") return check_alpha_measuring(4, 8);
  if (name == "alpha-broken") return check_measuring_graded(shift_family_measuring_broken(4), 8);
  if (name == "c0-ut2") {
    auto mc = homomorphism_measuring(shared_ut2());
    return check_measuring(mc, all_indices(int(mc.A->labels.size())));
  }
  if (name == "diff-z3") {
    auto mc = difference_measuring(3);
    return check_measuring(mc, all_indices(int(mc.A->labels.size())));
  }
  if (name == "inner-ut2") return comodule_suite(inner_comodule(shared_ut2()));
  if (name == "inner-ut2-broken") return comodule_suite(inner_comodule_broken(shared_ut2()));
  if (name == "pullback-ut2") return comodule_suite(pullback_comodule(shared_ut2(), FreeVec::unit(2)));
  if (name == "pullback-ut2-broken")
    return comodule_suite(pullback_comodule_broken(shared_ut2(), FreeVec::unit(1)));
  throw std::out_of_range("unknown builtin measuring setup \"" + name + "\"");
}

}  // namespace comeasure
