#pragma once

#include <functional>
#include <string>

#include "multipoly.hpp"
#include "verdict.hpp"

namespace comeasure {

// Connection data on the free module A^r over A = Q[vars]: one r-by-r
// polynomial matrix per variable.
struct KoszulData {
  int rank = 0;
  std::vector<std::string> vars;
  std::vector<PolyMat> gamma;  // gamma[v] pairs with vars[v]
};

// The covariant derivative family built from KoszulData. The derivative
// along the v-th coordinate field acts as componentwise partial plus the
// matrix term; elements of the base algebra act by multiplication. A
// general vector field sum f_v d_v acts through the same family with
// function coefficients.
struct LooseConnection {
  KoszulData data;

  int rank() const { return data.rank; }
  int nv() const { return int(data.vars.size()); }

  PolyVec apply_var(int var, const PolyVec& m) const;
  PolyVec apply_field(const std::vector<MultiPoly>& field, const PolyVec& m) const;
  PolyVec apply_elt(const MultiPoly& a, const PolyVec& m) const { return pv_scale_poly(a, m); }
};

LooseConnection make_koszul_connection(const KoszulData& data);

using ModOp = std::function<PolyVec(const PolyVec&)>;

// Leibniz rule for one first-order operator claiming to cover the var-th
// coordinate field: op(a m) = (d_var a) m + a op(m), probed on monomials up
// to the given degree and module basis vectors.
Verdict check_leibniz(const ModOp& op, int var, int rank, int nv, int deg_max,
                      const std::vector<std::string>& vars);

// op(a m) = a op(m) on the same probe set.
Verdict check_module_map(const ModOp& op, int rank, int nv, int deg_max,
                         const std::vector<std::string>& vars);

// Full connection check: Leibniz along every coordinate field plus
// linearity of the vector-field slot over the base algebra.
std::vector<Verdict> check_loose_connection(const LooseConnection& conn, int deg_max);

// Commutator of the covariant derivatives along two coordinate fields,
// returned as the polynomial matrix whose columns are the images of the
// module basis. The coordinate fields commute, so no bracket correction
// enters.
PolyMat curvature(const LooseConnection& conn, int var1, int var2);

}  // namespace comeasure
