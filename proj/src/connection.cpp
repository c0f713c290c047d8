#include "connection.hpp"

#include <stdexcept>

namespace comeasure {

PolyVec LooseConnection::apply_var(int var, const PolyVec& m) const {
  if (var < 0 || var >= nv()) throw std::invalid_argument("unknown connection variable");
  PolyVec out;
  for (int i = 0; i < rank(); ++i) out.push_back(m[i].derivative(var));
  return pv_add(out, pm_apply(data.gamma[var], m));
}

PolyVec LooseConnection::apply_field(const std::vector<MultiPoly>& field, const PolyVec& m) const {
  PolyVec out(rank(), MultiPoly(nv()));
  for (int v = 0; v < nv(); ++v) {
    if (field[v].is_zero()) continue;
    out = pv_add(out, pv_scale_poly(field[v], apply_var(v, m)));
  }
  return out;
}

LooseConnection make_koszul_connection(const KoszulData& data) {
  if (int(data.gamma.size()) != int(data.vars.size()))
    throw std::invalid_argument("one connection matrix required per variable");
  for (const auto& g : data.gamma) {
    if (int(g.size()) != data.rank) throw std::invalid_argument("connection matrix rank mismatch");
    for (const auto& row : g)
      if (int(row.size()) != data.rank) throw std::invalid_argument("connection matrix not square");
  }
  return LooseConnection{data};
}

namespace {

PolyVec basis_vec(int rank, int nv, int i) {
  PolyVec e(rank, MultiPoly(nv));
  e[i] = MultiPoly::constant(nv, Rat(1));
  return e;
}

std::string monomial_name(const MultiPoly& a, const std::vector<std::string>& vars) {
  return a.to_string(vars);
}

}  // namespace

Verdict check_leibniz(const ModOp& op, int var, int rank, int nv, int deg_max,
                      const std::vector<std::string>& vars) {
  for (const auto& a : monomials_up_to(nv, deg_max))
    for (int i = 0; i < rank; ++i) {
      PolyVec m = basis_vec(rank, nv, i);
      PolyVec lhs = op(pv_scale_poly(a, m));
      PolyVec rhs = pv_add(pv_scale_poly(a.derivative(var), m), pv_scale_poly(a, op(m)));
      if (!pv_equal(lhs, rhs))
        return Verdict::fail("leibniz along " + vars[var],
                             "(a=" + monomial_name(a, vars) + ", m=e" + std::to_string(i) + ")");
    }
  return Verdict::ok("leibniz along " + vars[var]);
}

Verdict check_module_map(const ModOp& op, int rank, int nv, int deg_max,
                         const std::vector<std::string>& vars) {
  for (const auto& a : monomials_up_to(nv, deg_max))
    for (int i = 0; i < rank; ++i) {
      PolyVec m = basis_vec(rank, nv, i);
      PolyVec lhs = op(pv_scale_poly(a, m));
      PolyVec rhs = pv_scale_poly(a, op(m));
      if (!pv_equal(lhs, rhs))
        return Verdict::fail("module map",
                             "(a=" + monomial_name(a, vars) + ", m=e" + std::to_string(i) + ")");
    }
  return Verdict::ok("module map");
}

std::vector<Verdict> check_loose_connection(const LooseConnection& conn, int deg_max) {
  std::vector<Verdict> out;
  for (int v = 0; v < conn.nv(); ++v) {
    ModOp op = [&conn, v](const PolyVec& m) { return conn.apply_var(v, m); };
    out.push_back(check_leibniz(op, v, conn.rank(), conn.nv(), deg_max, conn.data.vars));
  }
  // Linearity over the base algebra in the vector-field slot: the field
  // a d_v applied to m must equal a times the derivative along d_v.
  bool linear = true;
  std::string w;
  for (int v = 0; v < conn.nv() && linear; ++v)
    for (const auto& a : monomials_up_to(conn.nv(), deg_max)) {
      if (!linear) break;
      std::vector<MultiPoly> field(conn.nv(), MultiPoly(conn.nv()));
      field[v] = a;
      for (int i = 0; i < conn.rank(); ++i) {
        PolyVec m = basis_vec(conn.rank(), conn.nv(), i);
        PolyVec lhs = conn.apply_field(field, m);
        PolyVec rhs = pv_scale_poly(a, conn.apply_var(v, m));
        if (!pv_equal(lhs, rhs)) {
          linear = false;
          w = "(field=" + monomial_name(a, conn.data.vars) + "*d_" + conn.data.vars[v] +
              ", m=e" + std::to_string(i) + ")";
          break;
        }
      }
    }
  out.push_back(linear ? Verdict::ok("field slot linearity")
                       : Verdict::fail("field slot linearity", w));
  return out;
}

PolyMat curvature(const LooseConnection& conn, int var1, int var2) {
  if (var1 < 0 || var1 >= conn.nv() || var2 < 0 || var2 >= conn.nv())
    throw std::invalid_argument("unknown connection variable");
  PolyMat omega = pm_zero(conn.rank(), conn.nv());
  for (int j = 0; j < conn.rank(); ++j) {
    PolyVec e = basis_vec(conn.rank(), conn.nv(), j);
    PolyVec col = pv_sub(conn.apply_var(var1, conn.apply_var(var2, e)),
                         conn.apply_var(var2, conn.apply_var(var1, e)));
    for (int i = 0; i < conn.rank(); ++i) omega[i][j] = col[i];
  }
  return omega;
}

}  // namespace comeasure
