#include "jsonio.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace comeasure {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw JsonFormatError(std::string("missing field \"") + name + "\"");
  return *it;
}

long int_at(const json& j, const char* what) {
  if (!j.is_number_integer()) throw JsonFormatError(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::vector<std::string> load_labels(const json& j) {
  const json& arr = field(j, "labels");
  if (!arr.is_array() || arr.empty()) throw JsonFormatError("labels must be a nonempty array");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& e : arr) {
    if (!e.is_string()) throw JsonFormatError("labels must be strings");
    std::string s = e.get<std::string>();
    if (!seen.insert(s).second) throw JsonFormatError("duplicate label \"" + s + "\"");
    labels.push_back(std::move(s));
  }
  return labels;
}

void check_index(long i, size_t n, const char* what) {
  if (i < 0 || size_t(i) >= n)
    throw JsonFormatError(std::string(what) + " index " + std::to_string(i) + " out of range");
}

// Entries [i, j, k, num, den].
std::vector<std::vector<std::tuple<int, int, Rat>>> load_tensor3(const json& j, const char* name,
                                                                 size_t n1, size_t n2, size_t n3) {
  std::vector<std::vector<std::tuple<int, int, Rat>>> out(n1);
  const json& arr = field(j, name);
  if (!arr.is_array()) throw JsonFormatError(std::string(name) + " must be an array");
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 5)
      throw JsonFormatError(std::string(name) + " entries must be [i, j, k, num, den]");
    long i = int_at(e[0], name), a = int_at(e[1], name), b = int_at(e[2], name);
    check_index(i, n1, name);
    check_index(a, n2, name);
    check_index(b, n3, name);
    Rat c = rat_from_json(json::array({e[3], e[4]}));
    if (!is_zero(c)) out[i].push_back({int(a), int(b), c});
  }
  return out;
}

std::vector<Rat> load_row(const json& j, const char* name, size_t n) {
  const json& arr = field(j, name);
  if (!arr.is_array() || arr.size() != n)
    throw JsonFormatError(std::string(name) + " must have one entry per label");
  std::vector<Rat> out;
  for (const auto& e : arr) out.push_back(rat_from_json(e));
  return out;
}

std::shared_ptr<Coalgebra> load_coalgebra(const json& j) {
  auto C = std::make_shared<Coalgebra>();
  C->labels = load_labels(j);
  size_t n = C->labels.size();
  C->delta = load_tensor3(j, "delta", n, n, n);
  C->counit = load_row(j, "counit", n);
  return C;
}

json save_coalgebra(const Coalgebra& C) {
  json j;
  j["kind"] = "coalgebra";
  j["labels"] = C.labels;
  json delta = json::array();
  for (size_t i = 0; i < C.delta.size(); ++i)
    for (const auto& [l, r, c] : C.delta[i]) {
      json row = json::array({long(i), l, r});
      for (const auto& p : rat_to_json(c)) row.push_back(p);
      delta.push_back(row);
    }
  j["delta"] = delta;
  json counit = json::array();
  for (const auto& c : C.counit) counit.push_back(rat_to_json(c));
  j["counit"] = counit;
  return j;
}

std::shared_ptr<FiniteGroup> load_group(const json& j) {
  auto labels = load_labels(j);
  const json& tab = field(j, "table");
  if (!tab.is_array() || tab.size() != labels.size())
    throw JsonFormatError("table must have one row per label");
  std::vector<std::vector<int>> table;
  for (const auto& row : tab) {
    if (!row.is_array() || row.size() != labels.size())
      throw JsonFormatError("table rows must have one entry per label");
    std::vector<int> r;
    for (const auto& e : row) {
      long v = int_at(e, "table");
      check_index(v, labels.size(), "table");
      r.push_back(int(v));
    }
    table.push_back(std::move(r));
  }
  try {
    return std::make_shared<FiniteGroup>(make_group(std::move(labels), std::move(table)));
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
}

json save_group(const FiniteGroup& G) {
  json j;
  j["kind"] = "group";
  j["labels"] = G.labels;
  j["table"] = G.table;
  return j;
}

}  // namespace

json rat_to_json(const Rat& r) {
  Int num = r.get_num(), den = r.get_den();
  if (fits_int64(num) && fits_int64(den)) return json::array({to_int64(num), to_int64(den)});
  return json::array({num.get_str(), den.get_str()});
}

Rat rat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw JsonFormatError("rational must be [numerator, denominator]");
  Int num, den;
  for (int k = 0; k < 2; ++k) {
    Int& slot = k == 0 ? num : den;
    if (j[k].is_number_integer())
      slot = Int(long(j[k].get<long>()));
    else if (j[k].is_string())
      slot = Int(j[k].get<std::string>());
    else
      throw JsonFormatError("rational parts must be integers or decimal strings");
  }
  if (den <= 0) throw JsonFormatError("denominator must be positive");
  return rat(num, den);
}

Structure load_structure(const json& j) {
  if (!j.is_object()) throw JsonFormatError("structure file must be a JSON object");
  const json& kindj = field(j, "kind");
  if (!kindj.is_string()) throw JsonFormatError("kind must be a string");
  Structure s;
  s.kind = kindj.get<std::string>();

  if (s.kind == "coalgebra") {
    s.coalgebra = load_coalgebra(j);
  } else if (s.kind == "comodule") {
    Structure base = load_structure(field(j, "coalgebra"));
    if (base.kind != "coalgebra") throw JsonFormatError("comodule needs a nested coalgebra");
    s.coalgebra = base.coalgebra;
    auto D = std::make_shared<Comodule>();
    D->coalg = s.coalgebra;
    D->labels = load_labels(j);
    D->delta = load_tensor3(j, "delta", D->labels.size(), s.coalgebra->labels.size(),
                            D->labels.size());
    s.comodule = D;
  } else if (s.kind == "algebra") {
    auto A = std::make_shared<Algebra>();
    A->labels = load_labels(j);
    size_t n = A->labels.size();
    A->mult.assign(n, std::vector<FreeVec>(n));
    const json& arr = field(j, "mult");
    if (!arr.is_array()) throw JsonFormatError("mult must be an array");
    for (const auto& e : arr) {
      if (!e.is_array() || e.size() != 5)
        throw JsonFormatError("mult entries must be [i, j, k, num, den]");
      long i = int_at(e[0], "mult"), jj = int_at(e[1], "mult"), k = int_at(e[2], "mult");
      check_index(i, n, "mult");
      check_index(jj, n, "mult");
      check_index(k, n, "mult");
      A->mult[i][jj] += rat_from_json(json::array({e[3], e[4]})) * FreeVec::unit(k);
    }
    auto unit_row = load_row(j, "unit", n);
    for (size_t k = 0; k < n; ++k)
      if (!is_zero(unit_row[k])) A->unit += unit_row[k] * FreeVec::unit(long(k));
    s.algebra = A;
  } else if (s.kind == "group") {
    s.group = load_group(j);
  } else if (s.kind == "gmodule") {
    Structure base = load_structure(field(j, "group"));
    if (base.kind != "group") throw JsonFormatError("gmodule needs a nested group");
    s.group = base.group;
    auto M = std::make_shared<GModule>();
    M->G = s.group.get();
    long dim = int_at(field(j, "dim"), "dim");
    if (dim <= 0) throw JsonFormatError("dim must be positive");
    M->mdim = int(dim);
    M->rho.assign(s.group->order(), LinMap::zero(M->mdim, M->mdim));
    const json& arr = field(j, "rho");
    if (!arr.is_array()) throw JsonFormatError("rho must be an array");
    for (const auto& e : arr) {
      if (!e.is_array() || e.size() != 5)
        throw JsonFormatError("rho entries must be [g, i, j, num, den]");
      long g = int_at(e[0], "rho"), i = int_at(e[1], "rho"), jj = int_at(e[2], "rho");
      check_index(g, size_t(s.group->order()), "rho");
      check_index(i, size_t(dim), "rho");
      check_index(jj, size_t(dim), "rho");
      M->rho[g].cols[jj] += rat_from_json(json::array({e[3], e[4]})) * FreeVec::unit(i);
    }
    s.gmodule = M;
  } else if (s.kind == "koszul") {
    auto K = std::make_shared<KoszulData>();
    long rank = int_at(field(j, "rank"), "rank");
    if (rank <= 0) throw JsonFormatError("rank must be positive");
    K->rank = int(rank);
    const json& vars = field(j, "vars");
    if (!vars.is_array() || vars.empty()) throw JsonFormatError("vars must be a nonempty array");
    std::set<std::string> seen;
    for (const auto& v : vars) {
      if (!v.is_string()) throw JsonFormatError("vars must be strings");
      if (!seen.insert(v.get<std::string>()).second) throw JsonFormatError("duplicate variable");
      K->vars.push_back(v.get<std::string>());
    }
    int nv = int(K->vars.size());
    K->gamma.assign(nv, pm_zero(K->rank, nv));
    const json& arr = field(j, "gamma");
    if (!arr.is_array()) throw JsonFormatError("gamma must be an array");
    for (const auto& e : arr) {
      if (!e.is_array() || int(e.size()) != 3 + nv + 2)
        throw JsonFormatError("gamma entries must be [var, row, col, exponents..., num, den]");
      long v = int_at(e[0], "gamma"), i = int_at(e[1], "gamma"), jj = int_at(e[2], "gamma");
      check_index(v, size_t(nv), "gamma");
      check_index(i, size_t(rank), "gamma");
      check_index(jj, size_t(rank), "gamma");
      std::vector<int> exps;
      for (int k = 0; k < nv; ++k) {
        long ex = int_at(e[3 + k], "gamma exponent");
        if (ex < 0) throw JsonFormatError("gamma exponents must be nonnegative");
        exps.push_back(int(ex));
      }
      K->gamma[v][i][jj].add_term(exps, rat_from_json(json::array({e[3 + nv], e[4 + nv]})));
    }
    s.koszul = K;
  } else if (s.kind == "lie") {
    auto L = std::make_shared<LieAlgebraFD>();
    L->labels = load_labels(j);
    size_t n = L->labels.size();
    L->bracket.assign(n, std::vector<FreeVec>(n));
    const json& arr = field(j, "bracket");
    if (!arr.is_array()) throw JsonFormatError("bracket must be an array");
    for (const auto& e : arr) {
      if (!e.is_array() || e.size() != 5)
        throw JsonFormatError("bracket entries must be [i, j, k, num, den]");
      long i = int_at(e[0], "bracket"), jj = int_at(e[1], "bracket"), k = int_at(e[2], "bracket");
      check_index(i, n, "bracket");
      check_index(jj, n, "bracket");
      check_index(k, n, "bracket");
      L->bracket[i][jj] += rat_from_json(json::array({e[3], e[4]})) * FreeVec::unit(k);
    }
    s.lie = L;
  } else {
    throw JsonFormatError("unknown kind \"" + s.kind + "\"");
  }
  return s;
}

Structure load_structure_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw JsonFormatError("malformed JSON");
  return load_structure(j);
}

Structure load_structure_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_structure_text(buf.str());
}

json save_structure(const Structure& s) {
  if (s.kind == "coalgebra" && s.coalgebra) return save_coalgebra(*s.coalgebra);
  if (s.kind == "comodule" && s.comodule) {
    json j;
    j["kind"] = "comodule";
    j["coalgebra"] = save_coalgebra(*s.comodule->coalg);
    j["labels"] = s.comodule->labels;
    json delta = json::array();
    for (size_t i = 0; i < s.comodule->delta.size(); ++i)
      for (const auto& [c, m, coef] : s.comodule->delta[i]) {
        json row = json::array({long(i), c, m});
        for (const auto& p : rat_to_json(coef)) row.push_back(p);
        delta.push_back(row);
      }
    j["delta"] = delta;
    return j;
  }
  if (s.kind == "algebra" && s.algebra) {
    json j;
    j["kind"] = "algebra";
    j["labels"] = s.algebra->labels;
    json mult = json::array();
    size_t n = s.algebra->labels.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t jj = 0; jj < n; ++jj)
        for (const auto& [k, c] : s.algebra->mult[i][jj].terms()) {
          json row = json::array({long(i), long(jj), k});
          for (const auto& p : rat_to_json(c)) row.push_back(p);
          mult.push_back(row);
        }
    j["mult"] = mult;
    json unit = json::array();
    for (size_t k = 0; k < n; ++k) unit.push_back(rat_to_json(s.algebra->unit.at(long(k))));
    j["unit"] = unit;
    return j;
  }
  if (s.kind == "group" && s.group) return save_group(*s.group);
  if (s.kind == "gmodule" && s.gmodule) {
    json j;
    j["kind"] = "gmodule";
    j["group"] = save_group(*s.gmodule->G);
    j["dim"] = s.gmodule->mdim;
    json rho = json::array();
    for (size_t g = 0; g < s.gmodule->rho.size(); ++g)
      for (int col = 0; col < s.gmodule->mdim; ++col)
        for (const auto& [i, c] : s.gmodule->rho[g].cols[col].terms()) {
          json row = json::array({long(g), i, long(col)});
          for (const auto& p : rat_to_json(c)) row.push_back(p);
          rho.push_back(row);
        }
    j["rho"] = rho;
    return j;
  }
  if (s.kind == "koszul" && s.koszul) {
    json j;
    j["kind"] = "koszul";
    j["rank"] = s.koszul->rank;
    j["vars"] = s.koszul->vars;
    json gamma = json::array();
    int nv = int(s.koszul->vars.size());
    for (int v = 0; v < nv; ++v)
      for (int i = 0; i < s.koszul->rank; ++i)
        for (int col = 0; col < s.koszul->rank; ++col)
          for (const auto& [exps, c] : s.koszul->gamma[v][i][col].terms()) {
            json row = json::array({v, i, col});
            for (int e : exps) row.push_back(e);
            for (const auto& p : rat_to_json(c)) row.push_back(p);
            gamma.push_back(row);
          }
    j["gamma"] = gamma;
    return j;
  }
  if (s.kind == "lie" && s.lie) {
    json j;
    j["kind"] = "lie";
    j["labels"] = s.lie->labels;
    json bracket = json::array();
    size_t n = s.lie->labels.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t jj = 0; jj < n; ++jj)
        for (const auto& [k, c] : s.lie->bracket[i][jj].terms()) {
          json row = json::array({long(i), long(jj), k});
          for (const auto& p : rat_to_json(c)) row.push_back(p);
          bracket.push_back(row);
        }
    j["bracket"] = bracket;
    return j;
  }
  throw JsonFormatError("cannot save structure of kind \"" + s.kind + "\"");
}

}  // namespace comeasure
