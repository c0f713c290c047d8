#include "group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace comeasure {

int FiniteGroup::index_of(const std::string& label) const {
  for (int i = 0; i < order(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

FiniteGroup make_group(std::vector<std::string> labels, std::vector<std::vector<int>> table) {
  FiniteGroup G;
  G.labels = std::move(labels);
  G.table = std::move(table);
  int n = G.order();
  if (int(G.table.size()) != n) throw std::invalid_argument("table size mismatch");
  for (const auto& row : G.table) {
    if (int(row.size()) != n) throw std::invalid_argument("table row size mismatch");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
  }
  for (int i = 0; i < n; ++i) {
    bool id = true;
    for (int j = 0; j < n && id; ++j)
      if (G.table[i][j] != j || G.table[j][i] != j) id = false;
    if (id) {
      G.identity = i;
      break;
    }
  }
  if (G.identity < 0) throw std::invalid_argument("no identity element");
  G.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (G.table[i][j] == G.identity && G.table[j][i] == G.identity) {
        G.inverse[i] = j;
        break;
      }
    if (G.inverse[i] < 0) throw std::invalid_argument("missing inverse for " + G.labels[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (G.table[G.table[i][j]][k] != G.table[i][G.table[j][k]])
          throw std::invalid_argument("multiplication table is not associative");
  return G;
}

namespace {

std::string cycle_label(const std::vector<int>& perm) {
  int n = int(perm.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    std::string cyc = "(" + std::to_string(i + 1);
    seen[i] = true;
    int j = perm[i];
    while (j != i) {
      seen[j] = true;
      cyc += std::to_string(j + 1);
      j = perm[j];
    }
    out += cyc + ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup symmetric_group(int n) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(cycle_label(q));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < int(perms.size()); ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> table(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      // (p q)(x) = p(q(x))
      std::vector<int> pq(n);
      for (int x = 0; x < n; ++x) pq[x] = perms[i][perms[j][x]];
      table[i][j] = index[pq];
    }
  return make_group(std::move(labels), std::move(table));
}

std::vector<int> subgroup_closure(const FiniteGroup& G, const std::vector<int>& gens) {
  std::set<int> elems{G.identity};
  for (int g : gens) elems.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(elems.begin(), elems.end());
    for (int a : cur)
      for (int b : cur)
        if (elems.insert(G.mul(a, b)).second) grew = true;
  }
  return {elems.begin(), elems.end()};
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems) {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(G.identity)) return false;
  for (int a : elems) {
    if (!s.count(G.inv(a))) return false;
    for (int b : elems)
      if (!s.count(G.mul(a, b))) return false;
  }
  return true;
}

std::vector<std::vector<int>> two_generated_subgroups(const FiniteGroup& G) {
  std::set<std::vector<int>> found;
  found.insert(subgroup_closure(G, {}));
  for (int a = 0; a < G.order(); ++a) {
    found.insert(subgroup_closure(G, {a}));
    for (int b = a + 1; b < G.order(); ++b) found.insert(subgroup_closure(G, {a, b}));
  }
  return {found.begin(), found.end()};
}

std::set<int> double_coset(const FiniteGroup& G, const std::vector<int>& K, int g) {
  std::set<int> out;
  for (int k1 : K)
    for (int k2 : K) out.insert(G.mul(G.mul(k1, g), k2));
  return out;
}

namespace {

// Left cosets xK and right cosets Kx inside the double coset, as sorted
// element sets keyed by their minimum.
std::vector<std::set<int>> partition_cosets(const FiniteGroup& G, const std::vector<int>& K,
                                            const std::set<int>& dc, bool left) {
  std::set<int> remaining = dc;
  std::vector<std::set<int>> out;
  while (!remaining.empty()) {
    int x = *remaining.begin();
    std::set<int> coset;
    for (int k : K) coset.insert(left ? G.mul(x, k) : G.mul(k, x));
    for (int e : coset) remaining.erase(e);
    out.push_back(std::move(coset));
  }
  return out;
}

}  // namespace

std::vector<int> double_coset_common_transversal(const FiniteGroup& G, const std::vector<int>& K,
                                                 int g) {
  if (!is_subgroup(G, K)) throw std::invalid_argument("transversal base is not a subgroup");
  std::set<int> dc = double_coset(G, K, g);
  auto lefts = partition_cosets(G, K, dc, true);
  auto rights = partition_cosets(G, K, dc, false);
  int nl = int(lefts.size()), nr = int(rights.size());
  if (nl != nr) throw std::logic_error("coset counts differ inside a double coset");
  // Maximum matching on the intersection graph, augmenting-path style. The
  // counting argument guarantees a perfect matching exists.
  std::vector<std::vector<int>> adj(nl);
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j) {
      bool meet = false;
      for (int e : lefts[i])
        if (rights[j].count(e)) {
          meet = true;
          break;
        }
      if (meet) adj[i].push_back(j);
    }
  std::vector<int> match_right(nr, -1), match_left(nl, -1);
  std::function<bool(int, std::vector<bool>&)> try_augment = [&](int i, std::vector<bool>& used) {
    for (int j : adj[i]) {
      if (used[j]) continue;
      used[j] = true;
      if (match_right[j] < 0 || try_augment(match_right[j], used)) {
        match_right[j] = i;
        match_left[i] = j;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < nl; ++i) {
    std::vector<bool> used(nr, false);
    if (!try_augment(i, used)) throw std::logic_error("no perfect coset matching found");
  }
  std::vector<int> reps;
  for (int i = 0; i < nl; ++i) {
    const auto& L = lefts[i];
    const auto& R = rights[match_left[i]];
    int rep = -1;
    for (int e : L)
      if (R.count(e)) {
        rep = e;
        break;
      }
    if (rep < 0) throw std::logic_error("matched cosets do not intersect");
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

namespace {

// Rank certificate that two families of group-algebra vectors span the
// same subspace.
bool same_span(const std::vector<std::vector<Rat>>& A, const std::vector<std::vector<Rat>>& B,
               int dim) {
  RatMatrix ma(0, dim), mb(0, dim), mab(0, dim);
  for (const auto& r : A) {
    ma.append_row(r);
    mab.append_row(r);
  }
  for (const auto& r : B) {
    mb.append_row(r);
    mab.append_row(r);
  }
  int ra = ma.rank(), rb = mb.rank(), rab = mab.rank();
  return ra == rb && rb == rab;
}

std::vector<Rat> indicator(int dim, int e) {
  std::vector<Rat> v(dim, Rat(0));
  v[e] = 1;
  return v;
}

}  // namespace

TransversalWitness quasi_normal_witness_group(const FiniteGroup& G, const std::vector<int>& K,
                                              int g) {
  TransversalWitness w;
  w.reps = double_coset_common_transversal(G, K, g);
  std::set<int> dc = double_coset(G, K, g);

  auto tiles = [&](bool left) {
    std::set<int> covered;
    for (int r : w.reps)
      for (int k : K) {
        int e = left ? G.mul(r, k) : G.mul(k, r);
        if (!covered.insert(e).second) return false;  // overlap
      }
    return covered == dc;
  };
  w.tiles_left = tiles(true);
  w.tiles_right = tiles(false);

  int n = G.order();
  std::vector<std::vector<Rat>> two_sided, left_span, right_span;
  for (int k1 : K)
    for (int k2 : K) two_sided.push_back(indicator(n, G.mul(G.mul(k1, g), k2)));
  for (int r : w.reps)
    for (int k : K) {
      left_span.push_back(indicator(n, G.mul(r, k)));
      right_span.push_back(indicator(n, G.mul(k, r)));
    }
  w.spans_certified = same_span(two_sided, left_span, n) && same_span(two_sided, right_span, n);
  return w;
}

std::vector<Verdict> check_gmodule(const GModule& M) {
  const FiniteGroup& G = *M.G;
  std::vector<Verdict> out;
  bool id_ok = M.rho[G.identity] == LinMap::identity(M.mdim);
  out.push_back(id_ok ? Verdict::ok("identity acts as identity")
                      : Verdict::fail("identity acts as identity", G.labels[G.identity]));
  bool mult = true;
  std::string w;
  for (int a = 0; a < G.order() && mult; ++a)
    for (int b = 0; b < G.order(); ++b) {
      if (!(compose(M.rho[a], M.rho[b]) == M.rho[G.mul(a, b)])) {
        mult = false;
        w = "(" + G.labels[a] + ", " + G.labels[b] + ")";
        break;
      }
    }
  out.push_back(mult ? Verdict::ok("multiplicativity") : Verdict::fail("multiplicativity", w));
  return out;
}

GModule regular_representation(const FiniteGroup& G) {
  GModule M;
  M.G = &G;
  M.mdim = G.order();
  for (int g = 0; g < G.order(); ++g) {
    LinMap m{G.order(), G.order(), {}};
    for (int h = 0; h < G.order(); ++h) m.cols.push_back(FreeVec::unit(G.mul(g, h)));
    M.rho.push_back(std::move(m));
  }
  return M;
}

std::vector<Rat> dual_module_action(const GModule& M, int g, const std::vector<Rat>& mu) {
  const LinMap& r = M.rho[M.G->inv(g)];
  std::vector<Rat> out(M.mdim, Rat(0));
  for (int j = 0; j < M.mdim; ++j)
    for (const auto& [i, c] : r.cols[j].terms()) out[j] += mu[int(i)] * c;
  return out;
}

std::vector<Rat> contragredient_action(const GModule& M, int g, const std::vector<Rat>& mu) {
  // Build rho(g)^{-1} as a matrix, transpose it, apply to the row.
  RatMatrix R(M.mdim, M.mdim);
  for (int j = 0; j < M.mdim; ++j)
    for (const auto& [i, c] : M.rho[g].cols[j].terms()) R.at(int(i), j) = c;
  RatMatrix Rinv;
  if (!invert(R, Rinv)) throw std::logic_error("representation matrix is singular");
  std::vector<Rat> out(M.mdim, Rat(0));
  for (int j = 0; j < M.mdim; ++j)
    for (int i = 0; i < M.mdim; ++i) out[j] += Rinv.at(i, j) * mu[i];
  return out;
}

Coalgebra subgroup_dual_coalgebra(const FiniteGroup& G, const std::vector<int>& K) {
  if (!is_subgroup(G, K)) throw std::invalid_argument("dual coalgebra base is not a subgroup");
  Coalgebra C;
  int m = int(K.size());
  std::vector<int> pos(G.order(), -1);
  for (int i = 0; i < m; ++i) pos[K[i]] = i;
  for (int i = 0; i < m; ++i) {
    C.labels.push_back("d[" + G.labels[K[i]] + "]");
    C.counit.push_back(K[i] == G.identity ? Rat(1) : Rat(0));
  }
  C.delta.resize(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int prod = G.mul(K[a], K[b]);
      C.delta[pos[prod]].emplace_back(a, b, Rat(1));
    }
  return C;
}

Comodule dual_rep_comodule(const GModule& M, const std::vector<int>& K,
                           std::shared_ptr<const Coalgebra> dual_coalg) {
  Comodule D;
  D.coalg = std::move(dual_coalg);
  for (int i = 0; i < M.mdim; ++i) D.labels.push_back("mu" + std::to_string(i));
  D.delta.resize(M.mdim);
  // Delta mu = sum_k delta_k (x) (mu o rho(k)); on the dual basis row mu_i
  // the composite has coefficients given by the matrix entries of rho(k).
  for (int kpos = 0; kpos < int(K.size()); ++kpos) {
    const LinMap& r = M.rho[K[kpos]];
    for (int j = 0; j < M.mdim; ++j)
      for (const auto& [i, c] : r.cols[j].terms()) {
        // mu_i o rho(k) has coefficient c at mu_j.
        D.delta[int(i)].emplace_back(kpos, j, c);
      }
  }
  return D;
}

FreeVec trivial_character_row(int k_order) {
  FreeVec v;
  for (int i = 0; i < k_order; ++i) v.add(i, Rat(1));
  return v;
}

}  // namespace comeasure
