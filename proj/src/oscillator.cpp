#include "oscillator.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <string>
#include <utility>

namespace comeasure {

namespace {

// Token sort key: lowering modes, then c, then d, then raising modes.
std::pair<int, int> token_key(const OscGen& g) {
  switch (g.kind) {
    case OscGen::Mode:
      return g.m < 0 ? std::pair<int, int>{0, -g.m} : std::pair<int, int>{3, g.m};
    case OscGen::Central:
      return {1, 0};
    default:
      return {2, 0};
  }
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::string monomial_str(const OscMonomial& m) {
  std::ostringstream os;
  if (m.low.empty() && m.cpow == 0 && m.dpow == 0 && m.rai.empty()) return "1";
  for (int i : m.low) os << "a[-" << i << "]";
  for (int k = 0; k < m.cpow; ++k) os << "c";
  for (int k = 0; k < m.dpow; ++k) os << "d";
  for (int j : m.rai) os << "a[" << j << "]";
  return os.str();
}

}  // namespace

int OscMonomial::lowering_degree() const {
  int d = 0;
  for (int i : low) d += i;
  return d;
}

std::vector<OscGen> OscMonomial::word() const {
  std::vector<OscGen> w;
  for (int i : low) w.push_back(OscGen::mode(-i));
  for (int k = 0; k < cpow; ++k) w.push_back(OscGen::central());
  for (int k = 0; k < dpow; ++k) w.push_back(OscGen::derivation());
  for (int j : rai) w.push_back(OscGen::mode(j));
  return w;
}

OscSum straighten_word(const std::vector<OscGen>& word, const Rat& coeff) {
  for (const auto& g : word)
    if (g.kind == OscGen::Mode && g.m == 0)
      throw std::invalid_argument("a_0 is not an oscillator generator");

  OscSum out;
  if (is_zero(coeff)) return out;

  std::deque<std::pair<std::vector<OscGen>, Rat>> work;
  work.push_back({word, coeff});
  while (!work.empty()) {
    auto [w, c] = std::move(work.front());
    work.pop_front();

    size_t bad = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (token_key(w[i]) > token_key(w[i + 1])) {
        bad = i;
        break;
      }
    }

    if (bad == w.size()) {
      OscMonomial m;
      for (const auto& g : w) {
        if (g.kind == OscGen::Central)
          ++m.cpow;
        else if (g.kind == OscGen::Derivation)
          ++m.dpow;
        else if (g.m < 0)
          m.low.push_back(-g.m);
        else
          m.rai.push_back(g.m);
      }
      Rat& slot = out[m];
      slot += c;
      if (is_zero(slot)) out.erase(m);
      continue;
    }

    const OscGen x = w[bad], y = w[bad + 1];
    auto swapped = w;
    std::swap(swapped[bad], swapped[bad + 1]);
    work.push_back({std::move(swapped), c});

    // xy = yx + [x, y]; the bracket contributes at most one extra word.
    if (x.kind == OscGen::Mode && y.kind == OscGen::Mode && x.m == -y.m) {
      auto rest = w;
      rest.erase(rest.begin() + bad, rest.begin() + bad + 2);
      rest.insert(rest.begin() + bad, OscGen::central());
      work.push_back({std::move(rest), c * rat(x.m)});
    } else if (x.kind == OscGen::Derivation && y.kind == OscGen::Mode) {
      auto rest = w;
      rest.erase(rest.begin() + bad);
      work.push_back({std::move(rest), c * rat(y.m)});
    } else if (x.kind == OscGen::Mode && y.kind == OscGen::Derivation) {
      auto rest = w;
      rest.erase(rest.begin() + bad + 1);
      work.push_back({std::move(rest), c * rat(-x.m)});
    }
  }
  return out;
}

OscSum osc_add(const OscSum& a, const OscSum& b) {
  OscSum out = a;
  for (const auto& [m, c] : b) {
    Rat& slot = out[m];
    slot += c;
    if (is_zero(slot)) out.erase(m);
  }
  return out;
}

OscSum osc_scale(const OscSum& a, const Rat& s) {
  OscSum out;
  if (is_zero(s)) return out;
  for (const auto& [m, c] : a) out[m] = c * s;
  return out;
}

OscSum osc_mul(const OscSum& a, const OscSum& b) {
  OscSum out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      auto w = ma.word();
      auto wb = mb.word();
      w.insert(w.end(), wb.begin(), wb.end());
      out = osc_add(out, straighten_word(w, ca * cb));
    }
  }
  return out;
}

int FockModule::energy_of(long label) const {
  if (label >= dim()) throw std::out_of_range("fock label");
  for (int n = trunc; n >= 0; --n)
    if (offset[n] <= label) return n;
  throw std::out_of_range("fock label");
}

int FockModule::index_within(long label) const { return int(label - offset[energy_of(label)]); }

FockModule make_fock(const Rat& level, int trunc) {
  if (trunc < 0) throw std::invalid_argument("negative truncation");
  FockModule F;
  F.level = level;
  F.trunc = trunc;
  long off = 0;
  for (int n = 0; n <= trunc; ++n) {
    F.offset.push_back(off);
    F.parts.push_back(partitions_of(n));
    off += long(F.parts.back().size());
  }
  return F;
}

int partition_index(const FockModule& F, int energy, const std::vector<int>& partition) {
  const auto& slice = F.parts[energy];
  for (size_t i = 0; i < slice.size(); ++i)
    if (slice[i] == partition) return int(i);
  throw std::out_of_range("partition not found");
}

FreeVec fock_apply_gen(const FockModule& F, OscGen g, const FreeVec& v) {
  FreeVec out;
  if (g.kind == OscGen::Central) return F.level * v;
  if (g.kind == OscGen::Derivation) {
    for (const auto& [label, c] : v.terms()) out += rat(-F.energy_of(label)) * c * FreeVec::unit(label);
    return out;
  }
  if (g.m == 0) return out;

  for (const auto& [label, c] : v.terms()) {
    int e = F.energy_of(label);
    const auto& lam = F.parts[e][F.index_within(label)];
    if (g.m < 0) {
      int n = -g.m;
      if (e + n > F.trunc)
        throw TruncationOverflow("state energy " + std::to_string(e + n) +
                                 " exceeds truncation " + std::to_string(F.trunc));
      auto mu = lam;
      mu.insert(std::upper_bound(mu.begin(), mu.end(), n, std::greater<int>()), n);
      out += c * FreeVec::unit(F.flat(e + n, partition_index(F, e + n, mu)));
    } else {
      int n = g.m;
      long mult = std::count(lam.begin(), lam.end(), n);
      if (mult == 0) continue;
      auto mu = lam;
      mu.erase(std::find(mu.begin(), mu.end(), n));
      out += c * rat(n) * rat(mult) * F.level *
             FreeVec::unit(F.flat(e - n, partition_index(F, e - n, mu)));
    }
  }
  return out;
}

FreeVec fock_apply_word(const FockModule& F, const std::vector<OscGen>& word, const FreeVec& v) {
  FreeVec cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = fock_apply_gen(F, *it, cur);
  return cur;
}

FreeVec fock_apply_sum(const FockModule& F, const OscSum& s, const FreeVec& v) {
  FreeVec out;
  for (const auto& [m, c] : s) out += c * fock_apply_word(F, m.word(), v);
  return out;
}

GradedDualElement dual_fock_apply(const FockModule& F, OscGen g, const GradedDualElement& mu) {
  if (g.kind == OscGen::Central) return {mu.energy, F.level * mu.row};
  if (g.kind == OscGen::Derivation) return {mu.energy, rat(mu.energy) * mu.row};
  if (g.m == 0) return {mu.energy, FreeVec()};

  int target = mu.energy - g.m;
  if (target < 0) return {0, FreeVec()};
  if (target > F.trunc)
    throw TruncationOverflow("dual energy " + std::to_string(target) + " exceeds truncation " +
                             std::to_string(F.trunc));

  // (a_m . mu)(v) = -mu(a_{-m} v) for v in the target slice.
  GradedDualElement out{target, FreeVec()};
  for (size_t j = 0; j < F.parts[target].size(); ++j) {
    FreeVec w = fock_apply_gen(F, OscGen::mode(-g.m), FreeVec::unit(F.flat(target, int(j))));
    Rat val;
    for (const auto& [label, c] : w.terms())
      if (F.energy_of(label) == mu.energy) val += c * mu.row.at(F.index_within(label));
    if (!is_zero(val)) out.row += rat(-1) * val * FreeVec::unit(long(j));
  }
  return out;
}

Verdict check_level(const FockModule& F, int m, int n) {
  const std::string law = "dual commutator level";
  int top = F.trunc - std::abs(m) - std::abs(n);
  Rat expected = (m == -n) ? rat(m) * F.level : Rat(0);
  for (int e = 0; e <= top; ++e) {
    for (size_t i = 0; i < F.parts[e].size(); ++i) {
      GradedDualElement mu{e, FreeVec::unit(long(i))};
      auto ab = dual_fock_apply(F, OscGen::mode(m), dual_fock_apply(F, OscGen::mode(n), mu));
      auto ba = dual_fock_apply(F, OscGen::mode(n), dual_fock_apply(F, OscGen::mode(m), mu));
      FreeVec diff = ab.row - ba.row;
      FreeVec want = expected * mu.row;
      if (!(diff == want)) {
        std::ostringstream os;
        os << "(m=" << m << ", n=" << n << ", energy=" << e << ", state=" << i << ")";
        return Verdict::fail(law, os.str());
      }
    }
  }
  return Verdict::ok(law);
}

bool RestrictionReport::passed() const { return all_pass(annihilation); }

RestrictionReport restriction_energy_check(const FockModule& F, int n_max) {
  if (n_max > F.trunc) throw std::invalid_argument("check range exceeds truncation");
  RestrictionReport rep;

  for (int n = 0; n <= n_max; ++n) {
    std::string law = "raising annihilation at energy " + std::to_string(n);
    Verdict v = Verdict::ok(law);
    for (int deg = n + 1; deg <= n + 2 && v.pass; ++deg) {
      for (const auto& word : partitions_of(deg)) {
        for (size_t i = 0; i < F.parts[n].size() && v.pass; ++i) {
          GradedDualElement mu{n, FreeVec::unit(long(i))};
          for (int j : word) mu = dual_fock_apply(F, OscGen::mode(j), mu);
          if (!mu.row.empty()) {
            std::ostringstream os;
            os << "(energy=" << n << ", state=" << i << ", word degree=" << deg << ")";
            v = Verdict::fail(law, os.str());
          }
        }
        if (!v.pass) break;
      }
    }
    rep.annihilation.push_back(v);
  }

  bool ascending = true, descending = true;
  for (int n = 0; n <= n_max; ++n) {
    GradedDualElement mu{n, FreeVec::unit(0)};
    auto dm = dual_fock_apply(F, OscGen::derivation(), mu);
    Rat eig = dm.row.at(0);
    long e = eig.get_num().fits_slong_p() && eig.get_den() == 1 ? eig.get_num().get_si() : 0;
    rep.dual_d_spectrum.push_back(int(e));
    if (e != n) ascending = false;
    if (e != -n) descending = false;
    rep.graded_dims.push_back(long(F.parts[n].size()));
  }
  rep.boundedness = ascending   ? "bounded below"
                    : descending ? "bounded above"
                                 : "irregular";
  return rep;
}

OscWitness quasi_normal_witness_oscillator(const std::vector<OscGen>& word, int degree_cap) {
  int deg = 0;
  for (const auto& g : word)
    if (g.kind == OscGen::Mode && g.m < 0) deg += -g.m;
  if (deg > degree_cap) throw std::invalid_argument("degree bound exceeded");

  OscWitness wit;
  for (int d = 0; d <= deg; ++d) {
    for (const auto& p : partitions_of(d)) {
      OscMonomial m;
      m.low.assign(p.rbegin(), p.rend());
      wit.basis.push_back(m);
    }
  }

  // Left multiplication by the nonnegative part must keep every normal
  // form term's lowering degree within the bound.
  wit.certified = true;
  std::vector<OscGen> gens = {OscGen::central(), OscGen::derivation()};
  for (int j = 1; j <= deg + 1; ++j) gens.push_back(OscGen::mode(j));
  for (const auto& m : wit.basis) {
    for (const auto& g : gens) {
      std::vector<OscGen> w = {g};
      auto mw = m.word();
      w.insert(w.end(), mw.begin(), mw.end());
      for (const auto& [term, c] : straighten_word(w)) {
        (void)c;
        if (term.lowering_degree() > deg) wit.certified = false;
      }
    }
  }
  return wit;
}

std::string osc_monomial_string(const OscMonomial& m) { return monomial_str(m); }

}  // namespace comeasure
