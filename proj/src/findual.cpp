#include "findual.hpp"

#include <stdexcept>

namespace comeasure {

FiniteDualElement fd_from_recurrence(const std::vector<Rat>& monic_p, const std::vector<Rat>& initial) {
  if (monic_p.size() < 2) throw std::invalid_argument("modulus must have positive degree");
  if (!(monic_p.back() == Rat(1))) throw std::invalid_argument("modulus must be monic");
  if (initial.size() + 1 != monic_p.size())
    throw std::invalid_argument("initial segment must have length deg p");
  return FiniteDualElement{monic_p, initial};
}

Rat fd_evaluate(const FiniteDualElement& a, long n) {
  int d = a.deg();
  if (n < d) return a.init[n];
  // Roll the recurrence x^d = -(p_0 + p_1 x + ... + p_{d-1} x^{d-1}).
  std::vector<Rat> window = a.init;
  for (long m = d; m <= n; ++m) {
    Rat next(0);
    for (int j = 0; j < d; ++j) next -= a.modulus[j] * window[j];
    for (int j = 0; j + 1 < d; ++j) window[j] = window[j + 1];
    window[d - 1] = next;
  }
  return window[d - 1];
}

std::vector<Rat> fd_reduce_power(const FiniteDualElement& a, long n) {
  int d = a.deg();
  std::vector<Rat> r(d, Rat(0));
  if (n < d) {
    r[n] = 1;
    return r;
  }
  r[d - 1] = 1;
  // Multiply by x and reduce, (n - d + 1) times.
  for (long m = d - 1; m < n; ++m) {
    Rat top = r[d - 1];
    for (int j = d - 1; j > 0; --j) r[j] = r[j - 1] - top * a.modulus[j];
    r[0] = -top * a.modulus[0];
  }
  return r;
}

RatMatrix fd_delta(const FiniteDualElement& a) {
  int d = a.deg();
  RatMatrix H(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) H.at(i, j) = fd_evaluate(a, i + j);
  return H;
}

Rat fd_delta_pair(const FiniteDualElement& a, long i, long j) {
  std::vector<Rat> ri = fd_reduce_power(a, i), rj = fd_reduce_power(a, j);
  RatMatrix H = fd_delta(a);
  Rat out(0);
  for (int u = 0; u < a.deg(); ++u)
    for (int v = 0; v < a.deg(); ++v) out += ri[u] * H.at(u, v) * rj[v];
  return out;
}

bool fd_is_grouplike(const FiniteDualElement& a, int bound) {
  for (int i = 0; i <= bound; ++i)
    for (int j = 0; j <= bound; ++j)
      if (!(fd_evaluate(a, i + j) == fd_evaluate(a, i) * fd_evaluate(a, j))) return false;
  return true;
}

FiniteDualElement fd_eval_at_one() { return fd_from_recurrence({rat(-1), rat(1)}, {rat(1)}); }

FiniteDualElement fd_geometric2() { return fd_from_recurrence({rat(-2), rat(1)}, {rat(1)}); }

FiniteDualElement fd_fibonacci() {
  return fd_from_recurrence({rat(-1), rat(-1), rat(1)}, {rat(0), rat(1)});
}

FiniteDualElement fd_ramp() {
  return fd_from_recurrence({rat(1), rat(-2), rat(1)}, {rat(1), rat(2)});
}

}  // namespace comeasure
