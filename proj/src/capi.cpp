#include "comeasure.h"

#include <cstring>
#include <string>
#include <vector>

#include "band.hpp"
#include "builtins.hpp"
#include "connection.hpp"
#include "extension.hpp"
#include "findual.hpp"
#include "jsonio.hpp"
#include "liealg.hpp"
#include "oscillator.hpp"
#include "report.hpp"
#include "run.hpp"

using namespace comeasure;

struct cm_band {
  BandOperator op;
};
struct cm_structure {
  Structure s;
};
struct cm_report {
  Report rep;
  int exit_code = 0;
  std::string format = "json";
};

namespace {

thread_local std::string g_error;

cm_status fail(cm_status st, const std::string& msg) {
  g_error = msg;
  return st;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cm_status rat_out(const Rat& r, int64_t* num, int64_t* den) {
  Int n = r.get_num(), d = r.get_den();
  if (!fits_int64(n) || !fits_int64(d)) return fail(CM_ERANGE, "value does not fit int64");
  if (num) *num = to_int64(n);
  if (den) *den = to_int64(d);
  return CM_OK;
}

// Runs the body, translating exceptions into statuses.
template <typename F>
cm_status guarded(F&& body) {
  try {
    return body();
  } catch (const DivergentTraceError& e) {
    return fail(CM_EDIVERGENT, e.what());
  } catch (const JsonFormatError& e) {
    return fail(CM_EINVAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CM_EINVAL, e.what());
  } catch (const std::out_of_range& e) {
    return fail(CM_EINVAL, e.what());
  } catch (const std::exception& e) {
    return fail(CM_EINTERNAL, e.what());
  }
}

cm_status need(bool ok, const char* what) {
  return ok ? CM_OK : fail(CM_EINVAL, std::string("null ") + what);
}

int sl2_index(const char* s) {
  if (s == nullptr) throw std::invalid_argument("null sl2 label");
  std::string t(s);
  if (t == "e") return 0;
  if (t == "h") return 1;
  if (t == "f") return 2;
  throw std::invalid_argument("unknown sl2 basis label \"" + t + "\"");
}

FiniteDualElement dual_by_name(const char* name) {
  if (name == nullptr) throw std::invalid_argument("null builtin name");
  std::string t(name);
  if (t == "eval1") return fd_eval_at_one();
  if (t == "geometric2") return fd_geometric2();
  if (t == "fibonacci") return fd_fibonacci();
  if (t == "ramp") return fd_ramp();
  throw std::invalid_argument("unknown sequence builtin \"" + t + "\"");
}

}  // namespace

extern "C" {

const char* cm_version(void) { return "0.1.0"; }

const char* cm_last_error(void) { return g_error.c_str(); }

void cm_string_free(char* s) { delete[] s; }

cm_status cm_band_shift(int offset, cm_band** out) {
  if (cm_status st = need(out, "out"); st != CM_OK) return st;
  return guarded([&] {
    *out = new cm_band{BandOperator::shift(offset)};
    return CM_OK;
  });
}

cm_status cm_band_weighted_shift(int offset, cm_band** out) {
  if (cm_status st = need(out, "out"); st != CM_OK) return st;
  return guarded([&] {
    *out = new cm_band{BandOperator::witt(offset)};
    return CM_OK;
  });
}

cm_status cm_band_identity(cm_band** out) {
  if (cm_status st = need(out, "out"); st != CM_OK) return st;
  return guarded([&] {
    *out = new cm_band{BandOperator::identity_op(1)};
    return CM_OK;
  });
}

cm_status cm_band_compose(const cm_band* f, const cm_band* g, cm_band** out) {
  if (cm_status st = need(f && g && out, "argument"); st != CM_OK) return st;
  return guarded([&] {
    *out = new cm_band{f->op.compose(g->op)};
    return CM_OK;
  });
}

cm_status cm_band_add(const cm_band* f, const cm_band* g, cm_band** out) {
  if (cm_status st = need(f && g && out, "argument"); st != CM_OK) return st;
  return guarded([&] {
    *out = new cm_band{f->op + g->op};
    return CM_OK;
  });
}

cm_status cm_band_sub(const cm_band* f, const cm_band* g, cm_band** out) {
  if (cm_status st = need(f && g && out, "argument"); st != CM_OK) return st;
  return guarded([&] {
    *out = new cm_band{f->op - g->op};
    return CM_OK;
  });
}

cm_status cm_band_scale(const cm_band* f, int64_t num, int64_t den, cm_band** out) {
  if (cm_status st = need(f && out, "argument"); st != CM_OK) return st;
  return guarded([&] {
    *out = new cm_band{f->op.scale(rat(Int(long(num)), Int(long(den))))};
    return CM_OK;
  });
}

cm_status cm_band_tau(const cm_band* f, int64_t* num, int64_t* den) {
  if (cm_status st = need(f, "band"); st != CM_OK) return st;
  return guarded([&] { return rat_out(f->op.tau(), num, den); });
}

cm_status cm_band_equal(const cm_band* f, const cm_band* g, int* out) {
  if (cm_status st = need(f && g && out, "argument"); st != CM_OK) return st;
  return guarded([&] {
    *out = (f->op == g->op) ? 1 : 0;
    return CM_OK;
  });
}

void cm_band_free(cm_band* f) { delete f; }

cm_status cm_structure_load(const char* json_text, cm_structure** out) {
  if (cm_status st = need(json_text && out, "argument"); st != CM_OK) return st;
  return guarded([&] {
    *out = new cm_structure{load_structure_text(json_text)};
    return CM_OK;
  });
}

cm_status cm_structure_builtin(const char* name, cm_structure** out) {
  if (cm_status st = need(name && out, "argument"); st != CM_OK) return st;
  return guarded([&] {
    *out = new cm_structure{builtin_structure(name)};
    return CM_OK;
  });
}

cm_status cm_structure_kind(const cm_structure* s, char** out) {
  if (cm_status st = need(s && out, "argument"); st != CM_OK) return st;
  *out = dup_string(s->s.kind);
  return CM_OK;
}

cm_status cm_structure_to_json(const cm_structure* s, char** out) {
  if (cm_status st = need(s && out, "argument"); st != CM_OK) return st;
  return guarded([&] {
    *out = dup_string(save_structure(s->s).dump(2));
    return CM_OK;
  });
}

void cm_structure_free(cm_structure* s) { delete s; }

cm_status cm_verify(const cm_structure* s, const char* suite, cm_report** out) {
  if (cm_status st = need(s && suite && out, "argument"); st != CM_OK) return st;
  return guarded([&]() -> cm_status {
    std::string which(suite);
    Report rep;
    if (which == "coalgebra") {
      if (!s->s.coalgebra) return fail(CM_EINVAL, "structure is not a coalgebra");
      rep.verdicts = check_coalgebra(*s->s.coalgebra);
    } else if (which == "comodule") {
      if (!s->s.comodule) return fail(CM_EINVAL, "structure is not a comodule");
      rep.verdicts = check_comodule(*s->s.comodule);
    } else if (which == "connection") {
      if (!s->s.koszul) return fail(CM_EINVAL, "structure is not a connection");
      rep.verdicts = check_loose_connection(make_koszul_connection(*s->s.koszul), 4);
    } else {
      return fail(CM_EINVAL, "unknown suite \"" + which + "\"");
    }
    bool ok = rep.passed();
    *out = new cm_report{std::move(rep), ok ? 0 : 1};
    return ok ? CM_OK : CM_CHECK_FAILED;
  });
}

cm_status cm_cocycle(const char* family, int v, int w, int64_t* num, int64_t* den) {
  if (cm_status st = need(family, "family"); st != CM_OK) return st;
  return guarded([&]() -> cm_status {
    std::string f(family);
    Rat val;
    if (f == "heisenberg")
      val = cocycle_value(heisenberg_scheme(), v, w);
    else if (f == "virasoro")
      val = cocycle_value(virasoro_scheme(), v, w);
    else
      return fail(CM_EINVAL, "unknown family \"" + f + "\"");
    return rat_out(val, num, den);
  });
}

cm_status cm_loop_cocycle(int v, const char* xi, int w, const char* psi, int64_t* num,
                          int64_t* den) {
  return guarded([&] {
    Rat val = loop_cocycle(sl2(), v, sl2_index(xi), w, sl2_index(psi));
    return rat_out(val, num, den);
  });
}

cm_status cm_killing_sl2(const char* xi, const char* psi, int64_t* out) {
  if (cm_status st = need(out, "out"); st != CM_OK) return st;
  return guarded([&]() -> cm_status {
    LieAlgebraFD L = sl2();
    Rat val = killing_form(L, sl2_index(xi), sl2_index(psi));
    int64_t num, den;
    cm_status st = rat_out(val, &num, &den);
    if (st != CM_OK) return st;
    if (den != 1) return fail(CM_EINTERNAL, "killing form value is not an integer");
    *out = num;
    return CM_OK;
  });
}

cm_status cm_dual_fibonacci(int n, int64_t* out) {
  if (cm_status st = need(out, "out"); st != CM_OK) return st;
  return guarded([&]() -> cm_status {
    if (n < 0) return fail(CM_EINVAL, "negative index");
    Rat val = fd_evaluate(fd_fibonacci(), n);
    int64_t num, den;
    cm_status st = rat_out(val, &num, &den);
    if (st != CM_OK) return st;
    *out = num;
    return CM_OK;
  });
}

cm_status cm_dual_delta_pair(const char* builtin, int i, int j, int64_t* num, int64_t* den) {
  return guarded([&]() -> cm_status {
    if (i < 0 || j < 0) return fail(CM_EINVAL, "negative index");
    return rat_out(fd_delta_pair(dual_by_name(builtin), i, j), num, den);
  });
}

cm_status cm_fock_check(int level, int truncate, const char* which, cm_report** out) {
  if (cm_status st = need(which && out, "argument"); st != CM_OK) return st;
  return guarded([&]() -> cm_status {
    std::vector<std::string> args = {"fock",    "--level",          std::to_string(level),
                                     "--truncate", std::to_string(truncate), "--check",
                                     which};
    RunResult res = run_command(args);
    if (res.exit_code == 2) return fail(CM_EINVAL, "fock check rejected its arguments");
    *out = new cm_report{std::move(res.report), res.exit_code};
    return res.exit_code == 0 ? CM_OK : CM_CHECK_FAILED;
  });
}

cm_status cm_run(int argc, const char* const* argv, cm_report** out, int* exit_code) {
  if (cm_status st = need(out && (argc == 0 || argv), "argument"); st != CM_OK) return st;
  return guarded([&] {
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) args.push_back(argv[i] ? argv[i] : "");
    RunResult res = run_command(args);
    if (exit_code) *exit_code = res.exit_code;
    *out = new cm_report{std::move(res.report), res.exit_code, res.format};
    return CM_OK;
  });
}

cm_status cm_report_passed(const cm_report* r, int* out) {
  if (cm_status st = need(r && out, "argument"); st != CM_OK) return st;
  *out = r->rep.passed() ? 1 : 0;
  return CM_OK;
}

cm_status cm_report_render(const cm_report* r, const char* format, char** out) {
  if (cm_status st = need(r && out, "argument"); st != CM_OK) return st;
  return guarded([&] {
    *out = dup_string(emit_report(r->rep, format ? format : r->format));
    return CM_OK;
  });
}

void cm_report_free(cm_report* r) { delete r; }

}  // extern "C"
