#include "run.hpp"

#include <filesystem>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "builtins.hpp"
#include "closure.hpp"
#include "connection.hpp"
#include "extension.hpp"
#include "findual.hpp"
#include "group.hpp"
#include "jsonio.hpp"
#include "liealg.hpp"
#include "oscillator.hpp"

namespace comeasure {

namespace {

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) out += ' ';
    out += args[i];
  }
  return out;
}

Structure resolve_structure(const std::string& ref) {
  if (std::filesystem::exists(ref)) return load_structure_path(ref);
  try {
    return builtin_structure(ref);
  } catch (const std::out_of_range&) {
    throw JsonFormatError("no such file or builtin \"" + ref + "\"");
  }
}

void add_sign_note(Report& rep) {
  rep.note("sign-convention",
           "cocycle values fix the convention that the left tensor leg applies to the first "
           "factor; the opposite ordering negates every value, so only the magnitude is "
           "convention-free");
}

int sl2_label(const std::string& s) {
  if (s == "e") return 0;
  if (s == "h") return 1;
  if (s == "f") return 2;
  throw std::invalid_argument("unknown sl2 basis label \"" + s + "\" (want e, h, or f)");
}

FiniteDualElement dual_builtin(const std::string& name) {
  if (name == "eval1") return fd_eval_at_one();
  if (name == "geometric2") return fd_geometric2();
  if (name == "fibonacci") return fd_fibonacci();
  if (name == "ramp") return fd_ramp();
  throw std::invalid_argument("unknown sequence builtin \"" + name + "\"");
}

// Flattened dual action of one generator, for closure sweeps: functionals
// are stored over the flat Fock labels, sliced by energy.
FreeVec flat_dual_apply(const FockModule& F, OscGen g, const FreeVec& v) {
  std::map<int, FreeVec> slices;
  for (const auto& [label, c] : v.terms())
    slices[F.energy_of(label)] += c * FreeVec::unit(F.index_within(label));
  FreeVec out;
  for (const auto& [e, row] : slices) {
    GradedDualElement res = dual_fock_apply(F, g, {e, row});
    for (const auto& [j, c] : res.row.terms())
      out += c * FreeVec::unit(F.flat(res.energy, int(j)));
  }
  return out;
}

void run_verify(const std::string& file, const std::string& builtin, const std::string& suite,
                Report& rep) {
  if (suite == "measuring") {
    if (builtin.empty())
      throw std::invalid_argument("the measuring suite needs --builtin (no file schema for it)");
    rep.verdicts = run_builtin_measuring(builtin);
    return;
  }
  Structure s;
  if (!builtin.empty())
    s = builtin_structure(builtin);
  else if (!file.empty())
    s = resolve_structure(file);
  else
    throw std::invalid_argument("verify needs --file or --builtin");

  if (suite == "coalgebra") {
    if (!s.coalgebra) throw std::invalid_argument("suite coalgebra needs a coalgebra structure");
    rep.verdicts = check_coalgebra(*s.coalgebra);
  } else if (suite == "comodule") {
    if (!s.comodule) throw std::invalid_argument("suite comodule needs a comodule structure");
    rep.verdicts = check_comodule(*s.comodule);
  } else if (suite == "connection") {
    if (!s.koszul) throw std::invalid_argument("suite connection needs a koszul structure");
    rep.verdicts = check_loose_connection(make_koszul_connection(*s.koszul), 4);
  } else {
    throw std::invalid_argument("unknown suite \"" + suite + "\"");
  }
}

void run_cocycle(const std::string& family, long v, long w, const std::string& xi,
                 const std::string& psi, bool table, long range, Report& rep) {
  auto value = [&](long a, long b) -> Rat {
    if (family == "heisenberg") return cocycle_value(heisenberg_scheme(), int(a), int(b));
    if (family == "virasoro") return cocycle_value(virasoro_scheme(), int(a), int(b));
    if (family == "loop-sl2")
      return loop_cocycle(sl2(), int(a), sl2_label(xi), int(b), sl2_label(psi));
    throw std::invalid_argument("unknown family \"" + family + "\"");
  };
  if (family == "heisenberg") add_sign_note(rep);
  if (table) {
    for (long m = 1; m <= range; ++m) rep.row(family, {{"v", m}, {"w", -m}}, value(m, -m));
  } else {
    rep.row(family, {{"v", v}, {"w", w}}, value(v, w));
  }
}

void run_dual(bool have_fib, long fib_n, const std::vector<long>& delta, const std::string& elt,
              const std::string& group_ref, const std::string& k_ref, const std::string& g_label,
              Report& rep) {
  if (have_fib) {
    if (fib_n < 0) throw std::invalid_argument("--fib wants a nonnegative index");
    auto fib = fd_fibonacci();
    for (long n = 0; n <= fib_n; ++n) rep.row("fibonacci", {{"n", n}}, fd_evaluate(fib, n));
    return;
  }
  if (!delta.empty()) {
    auto a = dual_builtin(elt);
    if (delta.size() != 2 || delta[0] < 0 || delta[1] < 0)
      throw std::invalid_argument("--delta wants two nonnegative indices");
    rep.row("delta-pairing", {{"i", delta[0]}, {"j", delta[1]}},
            fd_delta_pair(a, int(delta[0]), int(delta[1])));
    return;
  }
  if (!group_ref.empty()) {
    Structure s = resolve_structure(group_ref);
    if (!s.group) throw std::invalid_argument("--group wants a group structure");
    const FiniteGroup& G = *s.group;
    std::vector<int> gens;
    std::stringstream ss(k_ref);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      int idx = G.index_of(tok);
      if (idx < 0) throw std::invalid_argument("unknown group element \"" + tok + "\"");
      gens.push_back(idx);
    }
    std::vector<int> K = subgroup_closure(G, gens);
    if (g_label.empty()) throw std::invalid_argument("--group wants --g as well");
    int g = G.index_of(g_label);
    if (g < 0) throw std::invalid_argument("unknown group element \"" + g_label + "\"");
    TransversalWitness wit = quasi_normal_witness_group(G, K, g);
    rep.verdicts.push_back(wit.tiles_left
                               ? Verdict::ok("transversal tiles left cosets")
                               : Verdict::fail("transversal tiles left cosets", "g=" + g_label));
    rep.verdicts.push_back(wit.tiles_right
                               ? Verdict::ok("transversal tiles right cosets")
                               : Verdict::fail("transversal tiles right cosets", "g=" + g_label));
    rep.verdicts.push_back(wit.spans_certified
                               ? Verdict::ok("span equalities certified")
                               : Verdict::fail("span equalities certified", "g=" + g_label));
    rep.row("transversal", {{"g", g}, {"subgroup-order", long(K.size())}},
            rat(long(wit.reps.size())));
    return;
  }
  throw std::invalid_argument("dual wants one of --fib, --delta, --group");
}

void run_fock(long level, long trunc, const std::string& check, Report& rep) {
  if (trunc < 0) throw std::invalid_argument("--truncate wants a nonnegative bound");
  FockModule F = make_fock(rat(level), int(trunc));
  if (check == "level") {
    for (int m = -3; m <= 3; ++m) {
      for (int n = -3; n <= 3; ++n) {
        if (m == 0 || n == 0) continue;
        Verdict v = check_level(F, m, n);
        v.law += " (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
        rep.verdicts.push_back(v);
      }
    }
    return;
  }
  if (check == "restriction") {
    int n_max = int(std::min(trunc, 5L));
    RestrictionReport rr = restriction_energy_check(F, n_max);
    rep.verdicts = rr.annihilation;
    std::ostringstream os;
    for (size_t i = 0; i < rr.dual_d_spectrum.size(); ++i)
      os << (i ? "," : "") << rr.dual_d_spectrum[i];
    os << " " << rr.boundedness;
    rep.note("d-spectrum", os.str());
    for (int n = 0; n <= n_max; ++n) rep.row("graded-dim", {{"n", n}}, rat(rr.graded_dims[n]));
    return;
  }
  if (check == "locally-finite") {
    std::vector<std::function<FreeVec(const FreeVec&)>> ops;
    ops.push_back([&F](const FreeVec& v) { return flat_dual_apply(F, OscGen::central(), v); });
    ops.push_back([&F](const FreeVec& v) { return flat_dual_apply(F, OscGen::derivation(), v); });
    for (int j = 1; j <= int(trunc); ++j)
      ops.push_back([&F, j](const FreeVec& v) { return flat_dual_apply(F, OscGen::mode(j), v); });
    std::vector<int> energies = {0};
    if (trunc >= 1) energies.push_back(1);
    bool all_finite = true;
    for (int e : energies) {
      ClosureResult res = locally_finite_closure(ops, FreeVec::unit(F.flat(e, 0)), 200);
      if (res.status != ClosureStatus::Finite) all_finite = false;
      rep.row("closure-dim", {{"energy", e}},
              res.status == ClosureStatus::Finite ? rat(res.dim()) : rat(-1));
    }
    rep.verdicts.push_back(all_finite
                               ? Verdict::ok("locally finite under the nonnegative part")
                               : Verdict::fail("locally finite under the nonnegative part", ""));
    return;
  }
  throw std::invalid_argument("unknown fock check \"" + check + "\"");
}

}  // namespace

RunResult run_command(const std::vector<std::string>& args) {
  RunResult res;
  res.report.command = join_args(args);

  CLI::App app{"exact coalgebra measurings, cocycles, and dual structure checks"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "run an axiom or law suite on a structure");
  std::string vfile, vbuiltin, vsuite;
  verify->add_option("--file", vfile, "structure file");
  verify->add_option("--builtin", vbuiltin, "builtin structure or measuring setup name");
  verify->add_option("--suite", vsuite, "which laws to check")
      ->required()
      ->check(CLI::IsMember({"coalgebra", "comodule", "measuring", "connection"}));

  auto* cocycle = app.add_subcommand("cocycle", "central extension cocycle values");
  std::string family, xi = "e", psi = "f";
  long cv = 0, cw = 0, range = 4;
  bool table = false;
  cocycle->add_option("--family", family, "cocycle family")
      ->required()
      ->check(CLI::IsMember({"heisenberg", "virasoro", "loop-sl2"}));
  auto* vopt = cocycle->add_option("--v", cv, "first index");
  auto* wopt = cocycle->add_option("--w", cw, "second index");
  cocycle->add_option("--xi", xi, "first sl2 leg (loop family)");
  cocycle->add_option("--psi", psi, "second sl2 leg (loop family)");
  auto* topt = cocycle->add_flag("--table", table, "tabulate v=1..range against w=-v");
  cocycle->add_option("--range", range, "table range");
  vopt->excludes(topt);
  wopt->excludes(topt);

  auto* dual = app.add_subcommand("dual", "finite dual and group dual computations");
  long fib_n = -1;
  std::vector<long> delta;
  std::string elt = "fibonacci", group_ref, k_ref, g_label;
  auto* fopt = dual->add_option("--fib", fib_n, "tabulate the recurrence functional up to n");
  dual->add_option("--delta", delta, "pairing indices a b")->expected(2);
  dual->add_option("--elt", elt, "sequence builtin for --delta");
  dual->add_option("--group", group_ref, "group file or builtin");
  dual->add_option("--k", k_ref, "subgroup generators, comma separated labels");
  dual->add_option("--g", g_label, "double coset representative label");

  auto* fock = app.add_subcommand("fock", "oscillator module checks");
  long level = 1, trunc = 8;
  std::string check;
  fock->add_option("--level", level, "central charge");
  fock->add_option("--truncate", trunc, "energy truncation");
  fock->add_option("--check", check, "which property to verify")
      ->required()
      ->check(CLI::IsMember({"level", "restriction", "locally-finite"}));

  std::vector<const char*> argv;
  argv.push_back("comeasure");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    res.report.note("help", app.help());
    res.format = format;
    return res;
  } catch (const CLI::ParseError& e) {
    res.report.note("error", e.what());
    res.exit_code = 2;
    res.format = format;
    return res;
  }
  res.format = format;

  try {
    if (verify->parsed()) {
      run_verify(vfile, vbuiltin, vsuite, res.report);
    } else if (cocycle->parsed()) {
      if (!table && (vopt->count() == 0 || wopt->count() == 0))
        throw std::invalid_argument("cocycle wants --v and --w, or --table");
      run_cocycle(family, cv, cw, xi, psi, table, range, res.report);
    } else if (dual->parsed()) {
      run_dual(fopt->count() > 0, fib_n, delta, elt, group_ref, k_ref, g_label, res.report);
    } else if (fock->parsed()) {
      run_fock(level, trunc, check, res.report);
    }
  } catch (const std::exception& e) {
    res.report.note("error", e.what());
    res.exit_code = 2;
    return res;
  }

  if (!res.report.passed()) res.exit_code = 1;
  return res;
}

}  // namespace comeasure
