#include "arrzeta/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "arrzeta/error.hpp"
#include "arrzeta/fixtures.hpp"
#include "arrzeta/harness.hpp"
#include "arrzeta/io.hpp"
#include "arrzeta/vmono.hpp"
#include "arrzeta/walls.hpp"
#include "arrzeta/zeta.hpp"

namespace arrzeta::cli {

namespace {

using io::Json;

struct InputOptions {
  std::string file;
  std::string example;
  bool json = false;
};

struct Loaded {
  io::ArrangementFile data;
  std::string example;  // empty when read from a file
};

void add_input(CLI::App* sub, InputOptions& opts) {
  sub->add_option("file", opts.file, "Arrangement JSON file");
  sub->add_option("--example", opts.example, "Built-in arrangement (boolean2, threelines, twofactor, veys)");
  sub->add_flag("--json", opts.json, "Emit a machine-readable JSON report");
}

Loaded load(const InputOptions& opts) {
  if (opts.file.empty() == opts.example.empty()) throw Error("give exactly one of FILE or --example NAME");
  if (!opts.example.empty()) return {fixtures::example(opts.example), opts.example};
  return {io::load_arrangement(opts.file), ""};
}

Json input_echo(const Loaded& in) { return io::to_json(in.data.arrangement, in.data.name); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string index_set_text(const IndexSet& s) {
  std::vector<std::string> parts;
  for (auto i : s) parts.push_back(std::to_string(i + 1));
  return "{" + join(parts, ",") + "}";
}

std::string rationals_text(const std::vector<Rational>& v) {
  std::vector<std::string> parts;
  for (const auto& q : v) parts.push_back(to_string(q));
  return "{" + join(parts, ", ") + "}";
}

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(io::to_json(q));
  return out;
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << "verdict: " << (v.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& w : v.witnesses) out << "  " << w.clause << ": " << w.detail << "\n";
}

std::string poles_text(const PoleReport& p, std::size_t variables) {
  std::vector<std::string> parts;
  if (variables == 1) {
    for (const auto& [v, m] : p.univariate) parts.push_back(to_string(v) + " (order " + std::to_string(m) + ")");
  } else {
    for (const auto& [f, m] : p.multivariate) parts.push_back(to_string(f) + " = 0 (order " + std::to_string(m) + ")");
  }
  return parts.empty() ? "none" : join(parts, ", ");
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << "\n"; }

int cmd_analyze(const InputOptions& opts, std::ostream& out) {
  Loaded in = load(opts);
  const Arrangement& arr = in.data.arrangement;
  IntersectionLattice lattice(arr);
  std::vector<Flat> dense = dense_edges(arr, lattice);
  std::vector<Rational> candidates = candidate_poles(arr);
  Rational threshold = lct(arr);
  MultiPoly chi = char_poly(arr);
  bool essential = is_essential(arr);
  bool indecomposable = is_indecomposable(arr);
  if (opts.json) {
    Json flats = Json::array();
    for (std::size_t k = 0; k < lattice.size(); ++k) {
      flats.push_back(Json{{"indices", io::index_set_json(lattice.flat(k).indices)},
                           {"codim", lattice.flat(k).codim},
                           {"mobius", lattice.mobius(k)}});
    }
    Json dense_json = Json::array();
    Json data = Json::array();
    for (const Flat& w : dense) {
      dense_json.push_back(io::index_set_json(w.indices));
      ResolutionDatum d = resolution_datum(arr, w);
      Json entry{{"indices", io::index_set_json(w.indices)}, {"N", d.N}, {"nu", d.nu}};
      if (!d.ord.empty()) entry["ord"] = d.ord;
      data.push_back(std::move(entry));
    }
    emit(out, Json{{"input", input_echo(in)},
                   {"lattice", Json{{"flat_count", lattice.size()}, {"flats", std::move(flats)},
                                    {"char_poly", to_string(chi, {"t"})}}},
                   {"essential", essential},
                   {"indecomposable", indecomposable},
                   {"dense_edges", std::move(dense_json)},
                   {"resolution_data", std::move(data)},
                   {"lct", io::to_json(threshold)},
                   {"candidate_poles", rationals_json(candidates)}});
    return kSuccess;
  }
  out << "arrangement: " << (in.data.name ? *in.data.name : std::string("(unnamed)")) << ", n = " << arr.dimension()
      << ", r = " << arr.size() << ", degree = " << arr.degree() << "\n";
  out << "flats: " << lattice.size() << " (including the ambient space)\n";
  out << "characteristic polynomial: " << to_string(chi, {"t"}) << "\n";
  out << "essential: " << (essential ? "yes" : "no") << ", indecomposable: " << (indecomposable ? "yes" : "no") << "\n";
  out << "dense edges:\n";
  for (const Flat& w : dense) {
    ResolutionDatum d = resolution_datum(arr, w);
    out << "  " << index_set_text(w.indices) << "  codim " << w.codim << "  N = " << d.N << "  nu = " << d.nu
        << "  candidate " << to_string(make_rational(-d.nu, d.N)) << "\n";
  }
  out << "lct: " << to_string(threshold) << "\n";
  out << "candidate poles: " << rationals_text(candidates) << "\n";
  return kSuccess;
}

struct ZetaOptions {
  bool global = false;
  bool multi = false;
  std::string at;
};

int cmd_zeta(const InputOptions& opts, const ZetaOptions& zo, std::ostream& out) {
  Loaded in = load(opts);
  const Arrangement& arr = in.data.arrangement;
  if (zo.global && !zo.at.empty()) throw Error("--global and --at are mutually exclusive");
  std::optional<RVector> point;
  if (!zo.at.empty()) point = io::parse_point(zo.at);
  ZetaFunction z;
  if (zo.global) {
    z = zo.multi ? multivariate_global_zeta(arr) : global_zeta(arr);
  } else if (point) {
    z = zo.multi ? multivariate_local_zeta(arr, *point) : local_zeta(arr, *point);
  } else {
    z = zo.multi ? multivariate_local_zeta(arr) : local_zeta(arr);
  }
  PoleReport p = poles(z);
  if (opts.json) {
    Json mode{{"global", zo.global}, {"multivariate", zo.multi}};
    if (point) mode["point"] = rationals_json(*point);
    emit(out, Json{{"input", input_echo(in)}, {"mode", std::move(mode)}, {"zeta", io::to_json(z)}, {"poles", io::to_json(p)}});
    return kSuccess;
  }
  out << (zo.global ? "global" : "local") << (zo.multi ? " multivariate" : "") << " topological zeta function";
  if (!zo.global) out << " at " << (point ? "(" + zo.at + ")" : std::string("0"));
  out << ":\n  " << to_string(z) << "\n";
  out << "poles: " << poles_text(p, z.variables) << "\n";
  return kSuccess;
}

std::vector<std::vector<long>> dense_edge_orders(const Arrangement& arr) {
  std::vector<std::vector<long>> ords;
  for (const Flat& w : dense_edges(arr)) {
    std::vector<long> ord(arr.size(), 0);
    for (auto i : w.indices) ord[i] = 1;
    ords.push_back(std::move(ord));
  }
  return ords;
}

struct WallOptions {
  std::string localize;
  std::vector<std::string> separate;
};

int cmd_walls(const InputOptions& opts, const WallOptions& wo, std::ostream& out) {
  Loaded in = load(opts);
  WallSet ws = walls_from_resolution(dense_edge_orders(in.data.arrangement));
  Json report{{"input", input_echo(in)}};
  Json families = Json::array();
  for (const auto& f : ws.families()) families.push_back(io::to_json(f));
  report["families"] = std::move(families);
  std::ostringstream text;
  text << "wall families (coordinates alpha_1..alpha_" << ws.dimension() << "):\n";
  for (const auto& f : ws.families()) text << "  " << to_string(f) << "\n";
  if (!wo.localize.empty()) {
    RVector p = io::parse_point(wo.localize);
    Json inst = Json::array();
    text << "walls through (" << wo.localize << "):\n";
    for (const auto& w : localized_walls(ws, p)) {
      inst.push_back(io::to_json(w));
      text << "  " << to_string(w) << "\n";
    }
    report["localized"] = std::move(inst);
  }
  if (!wo.separate.empty()) {
    if (wo.separate.size() != 2) throw Error("--separate expects two points");
    RVector a = io::parse_point(wo.separate[0]);
    RVector b = io::parse_point(wo.separate[1]);
    Json inst = Json::array();
    auto sep = separating_walls(ws, a, b);
    text << "walls separating (" << wo.separate[0] << ") and (" << wo.separate[1] << "): " << sep.size() << "\n";
    for (const auto& w : sep) {
      inst.push_back(io::to_json(w));
      text << "  " << to_string(w) << "\n";
    }
    text << "same chamber: " << (sep.empty() ? "yes" : "no") << "\n";
    report["separating"] = std::move(inst);
    report["same_chamber"] = sep.empty();
  }
  if (opts.json) {
    emit(out, report);
  } else {
    out << text.str();
  }
  return kSuccess;
}

int cmd_vmono_demo(bool json, std::ostream& out) {
  using namespace vmono;
  WallSet restricted = diag_restricted_walls();
  WallSet full = extend_restricted_walls(restricted);
  struct Sample {
    DiagClass cls;
    RVector alpha;
    const char* label;
  };
  const std::vector<Sample> samples{
      {{0, 0, 2}, {Rational(0), Rational(0)}, "1/(t1-t2)^2"},
      {{0, 0, 1}, {make_rational(1, 4), make_rational(3, 8)}, "1/(t1-t2)"},
      {{1, 0, 1}, {make_rational(3, 4), make_rational(3, 4)}, "t1/(t1-t2)"},
      {{2, 0, 1}, {make_rational(5, 4), make_rational(5, 4)}, "t1^2/(t1-t2)"},
      {{3, 0, 1}, {make_rational(7, 4), make_rational(7, 4)}, "t1^3/(t1-t2)"},
  };
  Json fams = Json::array();
  for (const auto& f : full.families()) fams.push_back(io::to_json(f));
  Json rows = Json::array();
  std::ostringstream text;
  text << "restricted walls: " << to_string(restricted.families().front()) << "\n";
  text << "extended wall set:\n";
  for (const auto& f : full.families()) text << "  " << to_string(f) << "\n";
  text << "generators of V^alpha over V^{0,0}D (class, alpha, member, one level lower member, s1+s2 eigenvalue):\n";
  for (const auto& s : samples) {
    DiagClass lower = s.cls;
    ++lower.k;
    bool member = diag_vres_member(s.cls, s.alpha);
    bool lower_member = diag_vres_member(lower, s.alpha);
    Rational eig = diag_s_eigenvalue(s.cls);
    rows.push_back(Json{{"class", s.label},
                        {"alpha", rationals_json(s.alpha)},
                        {"member", member},
                        {"lower_member", lower_member},
                        {"eigenvalue", io::to_json(eig)}});
    text << "  " << s.label << " at (" << to_string(s.alpha[0]) << ", " << to_string(s.alpha[1]) << "): "
         << (member ? "yes" : "no") << ", " << (lower_member ? "yes" : "no") << ", " << to_string(eig) << "\n";
  }
  RVector a{make_rational(1, 2), make_rational(1, 2)}, b{make_rational(3, 2), make_rational(3, 2)};
  std::vector<long> levels = diag_annihilator(a, b);
  std::vector<std::string> factors;
  for (long l : levels) factors.push_back("(s1 + s2 + " + std::to_string(l) + ")");
  text << "V^(1/2,1/2) / V^(3/2,3/2) is annihilated by " << join(factors, "") << "\n";
  RVector origin{Rational(0), Rational(0)}, half{make_rational(1, 2), make_rational(1, 2)};
  text << "walls through (0,0): " << localized_walls(full, origin).size()
       << ", through (1/2,1/2): " << localized_walls(full, half).size() << "\n";
  if (json) {
    emit(out, Json{{"restricted", io::to_json(restricted.families().front())},
                   {"extended", std::move(fams)},
                   {"generators", std::move(rows)},
                   {"annihilator_levels", levels},
                   {"localized_counts", Json{{"origin", localized_walls(full, origin).size()},
                                             {"half", localized_walls(full, half).size()}}}});
  } else {
    out << text.str();
  }
  return kSuccess;
}

int cmd_nd(const InputOptions& opts, std::ostream& out) {
  Loaded in = load(opts);
  NdReport rep = nd_check(in.data.arrangement);
  if (opts.json) {
    emit(out, Json{{"input", input_echo(in)},
                   {"n", rep.n},
                   {"d", rep.d},
                   {"minus_n_over_d", io::to_json(rep.ratio)},
                   {"is_candidate", rep.is_candidate},
                   {"is_local_pole", rep.is_local_pole},
                   {"predicted_root", io::to_json(rep.ratio)},
                   {"verdict", io::to_json(rep.verdict)}});
  } else {
    out << "n = " << rep.n << ", d = " << rep.d << ", -n/d = " << to_string(rep.ratio) << "\n";
    out << "candidate pole (edge {0}): " << (rep.is_candidate ? "yes" : "no") << "\n";
    out << "pole of the local topological zeta function: "
        << (rep.is_local_pole ? "yes" : "no, " + to_string(rep.ratio) + " is not a pole") << "\n";
    out << "predicted root of b_f: " << to_string(rep.ratio) << "\n";
    print_verdict(out, rep.verdict);
  }
  return rep.verdict.pass ? kSuccess : kVerificationFailed;
}

struct SmcOptions {
  std::string broots;
  bool global = false;
};

int cmd_smc(const InputOptions& opts, const SmcOptions& so, std::ostream& out) {
  Loaded in = load(opts);
  std::vector<Rational> roots;
  if (!so.broots.empty()) {
    roots = io::load_roots(so.broots);
  } else if (auto shipped = in.example.empty() ? std::nullopt : fixtures::example_roots(in.example)) {
    roots = *shipped;
  } else {
    throw Error("smc needs --broots ROOTS.json");
  }
  SmcReport rep = smc_verify(in.data.arrangement, roots, !so.global);
  std::set<Rational> root_set(roots.begin(), roots.end());
  std::vector<Rational> distinct(root_set.begin(), root_set.end());
  if (opts.json) {
    emit(out, Json{{"input", input_echo(in)},
                   {"zeta", so.global ? "global" : "local"},
                   {"poles", rationals_json(rep.poles)},
                   {"roots", rationals_json(distinct)},
                   {"verdict", io::to_json(rep.verdict)}});
  } else {
    out << (so.global ? "global" : "local") << " zeta poles: " << rationals_text(rep.poles) << "\n";
    out << "b_f roots: " << rationals_text(distinct) << "\n";
    print_verdict(out, rep.verdict);
  }
  return rep.verdict.pass ? kSuccess : kVerificationFailed;
}

int cmd_multi_nd(const InputOptions& opts, std::ostream& out) {
  Loaded in = load(opts);
  MultiNdReport rep = multi_nd_check(in.data.arrangement);
  if (opts.json) {
    emit(out, Json{{"input", input_echo(in)},
                   {"hyperplane", io::to_json(rep.hyperplane)},
                   {"is_candidate", rep.is_candidate},
                   {"is_polar", rep.is_polar},
                   {"verdict", io::to_json(rep.verdict)}});
  } else {
    out << "hyperplane: " << to_string(rep.hyperplane) << " = 0\n";
    out << "candidate (edge {0}): " << (rep.is_candidate ? "yes" : "no") << "\n";
    out << "component of the polar locus of the local zeta function: " << (rep.is_polar ? "yes" : "no") << "\n";
    print_verdict(out, rep.verdict);
  }
  return rep.verdict.pass ? kSuccess : kVerificationFailed;
}

int cmd_multi_smc(const InputOptions& opts, const std::string& zero_locus, std::ostream& out) {
  Loaded in = load(opts);
  std::vector<AffineForm> locus = io::load_zero_locus(zero_locus);
  MultiSmcReport rep = multi_smc_verify(in.data.arrangement, locus);
  if (opts.json) {
    Json polar = Json::array();
    for (const auto& f : rep.polar_locus) polar.push_back(io::to_json(f));
    emit(out, Json{{"input", input_echo(in)}, {"polar_locus", std::move(polar)}, {"verdict", io::to_json(rep.verdict)}});
  } else {
    std::vector<std::string> parts;
    for (const auto& f : rep.polar_locus) parts.push_back(to_string(f));
    out << "polar locus of the global zeta function: {" << join(parts, ", ") << "}\n";
    print_verdict(out, rep.verdict);
  }
  return rep.verdict.pass ? kSuccess : kVerificationFailed;
}

int cmd_adapted(const InputOptions& opts, std::ostream& out) {
  Loaded in = load(opts);
  RVector beta = adapted_vector(in.data.arrangement);
  Verdict v = validate_adapted(in.data.arrangement, beta);
  if (opts.json) {
    emit(out, Json{{"input", input_echo(in)}, {"beta", rationals_json(beta)}, {"verdict", io::to_json(v)}});
  } else {
    std::vector<std::string> parts;
    for (const auto& b : beta) parts.push_back(to_string(b));
    out << "adapted vector: (" << join(parts, ", ") << ")\n";
    print_verdict(out, v);
  }
  return v.pass ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of hyperplane arrangements and monodromy checks", "arrzeta"};
  app.require_subcommand(1);

  InputOptions analyze_in, zeta_in, walls_in, nd_in, smc_in, mnd_in, msmc_in, adapted_in;
  ZetaOptions zeta_opts;
  WallOptions wall_opts;
  SmcOptions smc_opts;
  std::string zero_locus;
  bool vmono_json = false;

  auto* analyze = app.add_subcommand("analyze", "Lattice, dense edges, lct and candidate poles");
  add_input(analyze, analyze_in);

  auto* zeta = app.add_subcommand("zeta", "Topological zeta function and its poles");
  add_input(zeta, zeta_in);
  zeta->add_flag("--global", zeta_opts.global, "Global instead of local zeta function");
  zeta->add_flag("--multi", zeta_opts.multi, "Multivariate zeta function of the factorization");
  zeta->add_option("--at", zeta_opts.at, "Point of the divisor for the local zeta function, e.g. 0,1");

  auto* walls = app.add_subcommand("walls", "Wall set of the dense edges");
  add_input(walls, walls_in);
  walls->add_option("--localize", wall_opts.localize, "List the walls through a point");
  walls->add_option("--separate", wall_opts.separate, "List the walls separating two points")->expected(2);

  auto* vmono_demo = app.add_subcommand("vmono-demo", "Diagonal embedding example");
  vmono_demo->add_flag("--json", vmono_json, "Emit JSON");

  auto* nd = app.add_subcommand("nd", "Report -n/d against candidate poles and local zeta poles");
  add_input(nd, nd_in);

  auto* smc = app.add_subcommand("smc", "Check that zeta poles are b_f roots");
  add_input(smc, smc_in);
  smc->add_option("--broots", smc_opts.broots, "JSON file with the roots of b_f");
  smc->add_flag("--global", smc_opts.global, "Use the global zeta function");

  auto* multi_nd = app.add_subcommand("multi-nd", "Multivariate n/d hyperplane report");
  add_input(multi_nd, mnd_in);

  auto* multi_smc = app.add_subcommand("multi-smc", "Check the polar locus against a zero locus");
  add_input(multi_smc, msmc_in);
  multi_smc->add_option("--zero-locus", zero_locus, "JSON file with the zero locus hyperplanes")->required();

  auto* adapted = app.add_subcommand("adapted", "Vector adapted to the edge {0}");
  add_input(adapted, adapted_in);

  std::vector<std::string> owned{"arrzeta"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : owned) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_in, out);
    if (*zeta) return cmd_zeta(zeta_in, zeta_opts, out);
    if (*walls) return cmd_walls(walls_in, wall_opts, out);
    if (*vmono_demo) return cmd_vmono_demo(vmono_json, out);
    if (*nd) return cmd_nd(nd_in, out);
    if (*smc) return cmd_smc(smc_in, smc_opts, out);
    if (*multi_nd) return cmd_multi_nd(mnd_in, out);
    if (*multi_smc) return cmd_multi_smc(msmc_in, zero_locus, out);
    if (*adapted) return cmd_adapted(adapted_in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace arrzeta::cli
