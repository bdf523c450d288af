#include "hyperent/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "hyperent/error.hpp"
#include "hyperent/randomizer.hpp"
#include "hyperent/sign_state.hpp"
#include "hyperent/stabilizer.hpp"
#include "hyperent/sweep.hpp"
#include "hyperent/witness.hpp"

namespace hyperent {
namespace {

struct Selector {
  std::string family;
  std::string n;
  std::string catalog;
  std::string name;
  std::string hypergraph;
};

void add_selector(CLI::App* cmd, Selector& s) {
  cmd->add_option("--family", s.family, "family generator (clover, flower, star, single-edge, complete-k-uniform, edgeless)");
  cmd->add_option("--n", s.n, "vertex count for --family");
  cmd->add_option("--catalog", s.catalog, "catalog file");
  cmd->add_option("--name", s.name, "record name within --catalog");
  cmd->add_option("--hypergraph", s.hypergraph, "inline record, e.g. \"vertices=4; edges={1,2},{1,2,3,4}\"");
}

int parse_int(const std::string& text, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + ": expected an integer, got '" + text + "'");
  }
  return v;
}

Hypergraph resolve(const Selector& s) {
  const int picked = !s.family.empty() + !s.catalog.empty() + !s.hypergraph.empty();
  if (picked != 1) {
    throw Error(ErrorKind::InvalidArgument, "select the hypergraph with exactly one of --family/--n, --catalog/--name, --hypergraph");
  }
  if (!s.family.empty()) {
    if (s.n.empty()) throw Error(ErrorKind::InvalidArgument, "--family needs --n");
    return family(s.family, parse_int(s.n, "--n"));
  }
  if (!s.catalog.empty()) {
    if (s.name.empty()) throw Error(ErrorKind::InvalidArgument, "--catalog needs --name");
    const auto catalog = load_catalog(s.catalog);
    return find_by_name(catalog, s.name);
  }
  return parse_hypergraph(s.hypergraph);
}

std::string label(const Hypergraph& h) {
  return h.name().empty() ? to_inline_string(h) : h.name() + ": " + to_inline_string(h);
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string bits(std::size_t x, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += (x >> i & 1u) ? '1' : '0';
  return s;
}

std::string edge_list(const std::vector<EdgeMask>& edges) {
  if (edges.empty()) return "-";
  std::string s;
  for (EdgeMask e : edges) s += (s.empty() ? "" : ",") + format_edge(e);
  return s;
}

// --- state -----------------------------------------------------------------

int cmd_state(const Selector& sel, bool check, std::ostream& out) {
  const Hypergraph h = resolve(sel);
  const SignState s = build_state(h);
  const int n = h.vertex_count();
  const std::string magnitude = n % 2 == 0 ? "1/" + std::to_string(1ull << (n / 2))
                                           : "1/sqrt(" + std::to_string(1ull << n) + ")";
  out << "# " << label(h) << "\n";
  out << "# amplitude(x) = sign(x) * " << magnitude << ", x listed as qubits 1.." << n << "\n";
  std::string pattern;
  for (std::size_t x = 0; x < s.dimension(); ++x) {
    const char sign = s.sign(x) > 0 ? '+' : '-';
    pattern += sign;
    out << bits(x, n) << " " << sign << magnitude << "\n";
  }
  out << "signs: " << pattern << "\n";
  if (!check) return kExitOk;
  for (int i = 1; i <= n; ++i) {
    if (!(apply(stabilizer(h, i), s) == s)) {
      out << "stabilizer g_" << i << " does not fix the state\n";
      return kExitFailure;
    }
  }
  out << "all stabilizers OK\n";
  return kExitOk;
}

// --- randomize -------------------------------------------------------------

int cmd_randomize(const Selector& sel, const std::string& probs, std::ostream& out) {
  const Hypergraph h = resolve(sel);
  const auto randomizable = h.randomizable_edges();
  auto kept_edges = [&](std::uint32_t kept) {
    std::vector<EdgeMask> e;
    for (std::size_t j = 0; j < randomizable.size(); ++j)
      if (kept >> j & 1u) e.push_back(randomizable[j]);
    return edge_list(e);
  };
  out << "# " << label(h) << "\n";
  if (probs.empty()) {
    out << "# symbolic branch weights in p_k (variable pK for order K)\n";
    for (const auto& b : symbolic_randomize(h)) out << kept_edges(b.kept) << "  " << b.weight.to_string() << "\n";
    out << "overlap <H|rho|H> = " << overlap_polynomial(h).to_string() << "\n";
    return kExitOk;
  }
  const auto params = RandomizationParams::parse(probs);
  for (int k : h.randomizable_orders()) {
    if (!params.has(k)) throw Error(ErrorKind::InvalidArgument, "--probs lacks p" + std::to_string(k));
  }
  const BranchEnsemble ens = randomize(h, params);
  out << "# kept edges, weight\n";
  for (const auto& b : ens.branches) out << kept_edges(b.kept) << "  " << fmt("%.12g", b.weight) << "\n";
  out << "total weight = " << fmt("%.12g", ens.total_weight()) << "\n";
  std::map<int, mpq_class> point;
  for (const auto& [k, p] : params.values()) point[k] = mpq_class(p);
  out << "overlap <H|rho|H> = " << fmt("%.12g", overlap_polynomial(h).evaluate(point).get_d()) << "\n";
  return kExitOk;
}

// --- overlap ---------------------------------------------------------------

int cmd_overlap(const Selector& sel, bool diagonal, std::ostream& out) {
  const Hypergraph h = resolve(sel);
  RationalPolynomial o = overlap_polynomial(h);
  if (diagonal) o = o.bind_all(0);
  const WitnessSpec spec = witness_spec(h);
  out << "# " << label(h) << "\n";
  out << "O = " << o.to_string() << "\n";
  out << "alpha = " << spec.alpha.get_str() << " (kappa_max = " << spec.kappa_max << ")\n";
  const auto orders = h.randomizable_orders();
  if (orders.size() == 1 || (diagonal && !orders.empty())) {
    const CriticalPoint cp = critical_probability(o.bind_all(0), spec.alpha);
    out << "p_w = " << fmt("%.9f", cp.probability) << (cp.monotone ? "" : " (overlap not monotone)") << "\n";
  }
  return kExitOk;
}

// --- thresholds ------------------------------------------------------------

int cmd_thresholds(const std::string& fam, const std::string& range, std::ostream& out) {
  if (fam != "clover" && fam != "flower") {
    throw Error(ErrorKind::InvalidArgument, "thresholds support --family clover or flower");
  }
  int lo = 0, hi = 0;
  const auto dots = range.find("..");
  const bool single = dots == std::string::npos;
  if (single) {
    lo = hi = parse_int(range, "--n");
  } else {
    lo = parse_int(range.substr(0, dots), "--n");
    hi = parse_int(range.substr(dots + 2), "--n");
  }
  if (lo > hi) throw Error(ErrorKind::InvalidArgument, "empty --n range " + range);
  std::vector<int> ns;
  for (int n = lo; n <= hi; ++n)
    if (fam == "clover" || single || n % 2 == 1) ns.push_back(n);
  if (ns.empty()) throw Error(ErrorKind::InvalidArgument, "--n range " + range + " holds no valid " + fam);

  std::ostringstream table;  // nothing is printed unless every row succeeds
  table << "# family n p_w overlap\n";
  for (int n : ns) {
    const Hypergraph h = family(fam, n);
    const RationalPolynomial o = overlap_polynomial(h).bind_all(0);
    const CriticalPoint cp = critical_probability(o, witness_spec(h).alpha);
    table << h.name() << " " << n << " " << fmt("%.3f", cp.probability) << " " << o.to_string()
          << (cp.monotone ? "" : "  # not monotone") << "\n";
  }
  out << table.str();
  return kExitOk;
}

// --- catalog-validate ------------------------------------------------------

int cmd_catalog_validate(const std::string& path, std::ostream& out) {
  const auto catalog = load_catalog(path);
  std::set<std::string> names;
  for (const auto& h : catalog) {
    if (!h.name().empty() && !names.insert(h.name()).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate record name '" + h.name() + "'");
    }
    out << (h.name().empty() ? "(unnamed)" : h.name()) << ": " << to_inline_string(h) << "\n";
  }
  out << catalog.size() << " record(s) OK\n";
  return kExitOk;
}

// --- sweep -----------------------------------------------------------------

struct SweepFlags {
  std::string measure;
  std::string bipartition;
  std::string normalization;
  int grid = 11;
  std::string out;
  std::string format = "csv";
  bool diagonal = false;
};

int cmd_sweep(const Selector& sel, const SweepFlags& f, std::ostream& out, std::ostream& err) {
  if (f.format != "csv" && f.format != "json") {
    throw Error(ErrorKind::InvalidArgument, "--format must be csv or json");
  }
  SweepConfig c;
  c.hypergraph = resolve(sel);
  c.measure = parse_measure(f.measure);
  if (!f.bipartition.empty()) c.bipartition = Bipartition::parse(f.bipartition, c.hypergraph.vertex_count());
  if (!f.normalization.empty()) c.normalization = parse_normalization(f.normalization);
  c.resolution = f.grid;
  c.diagonal = f.diagonal;
  validate(c);

  const SweepResult r = run_sweep(c);
  std::ostringstream buf;
  if (f.format == "json") write_json(buf, c, r);
  else write_csv(buf, c, r);
  if (f.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(f.out, std::ios::binary);
    if (!file || !(file << buf.str()) || !file.flush()) {
      throw Error(ErrorKind::InvalidArgument, "cannot write '" + f.out + "'");
    }
  }
  if (!r.all_ok()) {
    const auto failed = std::count_if(r.rows.begin(), r.rows.end(), [](const SweepRow& row) { return row.status != "ok"; });
    err << "error: " << failed << " of " << r.rows.size() << " grid points failed; see the status column\n";
    return kExitFailure;
  }
  return kExitOk;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Capacity:
    case ErrorKind::Numerical:
    case ErrorKind::DimensionMismatch:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomized hypergraph states: construction, entanglement measures, witness thresholds", "hyperent"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("hyperent ") + kVersion);

  Selector sel;
  bool check = false, diagonal = false;
  std::string probs, fam, range, catalog;
  SweepFlags sw;

  auto* state = app.add_subcommand("state", "print the amplitudes of |H>");
  add_selector(state, sel);
  state->add_flag("--check-stabilizers", check, "verify g_i|H> = |H> for every vertex");

  auto* rnd = app.add_subcommand("randomize", "branches and weights of the randomized state");
  add_selector(rnd, sel);
  rnd->add_option("--probs", probs, "success probabilities, e.g. \"2=0.5,3=0.25\" or a single p; symbolic when omitted");

  auto* sweep = app.add_subcommand("sweep", "evaluate a measure over the grid of success probabilities");
  add_selector(sweep, sel);
  sweep->add_option("--measure", sw.measure, "negativity | gmn | overlap | witness")->required();
  sweep->add_option("--bipartition", sw.bipartition, "negativity cut, e.g. \"1|2,3,4\"");
  sweep->add_option("--normalization", sw.normalization, "gmn witness normalization: trace-one | operator-bounded");
  sweep->add_option("--grid", sw.grid, "points per variable (>= 2)");
  sweep->add_option("--out", sw.out, "output file (default: stdout)");
  sweep->add_option("--format", sw.format, "csv | json");
  sweep->add_flag("--diagonal", sw.diagonal, "single variable p = p_k for every order");

  auto* thr = app.add_subcommand("thresholds", "critical probabilities of the projector witness");
  thr->add_option("--family", fam, "clover | flower")->required();
  thr->add_option("--n", range, "vertex count or range a..b")->required();

  auto* ovl = app.add_subcommand("overlap", "exact overlap polynomial <H|rho|H>");
  add_selector(ovl, sel);
  ovl->add_flag("--diagonal", diagonal, "bind every p_k to a single p");

  auto* cat = app.add_subcommand("catalog-validate", "parse a catalog file and list its records");
  cat->add_option("--catalog", catalog, "catalog file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (state->parsed()) return cmd_state(sel, check, out);
    if (rnd->parsed()) return cmd_randomize(sel, probs, out);
    if (sweep->parsed()) return cmd_sweep(sel, sw, out, err);
    if (thr->parsed()) return cmd_thresholds(fam, range, out);
    if (ovl->parsed()) return cmd_overlap(sel, diagonal, out);
    if (cat->parsed()) return cmd_catalog_validate(catalog, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace hyperent
