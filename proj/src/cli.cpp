#include "latcon/cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <sstream>

#include "latcon/animals.hpp"
#include "latcon/coverings.hpp"
#include "latcon/entropy.hpp"
#include "latcon/ising.hpp"
#include "latcon/percolation.hpp"
#include "latcon/registry.hpp"
#include "latcon/table.hpp"
#include "latcon/walks.hpp"

namespace latcon {

namespace {

struct Globals {
  std::string format = "table";
  unsigned threads = default_threads();
  double budget = 0;  // 0: environment or default
  std::string output;
  std::string meta;

  WorkBudget work_budget() const {
    return budget > 0 ? WorkBudget(budget) : WorkBudget::from_environment();
  }
};

std::string high(const HighReal& x, int digits) {
  return x.str(digits, std::ios_base::fmtflags(0));
}

std::string compare_text(const std::string& key, double computed) {
  return registry_compare(key, computed).text;
}

// walks -------------------------------------------------------------------

std::vector<Table> cmd_walks(const Globals& g, int dim, int max_n, bool no_dihedral,
                             const std::string& census_path) {
  WalkOptions opts;
  opts.threads = g.threads;
  opts.dihedral = !no_dihedral;
  opts.budget = g.work_budget();
  WalkCensus census = enumerate_saw(dim, max_n, opts);
  if (!census_path.empty()) {
    std::ofstream f(census_path, std::ios::binary);
    if (!f) throw DomainError("cannot open census file " + census_path);
    f << "{\"counts\": " << to_json(census.counts)
      << ",\n\"sq_disp_sums\": " << to_json(census.sq_disp_sums) << "}\n";
  }
  Table t;
  t.title = "self-avoiding walks, d=" + std::to_string(dim);
  t.columns = {"n", "c(n)", "sum |w(n)|^2", "s(n)"};
  for (int n = 0; n <= max_n; ++n) {
    t.add_row({std::to_string(n), to_string(census.counts.at(n)),
               to_string(census.sq_disp_sums.at(n)),
               to_string(mean_square_displacement(census, n))});
  }
  std::vector<Table> out{t};
  if (max_n >= 8) {
    auto mu = mu_estimate(census);
    std::string sd = std::to_string(dim);
    Table e = estimate_table("connective constant, d=" + sd, mu);
    if (dim >= 2 && dim <= 6) {
      e.notes["registry bounds"] = compare_text("mu_d" + sd, mu.value);
      e.notes["registry estimate"] = compare_text("mu_d" + sd + "_estimate", mu.value);
    }
    out.push_back(e);
    if (max_n >= 12) {
      Table f;
      f.title = "exponent fits, d=" + sd;
      f.columns = {"exponent", "value", "amplitude", "rms residual", "window"};
      auto gam = fit_gamma(census, mu.value);
      auto nu = fit_nu(census);
      for (auto [name, r] : {std::pair<std::string, FitResult>{"gamma", gam}, {"nu", nu}}) {
        f.add_row({name, format_double(r.exponent), format_double(r.amplitude),
                   format_double(r.residual),
                   std::to_string(r.window_lo) + ".." + std::to_string(r.window_hi)});
      }
      if (dim == 2 || dim == 3) {
        f.notes["gamma vs registry"] = compare_text("gamma_d" + sd, gam.exponent);
        f.notes["nu vs registry"] = compare_text("nu_d" + sd, nu.exponent);
      }
      out.push_back(f);
    }
  }
  return out;
}

// animals -----------------------------------------------------------------

std::vector<Table> cmd_animals(const Globals& g, int max_n) {
  AnimalOptions opts;
  opts.threads = g.threads;
  opts.budget = g.work_budget();
  AnimalCensus census = count_polyominoes(max_n, opts);
  Table t;
  t.title = "fixed polyominoes";
  t.columns = {"n", "A(n)", "A(n)/A(n-1)"};
  for (const auto& [n, a] : census.counts.values) {
    std::string ratio = n > 1 ? format_double(to_double(a) / to_double(census.counts.at(n - 1))) : "";
    t.add_row({std::to_string(n), to_string(a), ratio});
  }
  std::vector<Table> out{t};
  if (max_n >= 8) {
    auto alpha = alpha_estimate(census);
    Table e = estimate_table("polyomino growth constant", alpha);
    e.notes["registry bounds"] = compare_text("alpha", alpha.value);
    e.notes["registry estimate"] = compare_text("alpha_estimate", alpha.value);
    out.push_back(e);
  }
  return out;
}

// ising -------------------------------------------------------------------

std::vector<Table> cmd_ising(const Globals& g, int dim, int side, int max_bonds) {
  LatticeSpec spec;
  spec.dim = dim;
  spec.side = side;
  spec.boundary = Boundary::Torus;
  spec.adjacency = dim == 2 ? Adjacency::SquareNN : Adjacency::CubicNN;
  spec.validate();
  IsingOptions opts;
  opts.budget = g.work_budget();
  DrawingCensus census = count_even_drawings(spec, max_bonds, opts);
  BetaSeries beta = beta_from_counts(census);
  Table t;
  t.title = "even polygonal drawings, d=" + std::to_string(dim) + ", torus side " +
            std::to_string(side);
  t.columns = {"r", "B(r)", "beta_r", "beta_r closed form"};
  for (int r = 1; r <= max_bonds; ++r) {
    std::string closed;
    if (r == 4 || r == 6 || r == 8 || r == 10) closed = to_string(beta_polynomial(dim, r));
    t.add_row({std::to_string(r), to_string(census.counts.at(r)),
               to_string(beta.coefficients.at(r)), closed});
  }
  t.notes["sites"] = std::to_string(spec.site_count());
  for (std::size_t i = 0; i < census.warnings.size(); ++i)
    t.notes["warning " + std::to_string(i + 1)] = census.warnings[i];
  return {t};
}

// coverings ---------------------------------------------------------------

std::vector<Table> cmd_coverings(const Globals& g, const std::string& model, int side, int max_n,
                                 bool column_major) {
  CoveringOptions opts;
  opts.column_major = column_major;
  opts.budget = g.work_budget();
  CoveringKind kind = model == "dimer2d"         ? CoveringKind::DimerOnly2D
                      : model == "monomer-dimer" ? CoveringKind::MonomerDimer2D
                                                 : CoveringKind::DimerOnly3D;
  if ((side > 0) == (max_n > 0)) throw DomainError("coverings: give exactly one of --side, --max-n");
  std::vector<int> ns;
  if (side > 0) ns.push_back(side);
  for (int n = 1; n <= max_n; ++n) ns.push_back(n);

  Table t;
  t.title = model == "dimer2d"         ? "dimer coverings f(n), n x n"
            : model == "monomer-dimer" ? "monomer-dimer arrangements g(n), n x n"
                                       : "dimer coverings h(n), n x n x n";
  t.columns = {"n", "count"};
  if (kind == CoveringKind::DimerOnly2D) t.columns.push_back("product formula");
  SeriesTable series;
  series.model = model;
  for (int n : ns) {
    BigCount c = kind == CoveringKind::DimerOnly2D      ? count_dimer_coverings_2d(n, opts)
                 : kind == CoveringKind::MonomerDimer2D ? count_monomer_dimer(n, opts)
                                                        : count_dimer_coverings_3d(n, opts);
    series.values[n] = c;
    std::vector<std::string> row{std::to_string(n), to_string(c)};
    if (kind == CoveringKind::DimerOnly2D)
      row.push_back(n % 2 == 0 ? to_string(kasteleyn_count(n, n).rounded) : "0");
    t.add_row(row);
  }
  std::vector<Table> out{t};
  if (max_n > 0) {
    if (kind == CoveringKind::DimerOnly2D && max_n >= 8) {
      auto r = dimer_entropy_from_counts(series);
      Table e = estimate_table("dimer constant from f(n)^(2/N)", r);
      e.notes["registry"] = compare_text("dimer_2d", r.value);
      e.notes["exp(2G/pi)"] = high(dimer_constant_2d(), 30);
      out.push_back(e);
    } else if (kind == CoveringKind::MonomerDimer2D && max_n >= 10) {
      auto r = kappa_from_counts(series);
      Table e = estimate_table("monomer-dimer constant from g(n)^(1/N)", r);
      e.notes["registry"] = compare_text("kappa", r.value);
      out.push_back(e);
    } else if (kind == CoveringKind::DimerOnly3D && max_n >= 4) {
      auto r = lambda_estimate(series);
      Table e = estimate_table("3D dimer entropy (2/N) ln h(n)", r);
      e.notes["registry bounds"] = compare_text("lambda", r.value);
      e.notes["registry estimate"] = compare_text("lambda_estimate", r.value);
      out.push_back(e);
    }
  }
  return out;
}

// entropy -----------------------------------------------------------------

EntropyModel parse_entropy_model(const std::string& s) {
  if (s == "ice") return EntropyModel::Ice;
  if (s == "hardsquare") return EntropyModel::HardSquare;
  if (s == "hardhexagon") return EntropyModel::HardHexagon;
  if (s == "king") return EntropyModel::King;
  throw DomainError("unknown entropy model '" + s + "'");
}

std::vector<Table> cmd_entropy(const Globals& g, const std::string& name, int max_n) {
  EntropyModel model = parse_entropy_model(name);
  EntropyOptions opts;
  opts.threads = g.threads;
  opts.budget = g.work_budget();
  std::vector<Table> out;

  Table counts;
  if (model == EntropyModel::Ice) {
    counts.title = "ice states on the n x n torus";
    counts.columns = {"n", "theta(n)", "3 theta(n)", "3-colorings", "ice, flux = 0 mod 3"};
    for (int n = 2; n <= std::min(max_n, 8); ++n) {
      BigCount theta = count_ice_states(n, opts);
      bool small = n <= 6;
      counts.add_row({std::to_string(n), to_string(theta), to_string(BigCount(3 * theta)),
                      small ? to_string(count_three_colorings(n, opts)) : "",
                      small ? to_string(count_ice_states_coloring_sector(n, opts)) : ""});
    }
  } else {
    counts.title = to_string(model) + " configurations on the n x n grid";
    counts.columns = {"n", "count"};
    for (int n = 1; n <= std::min(max_n, 12); ++n)
      counts.add_row({std::to_string(n), to_string(count_hard_configs(model, n, opts))});
  }
  out.push_back(counts);

  if (max_n >= 8) {
    EstimateReport rep = entropy_constant(model, max_n, opts);
    Table eig;
    eig.title = "dominant transfer eigenvalues";
    eig.columns = {"width", "Lambda"};
    for (int n = model == EntropyModel::Ice ? 2 : 1; n <= max_n;
         n += model == EntropyModel::Ice ? 2 : 1)
      eig.add_row({std::to_string(n), format_double(dominant_eigenvalue(model, n).value)});
    out.push_back(eig);
    Table e = estimate_table(to_string(model) + " entropy constant", rep);
    switch (model) {
      case EntropyModel::Ice:
        e.notes["registry"] = compare_text("square_ice", rep.value);
        break;
      case EntropyModel::HardSquare:
        e.notes["registry"] = compare_text("hard_square", rep.value);
        e.notes["z_c (registry)"] = registry_entry("zc_hard_square").value_text;
        break;
      case EntropyModel::HardHexagon:
        e.notes["registry"] = compare_text("hard_hexagon", rep.value);
        e.notes["z_c (registry)"] = registry_entry("zc_hard_hexagon").value_text;
        e.notes["minimal polynomial residual at estimate"] =
            high(hexagon_minpoly_residual(HighReal(rep.value)), 6);
        e.notes["minimal polynomial residual at published value"] =
            high(hexagon_minpoly_residual(registry_entry("hard_hexagon").value()), 6);
        break;
      case EntropyModel::King:
        e.notes["registry"] = compare_text("king", rep.value);
        break;
    }
    out.push_back(e);
  }
  return out;
}

// percolation -------------------------------------------------------------

PercMode parse_mode(const std::string& s) {
  if (s == "site") return PercMode::Site;
  if (s == "bond") return PercMode::Bond;
  throw DomainError("unknown percolation mode '" + s + "'");
}

PercLattice parse_lattice(const std::string& s) {
  if (s == "square") return PercLattice::Square;
  if (s == "tri") return PercLattice::Triangular;
  throw DomainError("unknown percolation lattice '" + s + "'");
}

MonteCarloOptions mc_options(const Globals& g) {
  MonteCarloOptions o;
  o.threads = g.threads;
  o.budget = g.work_budget();
  return o;
}

std::vector<Table> cmd_perc_mc(const Globals& g, const std::string& mode, const std::string& lattice,
                               double p, int side, std::int64_t trials, std::uint64_t seed) {
  PercMode m = parse_mode(mode);
  PercLattice l = parse_lattice(lattice);
  auto opts = mc_options(g);
  auto density = mean_cluster_density(m, l, p, side, trials, seed, opts);
  auto size = mean_cluster_size(m, l, p, side, trials, seed, opts);
  Table t;
  t.title = mode + " percolation, " + lattice + " lattice, free " + std::to_string(side) + " x " +
            std::to_string(side) + ", p=" + format_double(p);
  t.columns = {"quantity", "mean", "std_error", "trials", "skipped"};
  t.add_row({"cluster density", format_double(density.mean), format_double(density.std_error),
             std::to_string(density.trials), std::to_string(density.skipped)});
  t.add_row({"mean cluster size", format_double(size.mean), format_double(size.std_error),
             std::to_string(size.trials), std::to_string(size.skipped)});
  t.notes["seed"] = std::to_string(seed);
  return {t};
}

std::vector<Table> cmd_perc_exact(const std::string& which) {
  Table t;
  t.title = "exact percolation constants";
  t.columns = {"quantity", "value", "value (30 digits)"};
  auto row = [&](const std::string& name, const HighReal& v) {
    t.add_row({name, high(v, 16), high(v, 30)});
  };
  if (which == "kb-half") {
    row("K_B(1/2) closed form", exact_kb_half_closed());
  } else if (which == "kb-half-integral") {
    auto r = kb_half_integral();
    row("K_B(1/2) integral", r.value);
    t.notes["truncation bound"] = format_double(r.truncation_bound);
    t.notes["quadrature error"] = format_double(r.quadrature_error);
    t.notes["derivative extrapolation spread"] = format_double(r.derivative_spread);
    t.notes["closed form"] = high(exact_kb_half_closed(), 30);
  } else if (which == "kb-tri") {
    row("K_B(p_c) triangular", exact_kb_triangular());
  } else if (which == "pc-tri") {
    row("p_c bond triangular", pc_bond_triangular());
  } else {
    throw DomainError("unknown exact quantity '" + which + "'");
  }
  return {t};
}

std::vector<Table> cmd_perc_pc(const Globals& g, const std::string& mode, const std::string& lattice,
                               const std::vector<int>& sides, std::int64_t trials,
                               std::uint64_t seed) {
  PercMode m = parse_mode(mode);
  PercLattice l = parse_lattice(lattice);
  auto rep = estimate_pc(m, l, sides, trials, seed, mc_options(g));
  Table t = estimate_table("percolation threshold, " + mode + " " + lattice, rep);
  if (m == PercMode::Site && l == PercLattice::Square) {
    t.notes["registry bounds"] = compare_text("pc_site_square", rep.value);
    t.notes["registry estimate"] = compare_text("pc_site_square_estimate", rep.value);
  } else if (m == PercMode::Bond) {
    t.notes["registry"] =
        compare_text(l == PercLattice::Square ? "pc_bond_square" : "pc_bond_triangular", rep.value);
  }
  t.notes["seed"] = std::to_string(seed);
  t.notes["trials per side"] = std::to_string(trials);
  return {t};
}

// report ------------------------------------------------------------------

Table registry_table() {
  Table t;
  t.title = "constants registry";
  t.columns = {"key", "kind", "reference", "description", "source"};
  for (const auto& e : registry()) {
    std::string ref = e.kind == EntryKind::BoundPair ? "(" + e.lower_text + ", " + e.upper_text + ")"
                                                     : e.value_text;
    t.add_row({e.key, to_string(e.kind), ref, e.description, e.source});
  }
  return t;
}

Table full_report(const Globals& g) {
  Table t;
  t.title = "computed vs registry (desk-scale suite)";
  t.columns = {"key", "computed", "reference", "relative error", "verdict", "method"};
  auto add = [&](const std::string& key, double computed, const std::string& method) {
    CompareLine c = registry_compare(key, computed);
    std::string verdict;
    if (c.inside) verdict = *c.inside ? "INSIDE" : "OUTSIDE";
    t.add_row({key, format_double(computed), c.reference,
               c.relative_error ? format_double(*c.relative_error) : "", verdict, method});
  };
  const WorkBudget budget = g.work_budget();

  WalkOptions wo;
  wo.threads = g.threads;
  wo.budget = budget;
  auto walks = enumerate_saw(2, 18, wo);
  auto mu = mu_estimate(walks);
  add("mu_d2", mu.value, "walks n<=18");
  add("mu_d2_estimate", mu.value, "walks n<=18");
  add("gamma_d2", fit_gamma(walks, mu.value).exponent, "log fit n<=18");
  add("nu_d2", fit_nu(walks).exponent, "log fit n<=18");
  auto walks3 = enumerate_saw(3, 11, wo);
  auto mu3 = mu_estimate(walks3);
  add("mu_d3", mu3.value, "walks d=3 n<=11");
  add("mu_d3_estimate", mu3.value, "walks d=3 n<=11");

  AnimalOptions ao;
  ao.threads = g.threads;
  ao.budget = budget;
  auto alpha = alpha_estimate(count_polyominoes(14, ao));
  add("alpha", alpha.value, "polyominoes n<=14");
  add("alpha_estimate", alpha.value, "polyominoes n<=14");

  CoveringOptions co;
  co.budget = budget;
  add("dimer_2d", dimer_entropy_estimate(12, co).value, "f(n)^(2/N), n<=12");
  add("dimer_2d", dimer_constant_2d().convert_to<double>(), "exp(2G/pi)");
  add("kappa", kappa_estimate(10, co).value, "g(n)^(1/N), n<=10");
  auto lam = lambda_estimate(co);
  add("lambda", lam.value, "(2/N) ln h(4)");
  add("lambda_estimate", lam.value, "(2/N) ln h(4)");

  EntropyOptions eo;
  eo.threads = g.threads;
  eo.budget = budget;
  add("square_ice", entropy_constant(EntropyModel::Ice, 10, eo).value, "transfer, widths<=10");
  add("hard_square", entropy_constant(EntropyModel::HardSquare, 12, eo).value, "transfer, widths<=12");
  add("hard_hexagon", entropy_constant(EntropyModel::HardHexagon, 12, eo).value,
      "transfer, widths<=12");
  add("king", entropy_constant(EntropyModel::King, 12, eo).value, "transfer, widths<=12");

  add("kb_half", exact_kb_half_closed().convert_to<double>(), "closed form");
  add("kb_half", kb_half_integral().value.convert_to<double>(), "integral");
  add("kb_triangular", exact_kb_triangular().convert_to<double>(), "closed forms");
  add("pc_bond_triangular", pc_bond_triangular().convert_to<double>(), "2 sin(pi/18)");

  auto mo = mc_options(g);
  const std::uint64_t seed = 1;
  auto ks = extrapolate_cluster_density(PercMode::Site, PercLattice::Square, 0.5, {16, 32, 64},
                                        2000, seed, mo);
  add("ks_half", ks.value, "Monte Carlo, sides 16,32,64 extrapolated");
  auto kb = extrapolate_cluster_density(PercMode::Bond, PercLattice::Square, 0.5, {16, 32, 64},
                                        2000, seed, mo);
  add("kb_half", kb.value, "Monte Carlo, sides 16,32,64 extrapolated");
  auto pcs = estimate_pc(PercMode::Site, PercLattice::Square, {16, 32, 64}, 1000, seed, mo);
  add("pc_site_square", pcs.value, "crossing fit, sides 16,32,64");
  add("pc_site_square_estimate", pcs.value, "crossing fit, sides 16,32,64");
  return t;
}

// driver ------------------------------------------------------------------

void write_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
  nlohmann::json j{{"error", kind}, {"message", message}, {"exit_code", code}};
  err << j.dump() << '\n';
}

std::string utc_now() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and estimation of lattice-model constants"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "csv, json or table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--budget", g.budget, "work budget in units (overrides LATCON_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", g.output, "write the result here instead of stdout");
  app.add_option("--meta", g.meta, "write run metadata (timestamps, timing) as JSON here");

  std::function<std::vector<Table>()> action;

  int dim = 2, max_n = 0, side = 0, max_bonds = 0;
  bool no_dihedral = false, column_major = false, all = false;
  std::string model, mode = "site", lattice = "square", which, census_path;
  double p = 0.5;
  std::int64_t trials = 0;
  std::uint64_t seed = 1;
  std::vector<int> sides;

  auto* walks = app.add_subcommand("walks", "self-avoiding walk counts c(n) and s(n)");
  walks->add_option("--dim", dim, "dimension")->check(CLI::Range(1, 8));
  walks->add_option("--max-n", max_n, "largest length")->required()->check(CLI::NonNegativeNumber);
  walks->add_flag("--no-dihedral", no_dihedral, "disable the symmetry reduction");
  walks->add_option("--census", census_path, "also write the exact census as JSON here");
  walks->callback([&] {
    action = [&] { return cmd_walks(g, dim, max_n, no_dihedral, census_path); };
  });

  auto* animals = app.add_subcommand("animals", "fixed polyomino counts A(n)");
  animals->add_option("--max-n", max_n, "largest order")->required()->check(CLI::PositiveNumber);
  animals->callback([&] { action = [&] { return cmd_animals(g, max_n); }; });

  auto* ising = app.add_subcommand("ising", "even polygonal drawings B(r) and beta_k on a torus");
  ising->add_option("--dim", dim, "dimension")->check(CLI::Range(2, 8));
  ising->add_option("--side", side, "torus side")->required();
  ising->add_option("--max-bonds", max_bonds, "largest r")->required()->check(CLI::PositiveNumber);
  ising->callback([&] { action = [&] { return cmd_ising(g, dim, side, max_bonds); }; });

  auto* cov = app.add_subcommand("coverings", "dimer and monomer-dimer counts");
  cov->add_option("--model", model, "dimer2d, monomer-dimer or dimer3d")
      ->required()
      ->check(CLI::IsMember({"dimer2d", "monomer-dimer", "dimer3d"}));
  cov->add_option("--side", side, "single side length")->check(CLI::PositiveNumber);
  cov->add_option("--max-n", max_n, "all sides 1..N")->check(CLI::PositiveNumber);
  cov->add_flag("--column-major", column_major, "process cells column by column");
  cov->callback([&] { action = [&] { return cmd_coverings(g, model, side, max_n, column_major); }; });

  auto* ent = app.add_subcommand("entropy", "ice and hard-core transfer matrices");
  ent->add_option("--model", model, "ice, hardsquare, hardhexagon or king")
      ->required()
      ->check(CLI::IsMember({"ice", "hardsquare", "hardhexagon", "king"}));
  ent->add_option("--max-n", max_n, "largest width")->required()->check(CLI::Range(2, 24));
  ent->callback([&] { action = [&] { return cmd_entropy(g, model, max_n); }; });

  auto* perc = app.add_subcommand("perc", "percolation on free n x n grids");
  perc->require_subcommand(0, 1);
  perc->add_option("--mode", mode, "site or bond")->check(CLI::IsMember({"site", "bond"}));
  perc->add_option("--lattice", lattice, "square or tri")->check(CLI::IsMember({"square", "tri"}));
  perc->add_option("--p", p, "occupation probability")->check(CLI::Range(0.0, 1.0));
  perc->add_option("--side", side, "grid side")->check(CLI::Range(2, 100000));
  perc->add_option("--trials", trials, "samples (per side for pc)")->check(CLI::PositiveNumber);
  perc->add_option("--seed", seed, "master seed (default 1)");
  perc->callback([&] {
    if (action) return;
    if (side == 0) side = 64;
    if (trials == 0) trials = 10000;
    action = [&] { return cmd_perc_mc(g, mode, lattice, p, side, trials, seed); };
  });
  auto* exact = perc->add_subcommand("exact", "exactly known constants");
  exact->add_option("which", which, "kb-half, kb-half-integral, kb-tri or pc-tri")
      ->required()
      ->check(CLI::IsMember({"kb-half", "kb-half-integral", "kb-tri", "pc-tri"}));
  exact->callback([&] { action = [&] { return cmd_perc_exact(which); }; });
  auto* pc = perc->add_subcommand("pc", "threshold from crossing probabilities");
  pc->add_option("--sides", sides, "comma separated sides")->delimiter(',')->required();
  pc->callback([&] {
    action = [&] { return cmd_perc_pc(g, mode, lattice, sides, trials ? trials : 1000, seed); };
  });

  auto* report = app.add_subcommand("report", "constants registry and comparisons");
  report->add_flag("--all", all, "run the desk-scale suite and compare with the registry");
  report->callback([&] {
    action = [&] {
      std::vector<Table> t{registry_table()};
      if (all) t.push_back(full_report(g));
      return t;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what(), 2);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  const std::string started_utc = utc_now();
  try {
    std::vector<Table> tables = action();
    std::string text = render(tables, parse_format(g.format));
    if (g.output.empty()) {
      out << text;
    } else {
      std::ofstream f(g.output, std::ios::binary);
      if (!f) throw DomainError("cannot open output file " + g.output);
      f << text;
    }
    if (!g.meta.empty()) {
      double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      std::vector<std::string> args(argv, argv + argc);
      nlohmann::json m{{"argv", args},         {"started_utc", started_utc},
                       {"elapsed_seconds", elapsed}, {"threads", g.threads},
                       {"budget", g.work_budget().units()}};
      std::ofstream f(g.meta);
      f << m.dump(2) << '\n';
    }
    return 0;
  } catch (const DomainError& e) {
    write_error(err, "domain", e.what(), 2);
    return 2;
  } catch (const BudgetExceeded& e) {
    write_error(err, "budget", e.what(), 3);
    return 3;
  } catch (const ConsistencyError& e) {
    write_error(err, "consistency", e.what(), 4);
    return 4;
  } catch (const NumericalError& e) {
    write_error(err, "numerical", e.what(), 4);
    return 4;
  }
}

}  // namespace latcon
