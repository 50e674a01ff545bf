#include "latcon/registry.hpp"

#include <cmath>
#include <sstream>

namespace latcon {

std::string to_string(EntryKind k) {
  switch (k) {
    case EntryKind::Exact: return "exact";
    case EntryKind::Estimate: return "estimate";
    case EntryKind::BoundPair: return "bounds";
  }
  return "?";
}

HighReal RegistryEntry::value() const {
  if (kind == EntryKind::BoundPair) throw DomainError(key + " is a bound pair");
  return HighReal(value_text);
}

HighReal RegistryEntry::lower() const {
  if (kind != EntryKind::BoundPair) throw DomainError(key + " is not a bound pair");
  return HighReal(lower_text);
}

HighReal RegistryEntry::upper() const {
  if (kind != EntryKind::BoundPair) throw DomainError(key + " is not a bound pair");
  return HighReal(upper_text);
}

namespace {

RegistryEntry point(std::string key, EntryKind kind, std::string value, std::string desc,
                    std::string source) {
  RegistryEntry e;
  e.key = std::move(key);
  e.kind = kind;
  e.value_text = std::move(value);
  e.description = std::move(desc);
  e.source = std::move(source);
  return e;
}

RegistryEntry bounds(std::string key, std::string lo, std::string hi, std::string desc,
                     std::string source) {
  RegistryEntry e;
  e.key = std::move(key);
  e.kind = EntryKind::BoundPair;
  e.lower_text = std::move(lo);
  e.upper_text = std::move(hi);
  e.description = std::move(desc);
  e.source = std::move(source);
  return e;
}

std::vector<RegistryEntry> build() {
  using K = EntryKind;
  std::vector<RegistryEntry> r;
  // Self-avoiding walks.
  const char* mu_lo[] = {"2.62002", "4.572140", "6.742945", "8.828529", "10.874038"};
  const char* mu_est[] = {"2.6381585", "4.683907", "6.7720", "8.8386", "10.8788"};
  const char* mu_hi[] = {"2.6939", "4.7476", "6.8179", "8.8602", "10.8886"};
  for (int d = 2; d <= 6; ++d) {
    std::string sd = std::to_string(d);
    r.push_back(bounds("mu_d" + sd, mu_lo[d - 2], mu_hi[d - 2],
                       "connective constant rigorous bounds, d=" + sd,
                       "Madras-Slade; Alm; Noonan; Hara-Slade-Sokal"));
    r.push_back(point("mu_d" + sd + "_estimate", K::Estimate, mu_est[d - 2],
                      "connective constant best estimate, d=" + sd,
                      "Conway-Guttmann; Madras-Slade"));
  }
  r.push_back(point("gamma_d2", K::Estimate, "1.34375", "SAW exponent gamma (conjectured 43/32), d=2",
                    "Madras-Slade"));
  r.push_back(point("gamma_d3", K::Estimate, "1.1575", "SAW exponent gamma, d=3", "Butera-Comi"));
  r.push_back(point("nu_d2", K::Estimate, "0.75", "SAW exponent nu (conjectured 3/4), d=2",
                    "Madras-Slade"));
  r.push_back(point("nu_d3", K::Estimate, "0.5877", "SAW exponent nu, d=3", "Li-Madras-Sokal"));
  // Polyominoes.
  r.push_back(bounds("alpha", "3.791", "4.649551", "polyomino growth constant bounds",
                     "Klarner-Rivest; Rands-Welsh"));
  r.push_back(point("alpha_estimate", K::Estimate, "4.06265",
                    "polyomino growth constant estimate", "Conway-Guttmann"));
  r.push_back(point("polyomino_amplitude", K::Estimate, "0.316",
                    "amplitude C in A(n) ~ C n^-1 alpha^n", "Conway-Guttmann"));
  // Ising.
  const char* zc[] = {"0.414213562373095049", "0.218094", "0.14855", "0.1134", "0.0920", "0.0775"};
  for (int d = 2; d <= 7; ++d) {
    r.push_back(point("zc_ising_d" + std::to_string(d), d == 2 ? K::Exact : K::Estimate,
                      zc[d - 2], "Ising high-temperature radius of convergence, d=" + std::to_string(d),
                      d == 2 ? "Kramers-Wannier; Onsager" : "Guttmann-Enting; Blote-Luijten"));
  }
  r.push_back(point("ising_susceptibility_amplitude", K::Exact, "0.9625817322",
                    "2D susceptibility amplitude", "Wu-McCoy-Tracy-Barouch"));
  // Dimers.
  r.push_back(point("kappa", K::Estimate, "1.940215351", "monomer-dimer constant", "Baxter"));
  r.push_back(point("dimer_2d", K::Exact, "1.79162281206959342", "exp(2G/pi), 2D dimer constant",
                    "Kasteleyn; Fisher-Temperley"));
  r.push_back(bounds("lambda", "0.44007584", "0.463107", "3D dimer entropy bounds",
                     "Priezzhev; Ciucu; Schrijver"));
  r.push_back(point("lambda_estimate", K::Estimate, "0.4466", "3D dimer entropy estimate",
                    "Beichl-Sullivan"));
  // Ice.
  r.push_back(point("square_ice", K::Exact, "1.539600717839002039", "(4/3)^(3/2) square ice",
                    "Lieb"));
  r.push_back(bounds("ice_w", "1.5067", "1.5070", "Ice-Ih / Ice-Ic residual entropy", "Nagle"));
  // Hard-core models.
  r.push_back(point("hard_square", K::Estimate, "1.50304808247533226", "hard square entropy xi",
                    "Baxter-Enting-Tsang"));
  r.push_back(point("hard_hexagon", K::Exact, "1.395485972479302735", "hard hexagon entropy eta",
                    "Baxter"));
  r.push_back(point("king", K::Estimate, "1.342643951124", "non-attacking kings entropy", "McKay"));
  r.push_back(point("zc_hard_hexagon", K::Exact, "11.09016994374947424",
                    "hard hexagon critical activity (11+5 sqrt 5)/2", "Baxter"));
  r.push_back(point("zc_hard_square", K::Estimate, "3.7962", "hard square critical activity",
                    "Baxter"));
  // Percolation.
  r.push_back(bounds("pc_site_square", "0.556", "0.679492", "site percolation threshold bounds",
                     "Wierman; van den Berg-Ermakov"));
  r.push_back(point("pc_site_square_estimate", K::Estimate, "0.5927460",
                    "site percolation threshold, square", "Ziff"));
  r.push_back(point("pc_bond_square", K::Exact, "0.5", "bond percolation threshold, square",
                    "Kesten"));
  r.push_back(point("pc_bond_triangular", K::Exact, "0.347296355333860698",
                    "bond percolation threshold, triangular, 2 sin(pi/18)", "Wierman"));
  r.push_back(point("ks_half", K::Estimate, "0.065770", "site cluster density at p=1/2",
                    "Ziff; Adamchik"));
  r.push_back(point("ks_pc", K::Estimate, "0.0275981", "site cluster density at p_c",
                    "Ziff; Adamchik"));
  r.push_back(point("kb_half", K::Exact, "0.09807621135331594",
                    "bond cluster density at p=1/2, (3 sqrt 3 - 5)/2", "Temperley-Lieb; Adamchik"));
  r.push_back(point("kb_triangular", K::Exact, "0.1118442752845497",
                    "triangular bond cluster density at p_c", "Baxter-Temperley-Ashley"));
  return r;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = build();
  return entries;
}

const RegistryEntry& registry_entry(const std::string& key) {
  for (const auto& e : registry())
    if (e.key == key) return e;
  throw DomainError("unknown registry key: " + key);
}

CompareLine registry_compare(const std::string& key, double computed) {
  const RegistryEntry& e = registry_entry(key);
  CompareLine line;
  line.key = key;
  line.computed = computed;
  std::ostringstream os;
  os.precision(12);
  if (e.kind == EntryKind::BoundPair) {
    double lo = e.lower().convert_to<double>();
    double hi = e.upper().convert_to<double>();
    line.reference = "(" + e.lower_text + ", " + e.upper_text + ")";
    line.inside = lo < computed && computed < hi;
    os << key << ": " << computed << (*line.inside ? " INSIDE " : " OUTSIDE ") << line.reference;
  } else {
    double ref = e.value().convert_to<double>();
    line.reference = e.value_text;
    line.relative_error = ref != 0.0 ? std::abs(computed - ref) / std::abs(ref)
                                     : std::abs(computed);
    os << key << ": " << computed << " vs " << e.value_text << " rel.err " << *line.relative_error;
  }
  line.text = os.str();
  return line;
}

}  // namespace latcon
