// spinlink: anyon theories from even linking matrices, condensation, and
// twisted partition functions, at the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "spinlink/boundary.hpp"
#include "spinlink/io.hpp"

using namespace spinlink;

namespace {

struct GlobalOpts {
  double tol = 1e-8;
  std::int64_t max_group_size = kDefaultEnumerationBound;
  unsigned seed = 0;  // reserved for randomized verification drivers
  bool json = false;
};

std::string label(const std::vector<Int>& coeffs) {
  std::string s = "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += coeffs[i].str();
  }
  return s + ")";
}

std::string fmt_complex(const std::complex<double>& v) {
  std::ostringstream os;
  os << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
  return os.str();
}

std::string orders_str(const FinAbGroup& g) {
  if (g.is_trivial()) return "1 (trivial)";
  std::string s;
  for (std::size_t i = 0; i < g.orders().size(); ++i) {
    if (i) s += " x ";
    s += "Z" + g.orders()[i].str();
  }
  return s;
}

void print_theory_table(const AnyonTheory& t, const GlobalOpts& g, std::ostream& out) {
  if (g.json) {
    out << serialize_theory(t);
    return;
  }
  Int n = t.group().order();
  out << "anyons: " << n << "\n";
  out << "group:  " << orders_str(t.group()) << "\n";
  std::complex<double> gm = gauss_milgram(t, g.max_group_size);
  out << "gauss-milgram: modulus " << std::abs(gm);
  if (std::abs(std::abs(gm) - 1.0) < 1e-9) {
    double turns = std::arg(gm) / (2.0 * M_PI);
    long sigma = ((std::lround(turns * 8.0) % 8) + 8) % 8;
    out << ", signature " << sigma << " mod 8";
  }
  out << "\n";
  if (n <= Int(256)) {
    out << "spins:\n";
    for (const auto& c : enumerate_coeffs(t.group(), 256)) {
      out << "  " << label(c) << "  q = " << q_eval_coeffs(t, c).str() << "\n";
    }
  } else {
    out << "spins: group too large to tabulate (over 256 anyons)\n";
  }
}

int cmd_from_kirby(const std::string& input, const GlobalOpts& g) {
  LoadedInput in = load_input_document(read_file_or_stdin(input));
  print_theory_table(in.theory, g, std::cout);
  return 0;
}

int cmd_anyons(const std::string& input, const GlobalOpts& g) {
  LoadedInput in = load_input_document(read_file_or_stdin(input));
  const AnyonTheory& t = in.theory;
  if (g.json) {
    std::cout << serialize_theory(t);
    return 0;
  }
  std::cout << "group: " << orders_str(t.group()) << "\n";
  for (const auto& c : enumerate_coeffs(t.group(), g.max_group_size)) {
    GroupElement a(t.group(), c);
    std::cout << label(c) << "  order " << element_order(a) << "  q = "
              << q_eval_coeffs(t, c).str() << "\n";
  }
  return 0;
}

int cmd_smatrix(const std::string& input, bool normalized) {
  LoadedInput in = load_input_document(read_file_or_stdin(input));
  if (in.theory.group().order() > Int(256))
    fail(ErrorKind::ResourceLimit, "S-matrix printing is limited to 256 anyons");
  ModularData md = modular_data(in.theory, 256);
  Eigen::MatrixXcd s = normalized ? md.normalized_s() : md.s_matrix;
  std::cout << std::setprecision(6);
  std::cout << (normalized ? "S (normalized):\n" : "S (unnormalized phases):\n");
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    for (Eigen::Index j = 0; j < s.cols(); ++j)
      std::cout << (j ? "   " : "  ") << fmt_complex(s(i, j));
    std::cout << "\n";
  }
  std::cout << "T diagonal:";
  for (Eigen::Index i = 0; i < md.t_vector.size(); ++i)
    std::cout << "  " << fmt_complex(md.t_vector(i));
  std::cout << "\nsignature mod 8: " << md.sigma_mod8() << "\n";
  return 0;
}

int cmd_central_charge(const std::string& input, const GlobalOpts& g) {
  LoadedInput in = load_input_document(read_file_or_stdin(input));
  std::complex<double> gm = gauss_milgram(in.theory, g.max_group_size);
  std::cout << "gauss-milgram sum: " << fmt_complex(gm) << " (modulus " << std::abs(gm)
            << ")\n";
  if (std::abs(std::abs(gm) - 1.0) < 1e-9) {
    double turns = std::arg(gm) / (2.0 * M_PI);
    long sigma = ((std::lround(turns * 8.0) % 8) + 8) % 8;
    std::cout << "chiral central charge: " << sigma << " mod 8\n";
  } else {
    std::cout << "chiral central charge: undefined (degenerate braiding)\n";
  }
  return 0;
}

int cmd_bosons(const std::string& input, const GlobalOpts& g) {
  LoadedInput in = load_input_document(read_file_or_stdin(input));
  auto list = bosons(in.theory, g.max_group_size);
  std::cout << "bosons: " << list.size() << "\n";
  for (const auto& b : list) std::cout << "  " << label(b.coeffs()) << "\n";
  return 0;
}

int cmd_lagrangians(const std::string& input, const GlobalOpts& g) {
  LoadedInput in = load_input_document(read_file_or_stdin(input));
  auto ls = lagrangians(in.theory, std::min<std::int64_t>(g.max_group_size, 4096));
  std::cout << "lagrangian subgroups: " << ls.size() << "\n";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    std::cout << "  [" << i << "] {";
    const auto& members = ls[i].members();
    for (std::size_t j = 0; j < members.size(); ++j)
      std::cout << (j ? ", " : "") << label(members[j]);
    std::cout << "}\n";
  }
  return 0;
}

int cmd_condense(const std::string& input, const std::string& subgroup, const GlobalOpts& g) {
  LoadedInput in = load_input_document(read_file_or_stdin(input));
  Subgroup a = subgroup_generate_coeffs(in.theory.group(), parse_generator_list(subgroup),
                                        g.max_group_size);
  CondensationResult r = condense(in.theory, a, g.max_group_size);
  std::cout << "condensed " << a.order() << " anyons\n";
  std::cout << "wall anyons: " << orders_str(r.wall_anyons()) << "\n";
  std::cout << "condensed phase:\n";
  print_theory_table(r.condensed(), g, std::cout);
  return 0;
}

int cmd_wall_surgery(const std::string& input, const std::string& meridians,
                     const GlobalOpts& g) {
  LoadedInput in = load_input_document(read_file_or_stdin(input));
  if (!in.has_lattice)
    fail(ErrorKind::InvalidArgument, "wall surgery needs a Kirby diagram or Gram matrix input");
  auto gens = parse_generator_list(meridians);
  if (gens.empty()) fail(ErrorKind::InvalidArgument, "--meridian must name at least one vector");
  std::vector<IntVec> cs;
  for (const auto& t : gens) {
    IntVec c(static_cast<Eigen::Index>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) c(static_cast<Eigen::Index>(i)) = t[i];
    cs.push_back(std::move(c));
  }
  GramLattice out = cs.size() == 1 && in.lattice.rank() == cs[0].size() &&
                            !det(in.lattice.gram()).is_zero()
                        ? wall_surgery(in.lattice, cs[0])
                        : wall_surgery_iterate(in.lattice, cs);
  std::cout << "extended linking matrix:\n";
  for (Eigen::Index i = 0; i < out.rank(); ++i) {
    std::cout << " ";
    for (Eigen::Index j = 0; j < out.rank(); ++j) std::cout << " " << out.gram()(i, j);
    std::cout << "\n";
  }
  std::cout << "condensed phase:\n";
  print_theory_table(discriminant_theory(out).theory(), g, std::cout);
  return 0;
}

Polarization polarization_for(const LoadedInput& in, const std::string& pol_file) {
  // The boundary data lives on the nondegenerate radical quotient, which is
  // the input lattice itself whenever that is nondegenerate.
  const GramLattice& lattice = in.disc.nondegenerate_lattice();
  if (!pol_file.empty())
    return Polarization(lattice, parse_pos_basis(read_file_or_stdin(pol_file)));
  return Polarization::unique_definite(lattice);
}

int cmd_partition(const std::string& input, const std::string& anyon, const std::string& tau_s,
                  double radius, int eta_terms, const std::string& pol_file,
                  const GlobalOpts& g) {
  LoadedInput in = load_input_document(read_file_or_stdin(input));
  if (!in.has_lattice)
    fail(ErrorKind::InvalidArgument, "partition functions need a Kirby diagram or Gram matrix");
  Polarization pol = polarization_for(in, pol_file);
  GroupElement a(in.theory.group(), parse_coeff_tuple(anyon));
  TauPoint tau = parse_tau(tau_s);
  ThetaParams params{radius, eta_terms, g.tol};
  PartitionValue z = twisted_partition(pol, in.disc, a, tau, params);
  std::cout << std::setprecision(12);
  std::cout << "Z^" << label(a.coeffs()) << "(" << tau_s << ") = " << fmt_complex(z.value)
            << "\n";
  std::cout << "truncation bound: " << z.error_bound << "\n";
  return 0;
}

int cmd_check_modular(const std::string& input, const std::string& subgroup,
                      const std::string& tau_s, double radius, int eta_terms,
                      const std::string& pol_file, double tol, const GlobalOpts& g) {
  LoadedInput in = load_input_document(read_file_or_stdin(input));
  const AnyonTheory& t = in.theory;
  TauPoint tau = parse_tau(tau_s);
  CovarianceReport rep;
  if (subgroup.empty() && !in.has_lattice)
    fail(ErrorKind::InvalidArgument,
         "check-modular needs --subgroup (gapped) or a lattice input (gapless)");
  if (!subgroup.empty()) {
    // gapped candidate: indicator vector of the named subgroup
    Subgroup a = subgroup_generate_coeffs(t.group(), parse_generator_list(subgroup),
                                          g.max_group_size);
    auto z = [&](const GroupElement& e, const TauPoint&) {
      return std::complex<double>(a.contains(e.coeffs()) ? 1.0 : 0.0, 0.0);
    };
    rep = modular_covariance_check(t, z, {0, 0}, tau, tol);
  } else {
    Polarization pol = polarization_for(in, pol_file);
    ThetaParams params{radius, eta_terms, std::min(g.tol, tol / 10.0)};
    auto z = [&](const GroupElement& e, const TauPoint& tp) {
      return twisted_partition(pol, in.disc, e, tp, params).value;
    };
    rep = modular_covariance_check(t, z, {pol.central_plus(), pol.central_minus()}, tau, tol);
  }
  std::cout << "T-residual: " << rep.t_residual << "\n";
  std::cout << "S-residual: " << rep.s_residual() << " (orientation " << rep.orientation
            << "; +: " << rep.s_residual_plus << ", -: " << rep.s_residual_minus << ")\n";
  std::cout << (rep.pass ? "PASS" : "FAIL") << " at tolerance " << tol << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_composite(const std::string& file, const std::string& anyon, const std::string& tau_s,
                  double radius, int eta_terms, const std::string& norm_s,
                  const GlobalOpts& g) {
  BordismBoundaryData data = parse_bordism(read_file_or_stdin(file));
  Normalization norm = Normalization::CosetWeighted;
  if (norm_s == "indicator") norm = Normalization::Indicator;
  else if (norm_s != "weighted")
    fail(ErrorKind::InvalidArgument, "--normalization must be 'weighted' or 'indicator'");
  GroupElement a(data.bulk().group(), parse_coeff_tuple(anyon));
  TauPoint tau = parse_tau(tau_s);
  ThetaParams params{radius, eta_terms, g.tol};
  PartitionValue z = composite_twisted_partition(data, a, tau, params, norm);
  std::cout << std::setprecision(12);
  std::cout << "Z^" << label(a.coeffs()) << "(" << tau_s << ") = " << fmt_complex(z.value)
            << "\n";
  std::cout << "truncation bound: " << z.error_bound << "\n";
  return 0;
}

int cmd_fold(const std::string& file, const std::string& tau_s, const GlobalOpts& g) {
  std::string text = read_file_or_stdin(file);
  // bundle: {"source": theory, "target": theory, "boundary": bordism bundle}
  AnyonTheory source, target;
  BordismBoundaryData boundary = [&]() {
    try {
      auto doc = nlohmann::ordered_json::parse(text);
      if (!doc.contains("source") || !doc.contains("target") || !doc.contains("boundary"))
        fail(ErrorKind::ParseError, "fold bundle needs source/target/boundary");
      source = parse_theory(doc["source"].dump());
      target = parse_theory(doc["target"].dump());
      return parse_bordism(doc["boundary"].dump());
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::ParseError, std::string("malformed document: ") + e.what());
    }
  }();
  DomainWall wall = fold(source, target, std::move(boundary));
  TauPoint tau = parse_tau(tau_s);
  ThetaParams params{0.0, 64, g.tol};
  Int ns = source.group().order(), nt = target.group().order();
  if (ns * nt > Int(4096)) fail(ErrorKind::ResourceLimit, "wall table too large to print");
  std::cout << "wall between " << orders_str(source.group()) << " and "
            << orders_str(target.group()) << "\n";
  bool transparent = source.group() == target.group();
  std::cout << "supported pairs (source, target):\n";
  for (const auto& ca : enumerate_coeffs(source.group(), 4096)) {
    for (const auto& cb : enumerate_coeffs(target.group(), 4096)) {
      GroupElement a(source.group(), ca), b(target.group(), cb);
      std::complex<double> v =
          wall.pair_partition(a, b, tau, params, Normalization::Indicator).value;
      if (std::abs(v) > 1e-9) {
        std::cout << "  " << label(ca) << " <-> " << label(cb) << "  Z = " << fmt_complex(v)
                  << "\n";
        if (ca != cb) transparent = false;
      } else if (ca == cb) {
        transparent = false;
      }
    }
  }
  if (transparent) std::cout << "transparent wall: every anyon passes through unchanged\n";
  return 0;
}

int cmd_examples(const std::string& name, std::string out_path) {
  KirbyDiagram d;
  std::string stem = name;
  for (char& c : stem)
    if (c == ':') c = '_';
  if (name == "toric") {
    d = zn_gauge_diagram(Int(2));
  } else if (name.rfind("lens:", 0) == 0) {
    d = lens_diagram(Int(name.substr(5)));
  } else if (name.rfind("zn-gauge:", 0) == 0) {
    d = zn_gauge_diagram(Int(name.substr(9)));
  } else {
    fail(ErrorKind::InvalidArgument,
         "unknown example '" + name + "'; expected toric, lens:n, or zn-gauge:n");
  }
  if (out_path.empty()) out_path = stem + ".kirby";
  if (out_path == "-") {
    std::cout << serialize_kirby(d);
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) fail(ErrorKind::InvalidArgument, "cannot write '" + out_path + "'");
  f << serialize_kirby(d);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinlink: abelian topological orders from even linking matrices"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--tol", g.tol, "numerical tolerance for adaptive truncation");
  app.add_option("--seed", g.seed, "seed for randomized verification drivers (reserved)");
  app.add_option("--max-group-size", g.max_group_size, "enumeration bound for anyon groups");
  app.add_flag("--json", g.json, "machine-readable structured output where supported");

  std::string input = "-", subgroup, meridian, anyon = "0", tau = "0+1i", pol_file, norm =
      "weighted", name, out_path;
  double radius = 0.0, tol = 1e-6;
  int eta_terms = 64;
  bool normalized = false;

  auto* from_kirby = app.add_subcommand("from-kirby", "anyon theory of a surgery diagram");
  from_kirby->add_option("input", input, "diagram file or '-' for stdin");

  auto* anyons = app.add_subcommand("anyons", "list anyons with orders and spins");
  anyons->add_option("input", input);

  auto* smatrix = app.add_subcommand("smatrix", "modular S and T data");
  smatrix->add_option("input", input);
  smatrix->add_flag("--normalized", normalized, "print S / sqrt(|D|)");

  auto* central = app.add_subcommand("central-charge", "Gauss-Milgram sum and signature mod 8");
  central->add_option("input", input);

  auto* bos = app.add_subcommand("bosons", "anyons with vanishing spin");
  bos->add_option("input", input);

  auto* lag = app.add_subcommand("lagrangians", "all Lagrangian subgroups");
  lag->add_option("input", input);

  auto* cond = app.add_subcommand("condense", "condense an isotropic subgroup");
  cond->add_option("input", input);
  cond->add_option("--subgroup", subgroup, "generators, e.g. '1,0;0,1'")->required();

  auto* wall = app.add_subcommand("wall-surgery", "attach surgery components along bosons");
  wall->add_option("input", input);
  wall->add_option("--meridian", meridian, "meridian vectors, e.g. '0,1' or '0,1;1,0'")
      ->required();

  auto* part = app.add_subcommand("partition", "twisted partition function of a Narain boundary");
  part->add_option("input", input);
  part->add_option("--anyon", anyon, "anyon coefficients, e.g. '1,0'");
  part->add_option("--tau", tau, "modulus, e.g. '0.1+1.2i'");
  part->add_option("--radius", radius, "theta cutoff on H(v); 0 = adaptive");
  part->add_option("--eta-terms", eta_terms, "eta product terms");
  part->add_option("--polarization", pol_file, "positive-basis file for indefinite lattices");

  auto* chk = app.add_subcommand("check-modular", "verify the covariance relations");
  chk->add_option("input", input);
  chk->add_option("--subgroup", subgroup, "check the indicator vector of this subgroup");
  chk->add_option("--tau", tau);
  chk->add_option("--radius", radius);
  chk->add_option("--eta-terms", eta_terms);
  chk->add_option("--polarization", pol_file);
  chk->add_option("--check-tol", tol, "residual tolerance for pass/fail");

  auto* comp = app.add_subcommand("composite", "composite gapped+gapless boundary value");
  comp->add_option("input", input, "boundary-data bundle file");
  comp->add_option("--anyon", anyon);
  comp->add_option("--tau", tau);
  comp->add_option("--radius", radius);
  comp->add_option("--eta-terms", eta_terms);
  comp->add_option("--normalization", norm, "'weighted' (|A| prefactor) or 'indicator'");

  auto* fld = app.add_subcommand("fold", "present a boundary of a product as a domain wall");
  fld->add_option("input", input, "bundle with source/target/boundary");
  fld->add_option("--tau", tau);

  auto* ex = app.add_subcommand("examples", "write a named example diagram");
  ex->add_option("name", name, "toric | lens:n | zn-gauge:n")->required();
  ex->add_option("-o,--output", out_path, "output path ('-' for stdout)");

  for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; }))
    s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (from_kirby->parsed()) return cmd_from_kirby(input, g);
    if (anyons->parsed()) return cmd_anyons(input, g);
    if (smatrix->parsed()) return cmd_smatrix(input, normalized);
    if (central->parsed()) return cmd_central_charge(input, g);
    if (bos->parsed()) return cmd_bosons(input, g);
    if (lag->parsed()) return cmd_lagrangians(input, g);
    if (cond->parsed()) return cmd_condense(input, subgroup, g);
    if (wall->parsed()) return cmd_wall_surgery(input, meridian, g);
    if (part->parsed()) return cmd_partition(input, anyon, tau, radius, eta_terms, pol_file, g);
    if (chk->parsed())
      return cmd_check_modular(input, subgroup, tau, radius, eta_terms, pol_file, tol, g);
    if (comp->parsed()) return cmd_composite(input, anyon, tau, radius, eta_terms, norm, g);
    if (fld->parsed()) return cmd_fold(input, tau, g);
    if (ex->parsed()) return cmd_examples(name, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
