// dynsym: derive, verify, and numerically validate the deformed Coulomb /
// oscillator operator algebras and their spectra.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dynsym/report.hpp"

namespace {

using namespace dynsym;

// exact rational from "p/q", integer, or (with allow_decimal) decimal strings
Rational parse_rational(const std::string& text, bool allow_decimal) {
  auto bad = [&]() { throw ParseError("invalid rational: '" + text + "'"); };
  if (text.empty()) bad();
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt p(text.substr(0, slash)), q(text.substr(slash + 1));
      if (q == 0) bad();
      return Rational(p, q);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      if (!allow_decimal)
        throw ParseError("decimal lambda requires --approx (use p/q for the exact pipeline)");
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      if (digits.empty() || digits == "-" || digits == "+") bad();
      BigInt p(digits);
      BigInt q = 1;
      for (std::size_t k = dot + 1; k < text.size(); ++k) q *= 10;
      return Rational(p, q);
    }
    return Rational(BigInt(text));
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational(0);
}

struct CliOptions {
  std::string system = "coulomb";
  int dim = 2;
  std::string lambda = "0";
  int levels = 2;
  int grid = 256;
  int radial_grid = 4000;
  double rmax = -1;
  double box = -1;
  int degree = 2;
  int lambda_degree = 2;
  std::string convention = "half";
  std::string format;
  std::string out;
  bool approx = false;
};

RunConfig to_config(const CliOptions& o) {
  RunConfig cfg;
  if (o.system == "coulomb") cfg.family = Family::coulomb;
  else if (o.system == "oscillator") cfg.family = Family::oscillator;
  else throw ParseError("unknown system: " + o.system);
  cfg.dim = o.dim;
  cfg.lambda = parse_rational(o.lambda, o.approx);
  cfg.levels = o.levels;
  cfg.cart_points = o.grid;
  cfg.radial_points = o.radial_grid;
  cfg.rmax = o.rmax;
  cfg.box = o.box;
  cfg.bounds = FitBounds{o.degree, o.lambda_degree};
  // "auto" resolves to the convention under which conservation holds
  cfg.convention = (o.convention == "full") ? LsqConvention::full : LsqConvention::half;
  if (o.convention != "half" && o.convention != "full" && o.convention != "auto")
    throw ParseError("unknown convention: " + o.convention);
  return cfg;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file: " + path);
  f << text;
}

void emit(const ValidationResult& res, const std::string& format, const std::string& out) {
  std::string fmt = format.empty() ? "text" : format;
  if (fmt == "json") write_output(report_json(res).dump(2) + "\n", out);
  else if (fmt == "csv") write_output(report_csv(res), out);
  else if (fmt == "text") write_output(report_text(res), out);
  else throw ParseError("unknown format: " + fmt);
}

int run_verify(const CliOptions& opt) {
  CliOptions o = opt;
  if (o.lambda == "sym") o.lambda = "0";  // verify is symbolic in lambda anyway
  RunConfig cfg = to_config(o);
  SystemSpec spec{cfg.family, cfg.dim, cfg.convention};
  GeneratorSet g = build_system(spec);

  std::vector<Discrepancy> discs;
  int step = cfg.family == Family::coulomb ? 1 : 2;
  std::string header = "system=" + family_name(cfg.family) + " dim=" + std::to_string(cfg.dim) +
                       " convention=" + convention_name(cfg.convention) + "\n";
  std::string body;
  if (cfg.dim == 2) {
    LadderReport rep = verify_ladder(g, step, cfg.bounds);
    body += "ladder step " + std::to_string(rep.step) + ": " + rep.raising + ", " + rep.lowering +
            "\n";
    body += "F = " + rep.F_fit.str() + "\nG = " + rep.G_fit.str() + "\n";
    discs = rep.discrepancies;
  }
  if (cfg.family == Family::oscillator) {
    auto sc = oscillator_scalar_checks(g);
    discs.insert(discs.end(), sc.begin(), sc.end());
    int N = cfg.dim;
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        discs.push_back(l_s_commutator_check(g, i, j, i, i));
        discs.push_back(s_commutator_check(g, i, i, i, j));
      }
  } else {
    // conservation of the deformed vector: canonical zeros
    for (std::size_t i = 0; i < g.R.size(); ++i) {
      auto c = commutator(g.H, g.R[i]);
      Discrepancy d;
      d.tag = "[H,R" + std::to_string(i + 1) + "]";
      d.printed = "0";
      d.match = c.is_zero();
      d.computed = d.match ? "match" : to_string(c);
      discs.push_back(d);
    }
  }
  for (const auto& d : discs)
    body += std::string(d.match ? "[match   ] " : "[MISMATCH] ") + d.tag + ": " + d.printed +
            (d.match ? "" : "  => " + d.computed) + "\n";
  write_output(header + body, opt.out);
  // structural failures (non-conservation) fail; printed-formula mismatches
  // are findings and reported above without failing
  for (const auto& d : discs)
    if (!d.match && d.printed == "0") return 1;
  return 0;
}

int run_spectrum(const CliOptions& opt, bool with_numerics) {
  RunConfig cfg = to_config(opt);
  cfg.with_numerics = with_numerics;
  ValidationResult res = run_validation(cfg);
  emit(res, opt.format.empty() && with_numerics ? "text" : opt.format, opt.out);
  if (!with_numerics) return 0;
  return res.numerics_ok ? 0 : 1;
}

int run_report(const CliOptions& opt) {
  RunConfig cfg = to_config(opt);
  ValidationResult res = run_validation(cfg);
  std::string fmt = opt.format.empty() ? "json" : opt.format;
  if (fmt == "json") write_output(report_json(res).dump(2) + "\n", opt.out);
  else emit(res, fmt, opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformed dynamical-symmetry engine"};
  app.require_subcommand(1);
  app.set_config("--config");

  CliOptions opt;
  std::string cmd;
  for (const char* name : {"verify", "spectrum", "validate", "report"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--system", opt.system, "coulomb | oscillator");
    sub->add_option("--dim", opt.dim, "spatial dimension (>= 2)");
    sub->add_option("--lambda", opt.lambda, "deformation parameter, exact rational p/q");
    sub->add_option("--levels", opt.levels, "number of levels n = 0..levels-1");
    sub->add_option("--grid", opt.grid, "cartesian points per axis");
    sub->add_option("--radial-grid", opt.radial_grid, "radial grid points");
    sub->add_option("--rmax", opt.rmax, "radial box size");
    sub->add_option("--box", opt.box, "cartesian box width");
    sub->add_option("--degree", opt.degree, "total degree bound of the scalar fit");
    sub->add_option("--lambda-degree", opt.lambda_degree, "lambda degree bound of the scalar fit");
    sub->add_option("--convention", opt.convention, "half | full | auto");
    sub->add_option("--format", opt.format, "json | csv | text");
    sub->add_option("--out", opt.out, "output path (default stdout)");
    sub->add_flag("--approx", opt.approx, "allow decimal lambda (converted exactly)");
    sub->callback([&cmd, name]() { cmd = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd == "verify") return run_verify(opt);
    if (cmd == "spectrum") return run_spectrum(opt, false);
    if (cmd == "validate") return run_spectrum(opt, true);
    return run_report(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
