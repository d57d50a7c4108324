// idealops — verify closure/semiprime operation structure on the ideal
// lattices of three ring models, and draw the lattices.
//
//   idealops verify --ring cusp --p 2 --max 6 --suite all
//   idealops verify --ring dvr --max 8 --suite enumeration,prime-scan
//   idealops diagram --ring cusp --p 2 --max 5 --op 'cusp:fpoint(m=4,a=0,zero=closed)'
//
// exit status: 0 all checks passed, 2 failures or findings, 64 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "idealops/diagram.hpp"
#include "idealops/report.hpp"
#include "idealops/suite.hpp"

using namespace idealops;

namespace {

Window window_from(const std::string& ring, int p, int D, int primes,
                   bool tables_selected) {
  if (ring == "dvr") return dvr_window(D > 0 ? D : 8);
  if (ring == "ded") return ded_window(primes, D > 0 ? D : 4);
  if (ring == "cusp") return cusp_window(p, D > 0 ? D : (tables_selected ? 8 : 6));
  throw std::invalid_argument("ring must be one of dvr, ded, cusp");
}

int write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open " << path << "\n";
    return 64;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closure and semiprime operations on ideal lattices"};
  app.require_subcommand(1);

  std::string ring = "dvr", suites_arg = "all", format = "human", out_path;
  std::string op_literal;
  int p = 2, D = 0, primes = 2;

  auto add_window_flags = [&](CLI::App* cmd) {
    cmd->add_option("--ring", ring, "ring family: dvr | ded | cusp")->required();
    cmd->add_option("--p", p, "field characteristic (cusp)");
    cmd->add_option("--max", D, "window bound D");
    cmd->add_option("--primes", primes, "number of maximal ideals (ded)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_window_flags(verify);
  verify->add_option("--suite", suites_arg,
                     "comma-separated: oracle,axioms,tables,act,enumeration,"
                     "prime-scan,exceptional or 'all'");
  verify->add_option("--format", format, "human | structured");
  verify->add_option("--out", out_path, "write the report to a file");

  CLI::App* diagram = app.add_subcommand("diagram", "emit the lattice as DOT");
  add_window_flags(diagram);
  diagram->add_option("--op", op_literal, "closure-operation literal to draw");
  diagram->add_option("--out", out_path, "write the DOT text to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (verify->parsed()) {
      SuiteConfig cfg;
      std::stringstream ss(suites_arg);
      std::string name;
      while (std::getline(ss, name, ',')) {
        if (name == "all") {
          cfg.suites = suite_names();
          break;
        }
        auto known = suite_names();
        if (std::find(known.begin(), known.end(), name) == known.end())
          throw std::invalid_argument("unknown suite '" + name + "'");
        cfg.suites.push_back(name);
      }
      bool tables = std::find(cfg.suites.begin(), cfg.suites.end(),
                              "tables") != cfg.suites.end();
      cfg.window = window_from(ring, p, D, primes, tables);
      cfg.structured = format == "structured";
      Report rep = run_suite(cfg);
      std::ostringstream os;
      if (cfg.structured)
        write_report(os, rep, config_string(cfg));
      else
        write_human(os, rep, config_string(cfg));
      int wr = write_out(out_path, os.str());
      if (wr != 0) return wr;
      return rep.exit_status();
    }
    if (diagram->parsed()) {
      Window w = window_from(ring, p, D, primes, false);
      std::optional<ClosureOp> op;
      if (!op_literal.empty()) op = parse_op(w.ring, op_literal);
      return write_out(out_path, emit_diagram(w, op));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 64;
}
