#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "euclab_cli/cli.hpp"

int main(int argc, char** argv) {
  using namespace euclab::cli;
  CLI::App app{"euclab: instrumented Euclidean algorithm over F_q"};
  ExperimentConfig cfg;
  std::string mode = "analyze", format = "json", eps1;
  std::size_t e = 0;
  int table = 0;

  app.add_option("--mode", mode, "analyze | census | sample | table | verify | schur");
  app.add_option("--q", cfg.q, "prime field size");
  app.add_option("--e", e, "expected degree of g (checked)");
  app.add_option("--d", cfg.d, "degree of f");
  app.add_option("--g", cfg.g, "coefficients of g, ascending: c0,c1,...");
  app.add_option("--pattern", cfg.pattern, "factorization pattern, e.g. 1^1x7 or 2x2,3 (';' between table rows)");
  app.add_option("--n", cfg.n, "sample size");
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--cap", cfg.cap, "enumeration cap for census");
  app.add_option("--format", format, "json | csv");
  app.add_option("--eps1", eps1, "rel | abs");
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--table", table, "built-in table 1..7");
  app.add_option("--suite", cfg.suite, "verify suite name or all");
  app.add_option("--trials", cfg.trials, "verify trials per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.mode = parse_mode(mode);
    cfg.format = parse_format(format);
    if (!eps1.empty()) cfg.eps1 = parse_eps1(eps1);
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kExitUsage;
  }
  if (e) cfg.e = e;
  if (table) cfg.table = table;

  if (cfg.out.empty()) return run(cfg, std::cout, std::cerr);
  std::ofstream file(cfg.out);
  if (!file) {
    std::cerr << "cannot open " << cfg.out << "\n";
    return kExitUsage;
  }
  return run(cfg, file, std::cerr);
}
