#include <ostream>

#include <euclab/error.hpp>
#include <euclab/factorpat.hpp>

#include "euclab_cli/cli.hpp"

namespace euclab::cli {

Mode parse_mode(const std::string& s) {
  if (s == "analyze") return Mode::Analyze;
  if (s == "census") return Mode::Census;
  if (s == "sample") return Mode::Sample;
  if (s == "table") return Mode::Table;
  if (s == "verify") return Mode::Verify;
  if (s == "schur") return Mode::Schur;
  throw UsageError("unknown mode '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("unknown format '" + s + "'");
}

Eps1Mode parse_eps1(const std::string& s) {
  if (s == "rel") return Eps1Mode::Relative;
  if (s == "abs") return Eps1Mode::Absolute;
  throw UsageError("--eps1 must be rel or abs, got '" + s + "'");
}

void validate(const ExperimentConfig& cfg) {
  const bool needs_g = cfg.mode == Mode::Analyze || cfg.mode == Mode::Census || cfg.mode == Mode::Sample ||
                       cfg.mode == Mode::Schur;
  if (needs_g) {
    if (cfg.q == 0) throw UsageError("--q is required");
    if (cfg.g.empty() == cfg.pattern.empty()) throw UsageError("give exactly one of --g and --pattern");
    if (cfg.pattern.find(';') != std::string::npos) throw UsageError("';' separated patterns are only valid in table mode");
    if (cfg.d < 1) throw UsageError("--d must be at least 1");
    if (cfg.e && *cfg.e <= cfg.d) throw UsageError("need e > d");
  }
  if (cfg.mode == Mode::Sample && cfg.n == 0) throw UsageError("--n must be at least 1");
  if (cfg.mode == Mode::Table) {
    if (!cfg.table && cfg.pattern.empty()) throw UsageError("table mode needs --table or --pattern rows");
    if (cfg.table && (*cfg.table < 1 || *cfg.table > 7)) throw UsageError("--table must be 1..7");
    if (!cfg.table && (cfg.q == 0 || cfg.d < 1)) throw UsageError("custom tables need --q and --d");
  }
}

Poly resolve_g(const FieldCtx& ctx, const ExperimentConfig& cfg) {
  Poly g;
  if (!cfg.g.empty()) {
    g = poly_parse(ctx, cfg.g);
    if (g.is_zero() || !g.is_monic()) throw UsageError("g must be monic");
  } else {
    g = build_with_pattern(ctx, parse_pattern(cfg.pattern), cfg.seed);
  }
  if (cfg.e && g.deg() != *cfg.e) {
    throw UsageError("--e " + std::to_string(*cfg.e) + " does not match deg g = " + std::to_string(g.deg()));
  }
  if (g.deg() <= cfg.d) throw UsageError("need deg g > d");
  return g;
}

int run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    switch (cfg.mode) {
      case Mode::Analyze: return cmd_analyze(cfg, out);
      case Mode::Census: return cmd_census(cfg, out);
      case Mode::Sample: return cmd_sample(cfg, out);
      case Mode::Table: return cmd_table(cfg, out);
      case Mode::Verify: return cmd_verify(cfg, out);
      case Mode::Schur: return cmd_schur(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::InfeasibleSpec:
      case Errc::EnumerationTooLarge:
      case Errc::TooLarge: return kExitInfeasible;
      default: return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace euclab::cli
