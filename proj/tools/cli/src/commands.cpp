#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include <euclab/census.hpp>
#include <euclab/estimator.hpp>
#include <euclab/factorpat.hpp>
#include <euclab/genlead.hpp>
#include <euclab/montecarlo.hpp>
#include <euclab/report_json.hpp>

#include "euclab_cli/cli.hpp"
#include "rows.hpp"

namespace euclab::cli {

using nlohmann::json;

namespace detail {

std::string eps1_text(const SampleReport& r, Eps1Mode mode) {
  if (mode == Eps1Mode::Absolute) return format_fixed6(r.eps1_abs);
  return r.eps1_rel ? format_fixed6(*r.eps1_rel) : "NA";
}

std::string eps2_text(const SampleReport& r) { return r.eps2 ? format_fixed6(*r.eps2) : "NA"; }

std::string sample_columns(const SampleReport& r, Eps1Mode mode) {
  return format_fixed6(r.mu) + "," + format_fixed6(r.main.E_g) + "," + format_fixed6(r.beta) + "," +
         format_fixed6(r.main.P0) + "," + format_fixed6(r.gamma) + "," + format_fixed6(r.main.PG) + "," +
         eps1_text(r, mode) + "," + eps2_text(r);
}

json sample_row_json(const SampleReport& r, Eps1Mode mode) {
  json j = to_json(r);
  j["eps1_mode"] = mode == Eps1Mode::Relative ? "rel" : "abs";
  j["columns"] = {{"mu", format_fixed6(r.mu)},          {"E_g", format_fixed6(r.main.E_g)},
                  {"beta", format_fixed6(r.beta)},      {"P0", format_fixed6(r.main.P0)},
                  {"gamma", format_fixed6(r.gamma)},    {"PG", format_fixed6(r.main.PG)},
                  {"eps1", eps1_text(r, mode)},         {"eps2", eps2_text(r)}};
  return j;
}

}  // namespace detail

namespace {

void csv_rational(std::ostream& out, const std::string& name, const Rational& x) {
  out << name << "," << fraction_string(x) << "," << format_fixed6(x) << "\n";
}

void csv_interval(std::ostream& out, const std::string& name, const Interval& i) {
  csv_rational(out, name + "_lower", i.lower);
  csv_rational(out, name + "_upper", i.upper);
}

}  // namespace

int cmd_analyze(const ExperimentConfig& cfg, std::ostream& out) {
  const FieldCtx ctx(cfg.q);
  const Poly g = resolve_g(ctx, cfg);
  const FactorProfile prof = profile(ctx, g);
  const BoundReport b = bound_report(cfg.q, cfg.d, prof);
  if (cfg.format == Format::Json) {
    out << json{{"g", poly_json(g)}, {"profile", to_json(prof)}, {"bounds", to_json(b)}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "quantity,fraction,value\n";
  csv_rational(out, "E_g", b.main.E_g);
  csv_rational(out, "P0", b.main.P0);
  csv_rational(out, "PG", b.main.PG);
  out << "k_exceeds_d," << b.main.k_exceeds_d << "," << b.main.k_exceeds_d << "\n";
  if (b.union_bounds) csv_interval(out, "union", *b.union_bounds);
  if (b.coprime) csv_interval(out, "coprime", b.coprime->bounds);
  if (b.avgdeg) {
    csv_interval(out, "avgdeg", b.avgdeg->bounds);
    csv_rational(out, "avgdeg_upper_eta", b.avgdeg->upper_eta);
    csv_rational(out, "avgdeg_simple_upper", b.avgdeg->simple_upper);
  }
  const std::pair<const char*, const CostWindow*> windows[] = {
      {"polydiv", &b.cost.polydiv}, {"fielddiv", &b.cost.fielddiv}, {"addmul", &b.cost.addmul}};
  for (const auto& [name, w] : windows) {
    csv_rational(out, std::string("cost_") + name + "_lemma_lower", w->lemma_lower);
    csv_rational(out, std::string("cost_") + name + "_lemma_upper", w->lemma_upper);
    csv_rational(out, std::string("cost_") + name + "_thm_lower", w->thm_lower);
    csv_rational(out, std::string("cost_") + name + "_thm_upper", w->thm_upper);
  }
  csv_rational(out, "generic_count_lower", b.generic_lower);
  return kExitOk;
}

int cmd_census(const ExperimentConfig& cfg, std::ostream& out) {
  const FieldCtx ctx(cfg.q);
  const Poly g = resolve_g(ctx, cfg);
  const CensusReport r = exact_distribution(ctx, g, cfg.d, cfg.cap);
  if (cfg.format == Format::Json) {
    const BoundReport b = bound_report(cfg.q, cfg.d, profile(ctx, g));
    out << json{{"census", to_json(r)}, {"bounds", to_json(b)}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "i,B_i\n";
  for (std::size_t i = 0; i < r.B.size(); ++i) out << i << "," << r.B[i] << "\n";
  return kExitOk;
}

int cmd_sample(const ExperimentConfig& cfg, std::ostream& out) {
  const FieldCtx ctx(cfg.q);
  const Poly g = resolve_g(ctx, cfg);
  const SampleReport r = monte_carlo(ctx, g, cfg.d, cfg.n, cfg.seed);
  const Eps1Mode mode = cfg.eps1.value_or(Eps1Mode::Relative);
  if (cfg.format == Format::Json) {
    out << detail::sample_row_json(r, mode).dump(2) << "\n";
    return kExitOk;
  }
  out << "k,lambda_k_star," << detail::kSampleHeader << "\n";
  out << r.profile.k << "," << r.profile.lambda_star_at(r.profile.k) << "," << detail::sample_columns(r, mode) << "\n";
  return kExitOk;
}

int cmd_schur(const ExperimentConfig& cfg, std::ostream& out) {
  const FieldCtx ctx(cfg.q);
  const Poly g = resolve_g(ctx, cfg);
  const GenericLeadSet set = generic_lead(ctx, g, cfg.d);
  if (cfg.format == Format::Json) {
    out << to_json(set).dump(2) << "\n";
    return kExitOk;
  }
  out << "k,degree,monic_scalar,euclid_scalar,G_k\n";
  for (const auto& l : set.leads) {
    out << l.k << "," << l.poly.total_degree() << "," << l.monic_scalar.value << ","
        << (l.euclid_scalar ? std::to_string(l.euclid_scalar->value) : "NA") << ",\"" << to_string(l.poly) << "\"\n";
  }
  return kExitOk;
}

int cmd_verify(const ExperimentConfig& cfg, std::ostream& out) {
  const auto results = run_verify_suites(cfg.suite, cfg.trials, cfg.seed);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.failures == 0;
  if (cfg.format == Format::Json) {
    json suites = json::array();
    for (const auto& r : results) {
      suites.push_back({{"suite", r.name},
                        {"trials", r.trials},
                        {"failures", r.failures},
                        {"first_failure", r.first_failure}});
    }
    out << json{{"ok", ok}, {"suites", suites}}.dump(2) << "\n";
  } else {
    out << "suite,trials,failures\n";
    for (const auto& r : results) out << r.name << "," << r.trials << "," << r.failures << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace euclab::cli
