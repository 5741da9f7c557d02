#include <map>
#include <ostream>

#include <nlohmann/json.hpp>

#include <euclab/factorpat.hpp>
#include <euclab/montecarlo.hpp>
#include <euclab/report_json.hpp>
#include <euclab/rng.hpp>

#include "euclab_cli/cli.hpp"
#include "rows.hpp"

namespace euclab::cli {

using nlohmann::json;

namespace {

std::vector<TableRow> lambda1_rows(std::initializer_list<const char*> patterns) {
  std::vector<TableRow> rows;
  for (const char* p : patterns) {
    const auto terms = parse_pattern(p);
    std::size_t lambda = 0;
    for (const auto& t : terms)
      if (t.degree == 1) lambda += t.count;
    rows.push_back({1, lambda, p});
  }
  return rows;
}

std::map<int, TableSpec> make_tables() {
  std::map<int, TableSpec> t;
  t[1] = {1, 67, 7, 3, 300000, Eps1Mode::Relative, true,
          lambda1_rows({"1x1,6", "1x2,5", "1x3,4", "1x4,3", "1x5,2", "1^2x1,1x5", "1x7"})};
  const auto e9 = {"1x1,8", "1x2,7", "1x3,6", "1x4,5", "1x5,4", "1x6,3", "1x7,2", "1^2x1,1x7", "1x9"};
  t[2] = {2, 127, 9, 4, 10000000, Eps1Mode::Relative, true, lambda1_rows(e9)};
  t[3] = {3, 409, 9, 4, 10000000, Eps1Mode::Relative, true,
          lambda1_rows({"1x1,8", "1x1,8", "1x2,7", "1x2,7", "1x3,6", "1x3,6", "1x4,5", "1x4,5", "1x5,4", "1x5,4",
                        "1x6,3", "1x7,2", "1^2x1,1x7", "1x9"})};
  t[4] = {4, 67, 7, 3, 300000, Eps1Mode::Absolute, false,
          {{2, 1, "2,5"}, {2, 2, "2x2,3"}, {3, 1, "3,4"}, {3, 1, "3,4"}}};
  t[5] = {5, 127, 9, 4, 10000000, Eps1Mode::Absolute, false,
          {{2, 1, "2,7"}, {2, 2, "2x2,5"}, {3, 1, "3,6"}, {4, 1, "4,5"}}};
  t[6] = {6, 211, 17, 7, 10000000, Eps1Mode::Absolute, false,
          {{2, 2, "2x2,13"}, {2, 1, "2,15"}, {3, 1, "3,14"}, {3, 2, "3x2,11"}}};
  t[7] = {7, 409, 9, 4, 10000000, Eps1Mode::Absolute, false,
          {{2, 2, "2x2,5"}, {2, 1, "2,7"}, {3, 2, "3^2x1,3"}, {3, 1, "3,6"}}};
  return t;
}

}  // namespace

std::uint64_t table_row_seed(std::uint64_t seed, int id, std::size_t row) {
  return mix64(seed ^ mix64(static_cast<std::uint64_t>(id) * 1000 + row));
}

const TableSpec& builtin_table(int id) {
  static const std::map<int, TableSpec> tables = make_tables();
  auto it = tables.find(id);
  if (it == tables.end()) throw UsageError("no built-in table " + std::to_string(id));
  return it->second;
}

int cmd_table(const ExperimentConfig& cfg, std::ostream& out) {
  TableSpec spec;
  if (cfg.table) {
    spec = builtin_table(*cfg.table);
  } else {
    spec.q = cfg.q;
    spec.d = cfg.d;
    spec.lambda1_layout = false;
    spec.eps1 = Eps1Mode::Relative;
    std::size_t pos = 0;
    while (pos <= cfg.pattern.size()) {
      const std::size_t end = std::min(cfg.pattern.find(';', pos), cfg.pattern.size());
      spec.rows.push_back({0, 0, cfg.pattern.substr(pos, end - pos)});
      pos = end + 1;
    }
  }
  if (cfg.n) spec.n = cfg.n;
  if (spec.n == 0) throw UsageError("--n must be at least 1");
  const Eps1Mode mode = cfg.eps1.value_or(spec.eps1);
  const FieldCtx ctx(spec.q);

  json rows = json::array();
  if (cfg.format == Format::Csv) out << (spec.lambda1_layout ? "lambda_1_star," : "k,lambda_k_star,") << detail::kSampleHeader << "\n";
  for (std::size_t i = 0; i < spec.rows.size(); ++i) {
    const TableRow& row = spec.rows[i];
    const std::uint64_t row_seed = table_row_seed(cfg.seed, spec.id, i);
    const Poly g = build_with_pattern(ctx, parse_pattern(row.pattern), row_seed);
    if (spec.e && g.deg() != spec.e) throw UsageError("row pattern '" + row.pattern + "' has the wrong degree");
    if (g.deg() <= spec.d) throw UsageError("row pattern '" + row.pattern + "' needs degree > d");
    const SampleReport r = monte_carlo(ctx, g, spec.d, spec.n, mix64(row_seed + 1));
    const std::size_t k = r.profile.k;
    const std::size_t lambda = r.profile.lambda_star_at(k);
    if (cfg.format == Format::Csv) {
      if (spec.lambda1_layout) out << lambda << ",";
      else out << k << "," << lambda << ",";
      out << detail::sample_columns(r, mode) << "\n";
    } else {
      json j = detail::sample_row_json(r, mode);
      j["pattern"] = row.pattern;
      j["g"] = poly_json(g);
      j["k"] = k;
      j["lambda_k_star"] = lambda;
      rows.push_back(std::move(j));
    }
  }
  if (cfg.format == Format::Json) {
    out << json{{"table", spec.id}, {"q", spec.q}, {"d", spec.d}, {"n", spec.n}, {"rows", rows}}.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace euclab::cli
