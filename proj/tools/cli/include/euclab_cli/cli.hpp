#ifndef EUCLAB_CLI_CLI_HPP
#define EUCLAB_CLI_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <euclab/census.hpp>
#include <euclab/field.hpp>
#include <euclab/poly.hpp>

namespace euclab::cli {

enum class Mode { Analyze, Census, Sample, Table, Verify, Schur };
enum class Format { Json, Csv };
enum class Eps1Mode { Relative, Absolute };

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerifyFailed = 2,
  kExitInfeasible = 3,
};

struct ExperimentConfig {
  Mode mode = Mode::Analyze;
  u64 q = 0;
  std::optional<std::size_t> e;
  std::size_t d = 0;
  std::string g;        // "c0,c1,...", ascending
  std::string pattern;  // factorization pattern; ';' separates table rows
  std::uint64_t n = 0;  // 0: mode default
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultEnumerationCap;
  Format format = Format::Json;
  std::optional<Eps1Mode> eps1;
  std::optional<int> table;  // built-in table 1..7
  std::string suite = "all";
  std::size_t trials = 0;    // 0: suite default
  std::string out;           // empty: stdout
};

/// Bad or inconsistent command-line input (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Mode parse_mode(const std::string& s);
Format parse_format(const std::string& s);
Eps1Mode parse_eps1(const std::string& s);

/// Checks the invariants of the selected mode; throws UsageError.
void validate(const ExperimentConfig& cfg);

/// g from --g or --pattern (pattern built with cfg.seed). Checks --e.
Poly resolve_g(const FieldCtx& ctx, const ExperimentConfig& cfg);

int cmd_analyze(const ExperimentConfig& cfg, std::ostream& out);
int cmd_census(const ExperimentConfig& cfg, std::ostream& out);
int cmd_sample(const ExperimentConfig& cfg, std::ostream& out);
int cmd_table(const ExperimentConfig& cfg, std::ostream& out);
int cmd_verify(const ExperimentConfig& cfg, std::ostream& out);
int cmd_schur(const ExperimentConfig& cfg, std::ostream& out);

/// Validates, dispatches on mode and maps errors to exit codes; messages go
/// to err.
int run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

struct TableRow {
  std::size_t k = 1;
  std::size_t lambda = 1;
  std::string pattern;
};

struct TableSpec {
  int id = 0;
  u64 q = 0;
  std::size_t e = 0;
  std::size_t d = 0;
  std::uint64_t n = 0;  // default sample size
  Eps1Mode eps1 = Eps1Mode::Relative;
  bool lambda1_layout = true;  // first column is lambda_1^* instead of (k, lambda_k^*)
  std::vector<TableRow> rows;
};

/// The seven simulation tables; throws UsageError for other ids.
const TableSpec& builtin_table(int id);

/// Seed for building g of row `row`; the row's sample stream uses
/// mix64(table_row_seed(...) + 1).
std::uint64_t table_row_seed(std::uint64_t seed, int id, std::size_t row);

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Suites: cauchy, lascoux, newton, roots, resultant, leads,
/// characterizations, schur; "all" runs every one.
std::vector<SuiteResult> run_verify_suites(const std::string& suite, std::size_t trials, std::uint64_t seed);

}  // namespace euclab::cli

#endif  // EUCLAB_CLI_CLI_HPP
