#ifndef EUCLAB_CLI_ROWS_HPP
#define EUCLAB_CLI_ROWS_HPP

#include <string>

#include <nlohmann/json.hpp>

#include <euclab/montecarlo.hpp>

#include "euclab_cli/cli.hpp"

namespace euclab::cli::detail {

std::string eps1_text(const SampleReport& r, Eps1Mode mode);
std::string eps2_text(const SampleReport& r);

/// mu,E_g,beta,P0,gamma,PG,eps1,eps2 (no trailing newline).
std::string sample_columns(const SampleReport& r, Eps1Mode mode);
inline constexpr const char* kSampleHeader = "mu,E_g,beta,P0,gamma,PG,eps1,eps2";

nlohmann::json sample_row_json(const SampleReport& r, Eps1Mode mode);

}  // namespace euclab::cli::detail

#endif  // EUCLAB_CLI_ROWS_HPP
