#ifndef EUCLAB_ACCEPTANCE_CRITERIA_HPP
#define EUCLAB_ACCEPTANCE_CRITERIA_HPP

#include <cstddef>
#include <iosfwd>
#include <string>

namespace euclab::acceptance {

struct Outcome {
  bool pass = true;
  std::string summary;
};

/// Runs criterion 1..8, writing per-check detail to log.
Outcome run_criterion(int id, std::ostream& log);

inline constexpr int kCriterionCount = 8;

}  // namespace euclab::acceptance

#endif  // EUCLAB_ACCEPTANCE_CRITERIA_HPP
