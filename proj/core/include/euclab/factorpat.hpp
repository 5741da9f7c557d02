#ifndef EUCLAB_FACTORPAT_HPP
#define EUCLAB_FACTORPAT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "euclab/field.hpp"
#include "euclab/poly.hpp"

namespace euclab {

struct SquarefreeLayer {
  std::size_t multiplicity = 0;
  Poly factor;  // monic, squarefree

  friend bool operator==(const SquarefreeLayer&, const SquarefreeLayer&) = default;
};

/// g = prod layer.factor^layer.multiplicity, layers pairwise coprime and
/// sorted by multiplicity. Handles multiplicities divisible by p through
/// p-th root extraction. Requires g monic of degree >= 1.
std::vector<SquarefreeLayer> squarefree_decomposition(const FieldCtx& ctx, const Poly& g);

/// Entry i-1 is the number of distinct irreducible factors of degree i of the
/// squarefree input; length deg(gsf). Throws Error{NotSquarefree}.
std::vector<std::size_t> ddf_pattern(const FieldCtx& ctx, const Poly& gsf);

bool is_irreducible(const FieldCtx& ctx, const Poly& p);

/// Factorization pattern data of g (vectors indexed by degree - 1).
struct FactorProfile {
  std::size_t degree = 0;                 // e
  std::vector<std::size_t> lambda;        // with multiplicity
  std::vector<std::size_t> lambda_star;   // distinct factors
  std::size_t k = 0;                      // least i with lambda_star_i > 0
  std::vector<SquarefreeLayer> layers;
  /// (degree j, exact multiplicity m) -> number of distinct irreducible factors.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> degree_multiplicity;

  std::size_t lambda_at(std::size_t i) const noexcept { return i >= 1 && i <= lambda.size() ? lambda[i - 1] : 0; }
  std::size_t lambda_star_at(std::size_t i) const noexcept {
    return i >= 1 && i <= lambda_star.size() ? lambda_star[i - 1] : 0;
  }
  bool squarefree() const noexcept { return lambda == lambda_star; }
};

FactorProfile profile(const FieldCtx& ctx, const Poly& g);

/// Exact number of distinct monic divisors of g of degree i:
/// [X^i] prod over distinct factors (deg j, mult m) of (1 + X^j + ... + X^{jm}).
std::uint64_t divisor_count_eta(const FactorProfile& prof, std::size_t i);

struct EtaBounds {
  std::uint64_t binomial_bound = 0;  // C(k lambda_k + ... + i lambda_i, i)
  std::uint64_t power_bound = 0;     // 2^(lambda_k + ... + lambda_i)
};

/// lambda is indexed by degree - 1. Requires k <= i.
EtaBounds eta_bounds(std::span<const std::size_t> lambda, std::size_t k, std::size_t i);

/// [X^i] prod_{j=k}^{i} (1 + X^j)^{lambda_j}, lambda indexed by degree - 1.
std::uint64_t gf_coefficient(std::span<const std::size_t> lambda, std::size_t k, std::size_t i);

std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// One block of a requested pattern: `count` distinct monic irreducibles of
/// `degree`, each raised to `multiplicity`.
struct PatternTerm {
  std::size_t degree = 1;
  std::size_t multiplicity = 1;
  std::size_t count = 1;

  friend bool operator==(const PatternTerm&, const PatternTerm&) = default;
};

/// Grammar: term ("," term)*, term := DEG ["^" MULT] ["x" COUNT].
/// "1^1x7" is seven distinct linear factors; "2x2,5" is two quadratics and
/// one quintic. Throws Error{ParseError}.
std::vector<PatternTerm> parse_pattern(std::string_view text);
std::string format_pattern(std::span<const PatternTerm> terms);
std::size_t pattern_degree(std::span<const PatternTerm> terms);

/// Number of monic irreducible polynomials of degree n over F_q, saturating
/// at UINT64_MAX.
std::uint64_t count_monic_irreducibles(u64 q, std::size_t n);

/// Deterministic for a fixed seed; all irreducibles in the result are
/// pairwise distinct. Throws Error{InfeasibleSpec}.
Poly build_with_pattern(const FieldCtx& ctx, std::span<const PatternTerm> terms, std::uint64_t seed,
                        std::size_t max_degree = 64);

}  // namespace euclab

#endif  // EUCLAB_FACTORPAT_HPP
