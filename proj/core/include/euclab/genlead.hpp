#ifndef EUCLAB_GENLEAD_HPP
#define EUCLAB_GENLEAD_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "euclab/field.hpp"
#include "euclab/multipoly.hpp"
#include "euclab/poly.hpp"

namespace euclab {

/// S^0(A), ..., S^N(A) for A the roots of monic g, as the power-series
/// inverse of the reversed polynomial z^e g(1/z). No root finding.
std::vector<FieldElem> complete_from_poly(const FieldCtx& ctx, const Poly& g, std::size_t N);

/// (s_1, ..., s_d) with s_i the coefficient of T^{d-i} in f.
std::vector<FieldElem> generic_coordinates(const Poly& f);

struct GenericLead {
  std::size_t k = 0;
  MultiPoly poly;  // normalized: coefficient of s_k^{e-d+k} is 1
  /// Raw determinantal coefficient of s_k^{e-d+k}, divided out of poly.
  FieldElem monic_scalar;
  /// nu with eval(poly, s(f)) = nu * prod_{i<k} lc(r_i)^2 * lc(r_k), measured
  /// on an f whose remainders are generic through step k. Empty when no
  /// such f was found.
  std::optional<FieldElem> euclid_scalar;
};

struct GenericLeadSet {
  u64 q = 0;
  std::size_t e = 0;
  std::size_t d = 0;
  Poly g;
  std::vector<GenericLead> leads;  // leads[k-1] holds G_k

  const MultiPoly& G(std::size_t k) const { return leads.at(k - 1).poly; }
};

/// G_1..G_d as polynomials in s_1..s_d. Requires g monic with
/// 1 <= d < e = deg g; throws Error{TooLarge} when e > max_e.
GenericLeadSet generic_lead(const FieldCtx& ctx, const Poly& g, std::size_t d, std::size_t max_e = 12);

/// Throws Error{DimensionMismatch} when point.size() != p.nvars().
FieldElem eval_multipoly(const FieldCtx& ctx, const MultiPoly& p, std::span<const FieldElem> point);

}  // namespace euclab

#endif  // EUCLAB_GENLEAD_HPP
