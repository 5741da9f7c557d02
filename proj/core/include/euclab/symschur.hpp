#ifndef EUCLAB_SYMSCHUR_HPP
#define EUCLAB_SYMSCHUR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "euclab/field.hpp"
#include "euclab/poly.hpp"

namespace euclab {

/// Finite alphabet specialized to field values; repeats allowed.
struct Alphabet {
  std::vector<FieldElem> elements;

  std::size_t size() const noexcept { return elements.size(); }
};

Alphabet concat(const Alphabet& a, const Alphabet& b);

/// Truncated power series S^0 + S^1 z + ... + S^N z^N over F_q.
class SymSeries {
 public:
  SymSeries() = default;
  explicit SymSeries(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) {}

  std::size_t order() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }  // N
  /// 0 for i < 0; throws Error{IndexOutOfRange} for i > N.
  FieldElem at(std::ptrdiff_t i) const;
  std::span<const FieldElem> coeffs() const noexcept { return c_; }

  friend bool operator==(const SymSeries&, const SymSeries&) = default;

 private:
  std::vector<FieldElem> c_;
};

/// Truncated to the smaller order of the two operands.
SymSeries series_mul(const FieldCtx& ctx, const SymSeries& a, const SymSeries& b);
/// Requires a.at(0) != 0.
SymSeries series_inverse(const FieldCtx& ctx, const SymSeries& a);

SymSeries complete(const FieldCtx& ctx, const Alphabet& A, std::size_t N);    // prod 1/(1 - z a)
SymSeries elementary(const FieldCtx& ctx, const Alphabet& A, std::size_t N);  // prod (1 + z a)

struct CompleteElementary {
  SymSeries S;
  SymSeries Lambda;
};

CompleteElementary complete_and_elementary(const FieldCtx& ctx, const Alphabet& A, std::size_t N);

/// S^i(A - B): coefficients of prod(1 - z b) / prod(1 - z a).
SymSeries s_difference(const FieldCtx& ctx, const Alphabet& A, const Alphabet& B, std::size_t N);
/// Same values through the convolution sum_{j+k=i} S^j(A) (-1)^k Lambda^k(B).
SymSeries s_difference_cauchy(const FieldCtx& ctx, const Alphabet& A, const Alphabet& B, std::size_t N);

using FieldMatrix = std::vector<std::vector<FieldElem>>;

/// Determinant by Gaussian elimination with pivot search; 1 for the empty
/// matrix. Throws Error{DimensionMismatch} for a non-square input.
FieldElem field_det(const FieldCtx& ctx, FieldMatrix M);

/// S_J = det(S^{j_k + k - h})_{1 <= h,k <= n}.
FieldElem schur_det(const FieldCtx& ctx, std::span<const std::size_t> J, const SymSeries& S);

/// Multi-Schur determinant: column k uses series[k].
FieldElem multi_schur_det(const FieldCtx& ctx, std::span<const std::size_t> J, std::span<const SymSeries> series);

/// S_{J; l}(X; T = t): J columns over S(X) followed by the column
/// t^{l+n}, ..., t^{l+1}, t^l.
FieldElem schur_tcolumn(const FieldCtx& ctx, std::span<const std::size_t> J, std::size_t l, const SymSeries& S,
                        FieldElem t);

/// S_{m^n}(X - T) as a polynomial in T of degree <= n, from the T-column
/// determinant with l = 0 expanded along its last column.
Poly schur_in_t(const FieldCtx& ctx, std::size_t m, std::size_t n, const SymSeries& S);

/// S_J(A - B - t) t^k == S_{J;k}(A - B; T = t).
bool lascoux_148_check(const FieldCtx& ctx, std::span<const std::size_t> J, std::size_t k, const Alphabet& A,
                       const Alphabet& B, FieldElem t);

enum class RemainderSign {
  Literal,    // (-1)^{d-k+1} on the g-term, as printed
  Validated,  // (-1)^{k(e-d+1)}, the convention matching the Euclid oracle
};

/// sign * S_{(e-d+k)^{k-1}}(B - A - T) S^e(T - A) + S_{k^{e-d+k-1}}(A - B - T) S^d(T - B).
/// Requires |A| = e > |B| = d >= k >= 1.
Poly remainder_via_schur(const FieldCtx& ctx, std::size_t k, const Alphabet& A, const Alphabet& B,
                         RemainderSign sign = RemainderSign::Validated);

int validated_remainder_sign(std::size_t e, std::size_t d, std::size_t k) noexcept;

struct RemainderCalibration {
  bool generic_prefix = false;  // r_1..r_k exist with degrees d-1..d-k
  bool proportional = false;    // formula value = ratio * r_k
  FieldElem ratio;
  FieldElem nu;                 // ratio / prod_{i<k} lc(r_i)^2
};

/// Compares remainder_via_schur against the Euclid remainder r_k of
/// (S^e(T - A), S^d(T - B)).
RemainderCalibration calibrate_remainder(const FieldCtx& ctx, std::size_t k, const Alphabet& A, const Alphabet& B,
                                         RemainderSign sign = RemainderSign::Validated);

}  // namespace euclab

#endif  // EUCLAB_SYMSCHUR_HPP
