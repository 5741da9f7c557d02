#ifndef EUCLAB_EUCLID_HPP
#define EUCLAB_EUCLID_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "euclab/field.hpp"
#include "euclab/poly.hpp"

namespace euclab {

/// Full record of one Euclidean run on (g, f):
///   g = f q_1 + r_1, f = r_1 q_2 + r_2, ..., r_{h-1} = r_h q_{h+1}.
/// Remainders are the plain (non-normalized) division remainders; the final
/// exact division is counted. Monic normalization of the gcd is not counted.
struct EuclidTrace {
  std::vector<Poly> quotients;             // q_1 .. q_{h+1}
  std::vector<Poly> remainders;            // r_1 .. r_h (final zero excluded)
  std::vector<std::size_t> degree_sequence;
  Poly gcd;                                // monic
  std::size_t gcd_degree = 0;
  std::uint64_t t_polydiv = 0;             // polynomial divisions
  std::uint64_t t_fielddiv = 0;            // field divisions
  std::uint64_t t_addmul = 0;              // additions/multiplications

  std::size_t length() const noexcept { return remainders.size(); }
};

/// Requires g, f monic with deg g > deg f >= 1; throws Error{DegreeOrder}
/// when deg f >= deg g and Error{InvalidArgument} for non-monic input.
EuclidTrace euclid_trace(const FieldCtx& ctx, const Poly& g, const Poly& f);

/// True iff the remainder sequence has length d = deg f with degrees
/// d-1, d-2, ..., 0.
bool is_generic(const FieldCtx& ctx, const Poly& g, const Poly& f);
bool is_generic(const EuclidTrace& trace, std::size_t d) noexcept;

/// Counters-only summary of a Euclidean run.
struct EuclidStats {
  std::size_t length = 0;  // h
  std::size_t gcd_degree = 0;
  std::uint64_t t_polydiv = 0;
  std::uint64_t t_fielddiv = 0;
  std::uint64_t t_addmul = 0;
  bool generic = false;

  friend bool operator==(const EuclidStats&, const EuclidStats&) = default;
};

/// Reusable scratch buffers for euclid_stats; one per thread.
class EuclidWorkspace {
 public:
  EuclidWorkspace() = default;

 private:
  friend EuclidStats euclid_stats(const FieldCtx&, std::span<const FieldElem>, std::span<const FieldElem>,
                                  EuclidWorkspace&);
  std::vector<FieldElem> a_, b_;
};

/// Same counters as euclid_trace without materializing quotients or
/// remainders. g and f are ascending coefficient arrays of monic polynomials
/// with deg g > deg f >= 1 (unchecked: this is the census inner loop).
EuclidStats euclid_stats(const FieldCtx& ctx, std::span<const FieldElem> g, std::span<const FieldElem> f,
                         EuclidWorkspace& ws);

EuclidStats summarize(const EuclidTrace& trace, std::size_t d) noexcept;

/// Resultant through the remainder-sequence recursion
///   res(A,B) = (-1)^{mn} lc(B)^{m - deg R} res(B, R),  res(A, c) = c^m.
/// Throws Error{ZeroInput} if either input is zero.
FieldElem resultant_euclid(const FieldCtx& ctx, const Poly& g, const Poly& f);

/// Determinant of the (m+n)x(m+n) Sylvester matrix by Gaussian elimination.
/// Throws Error{ZeroInput} if either input is zero.
FieldElem resultant_sylvester(const FieldCtx& ctx, const Poly& g, const Poly& f);

}  // namespace euclab

#endif  // EUCLAB_EUCLID_HPP
