#include "euclab/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "euclab/error.hpp"

namespace euclab {

namespace {

void check_same(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw Error(Errc::DimensionMismatch, "MultiPoly variable counts differ");
}

std::size_t weight(const MultiPoly::Exponents& e) { return std::accumulate(e.begin(), e.end(), std::size_t{0}); }

}  // namespace

MultiPoly MultiPoly::constant(std::size_t nvars, FieldElem c) {
  MultiPoly p(nvars);
  if (c.value != 0) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index, FieldElem one) {
  if (index == 0 || index > nvars) throw Error(Errc::IndexOutOfRange, "variable index " + std::to_string(index));
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[index - 1] = 1;
  p.terms_.emplace(std::move(e), one);
  return p;
}

void MultiPoly::add_term(const FieldCtx& ctx, const Exponents& exps, FieldElem c) {
  if (exps.size() != nvars_) throw Error(Errc::DimensionMismatch, "exponent vector length");
  if (c.value == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (inserted) return;
  it->second = ctx.add(it->second, c);
  if (it->second.value == 0) terms_.erase(it);
}

FieldElem MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? FieldElem{} : it->second;
}

std::size_t MultiPoly::total_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, weight(e));
  return best;
}

std::size_t MultiPoly::partial_degree(std::size_t index) const {
  if (index == 0 || index > nvars_) throw Error(Errc::IndexOutOfRange, "variable index " + std::to_string(index));
  std::size_t best = 0;
  for (const auto& [e, c] : terms_) best = std::max<std::size_t>(best, e[index - 1]);
  return best;
}

MultiPoly add(const FieldCtx& ctx, const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(ctx, e, c);
  return r;
}

MultiPoly sub(const FieldCtx& ctx, const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(ctx, e, ctx.neg(c));
  return r;
}

MultiPoly mul(const FieldCtx& ctx, const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  MultiPoly r(a.nvars());
  MultiPoly::Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(ctx, e, ctx.mul(ca, cb));
    }
  }
  return r;
}

MultiPoly scale(const FieldCtx& ctx, const MultiPoly& a, FieldElem c) {
  MultiPoly r(a.nvars());
  for (const auto& [e, x] : a.terms()) r.add_term(ctx, e, ctx.mul(x, c));
  return r;
}

FieldElem evaluate(const FieldCtx& ctx, const MultiPoly& p, std::span<const FieldElem> point) {
  if (point.size() != p.nvars()) {
    throw Error(Errc::DimensionMismatch, "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                                             std::to_string(p.nvars()) + " variables");
  }
  FieldElem acc = ctx.zero();
  for (const auto& [e, c] : p.terms()) {
    FieldElem t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) t = ctx.mul(t, ctx.pow(point[i], e[i]));
    }
    acc = ctx.add(acc, t);
  }
  return acc;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const MultiPoly::Terms::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
    const std::size_t wx = weight(x->first), wy = weight(y->first);
    if (wx != wy) return wx > wy;
    return x->first > y->first;
  });
  std::string s;
  for (auto* t : order) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "s" + std::to_string(i + 1);
      if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
    }
    if (mono.empty()) s += std::to_string(t->second.value);
    else if (t->second.value == 1) s += mono;
    else s += std::to_string(t->second.value) + "*" + mono;
  }
  return s;
}

}  // namespace euclab
