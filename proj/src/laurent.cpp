#include "yang/laurent.hpp"

#include <algorithm>

#include "yang/errors.hpp"

namespace yang {

Poly LaurentTail::coefficient_at(int exponent) const {
  if (exponent < min_exponent_)
    throw InsufficientDepth("exponent " + std::to_string(exponent) +
                            " below truncation bound " + std::to_string(min_exponent_));
  auto it = coefficients_.find(exponent);
  return it == coefficients_.end() ? Poly() : it->second;
}

void LaurentTail::set(int exponent, Poly coefficient) {
  if (coefficient.is_zero())
    coefficients_.erase(exponent);
  else
    coefficients_[exponent] = std::move(coefficient);
}

LaurentTail expand_at_infinity(const RationalFunction& r, Var variable, int depth) {
  return expand_at_infinity(r.num(), r.den(), variable, depth);
}

LaurentTail expand_at_infinity(const Poly& num, const Poly& den_poly, Var variable, int depth) {
  if (den_poly.is_zero()) throw DivisionByZero();
  LaurentTail tail(variable, -depth);
  if (num.is_zero()) return tail;

  std::map<int, Poly> den;
  for (auto& [e, c] : den_poly.collect(variable)) den.emplace(static_cast<int>(e), std::move(c));
  const int d = den.rbegin()->first;
  const Poly& lead = den.rbegin()->second;
  if (!lead.is_constant())
    throw NonMonicDenominator("denominator leading coefficient in " + variable.name() +
                              " is not constant: " + lead.to_string());
  const Scalar inv = Scalar(1) / lead.constant_value();

  // Long division in decreasing powers of the variable.
  std::map<int, Poly> rem;
  for (auto& [e, c] : num.collect(variable)) rem.emplace(static_cast<int>(e), std::move(c));
  const int top = rem.rbegin()->first - d;
  for (int e = top; e >= -depth; --e) {
    auto it = rem.find(e + d);
    if (it == rem.end()) continue;
    Poly coeff = it->second * inv;
    rem.erase(it);
    for (const auto& [i, di] : den) {
      if (i == d) continue;
      Poly& slot = rem[e + i];
      slot -= coeff * di;
      if (slot.is_zero()) rem.erase(e + i);
    }
    tail.set(e, std::move(coeff));
  }
  return tail;
}

Poly sum_finite_residues(const RationalFunction& r, Var variable, int depth_hint) {
  return sum_finite_residues(r.num(), r.den(), variable, depth_hint);
}

Poly sum_finite_residues(const Poly& num, const Poly& den, Var variable, int depth_hint) {
  return expand_at_infinity(num, den, variable, std::max(depth_hint, 1)).coefficient_at(-1);
}

}  // namespace yang
