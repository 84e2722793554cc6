#ifndef YANG_LAURENT_HPP
#define YANG_LAURENT_HPP

#include <map>

#include "yang/poly.hpp"
#include "yang/ratfunc.hpp"

namespace yang {

/// Expansion of a rational function at variable = infinity, exact for every
/// exponent >= min_exponent. The polynomial part is always stored in full.
class LaurentTail {
public:
  LaurentTail(Var variable, int min_exponent) : variable_(variable), min_exponent_(min_exponent) {}

  Var variable() const { return variable_; }
  int min_exponent() const { return min_exponent_; }
  const std::map<int, Poly>& coefficients() const { return coefficients_; }

  /// Coefficient of variable^exponent; InsufficientDepth below the truncation bound.
  Poly coefficient_at(int exponent) const;

  void set(int exponent, Poly coefficient);

private:
  Var variable_;
  int min_exponent_;
  std::map<int, Poly> coefficients_;
};

/// Expands `r` in powers of 1/variable down to variable^(-depth).
///
/// The denominator's leading coefficient in `variable` must be a nonzero
/// constant (NonMonicDenominator otherwise), which keeps every coefficient
/// polynomial.
LaurentTail expand_at_infinity(const RationalFunction& r, Var variable, int depth);

/// Same expansion for an unreduced quotient num/den.
LaurentTail expand_at_infinity(const Poly& num, const Poly& den, Var variable, int depth);

inline Poly coefficient_at(const LaurentTail& t, int exponent) { return t.coefficient_at(exponent); }

/// Coefficient of variable^-1 at infinity, i.e. the sum of all finite residues.
Poly sum_finite_residues(const RationalFunction& r, Var variable, int depth_hint = 1);
Poly sum_finite_residues(const Poly& num, const Poly& den, Var variable, int depth_hint = 1);

}  // namespace yang

#endif
