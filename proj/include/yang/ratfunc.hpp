#ifndef YANG_RATFUNC_HPP
#define YANG_RATFUNC_HPP

#include <string>

#include "yang/poly.hpp"

namespace yang {

/// Reduced quotient num/den: gcd(num, den) = 1 and den has leading
/// coefficient 1 in the canonical order, so equal values compare equal.
class RationalFunction {
public:
  RationalFunction() : den_(1L) {}
  RationalFunction(const Poly& p) : num_(p), den_(1L) {}
  RationalFunction(long c) : RationalFunction(Poly(c)) {}

  /// Throws DivisionByZero when `den` is zero.
  static RationalFunction normalize(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_polynomial() const { return den_ == Poly(1L); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y);
  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  std::string to_string() const;

private:
  RationalFunction(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

}  // namespace yang

#endif
