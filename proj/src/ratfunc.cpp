#include "yang/ratfunc.hpp"

#include "yang/errors.hpp"

namespace yang {

RationalFunction RationalFunction::normalize(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RationalFunction();
  const Poly g = gcd(num, den);
  Poly n = exact_divide(num, g);
  Poly d = exact_divide(den, g);
  const Scalar lc = d.leading_coefficient();
  if (lc != 1) {
    const Scalar inv = Scalar(1) / lc;
    n *= inv;
    d *= inv;
  }
  return RationalFunction(std::move(n), std::move(d), 0);
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, 0);
}

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
  if (x.den_ == y.den_) return RationalFunction::normalize(x.num_ + y.num_, x.den_);
  return RationalFunction::normalize(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
  return x + (-y);
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
  return RationalFunction::normalize(x.num_ * y.num_, x.den_ * y.den_);
}

RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
  if (y.is_zero()) throw DivisionByZero();
  return RationalFunction::normalize(x.num_ * y.den_, x.den_ * y.num_);
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace yang
