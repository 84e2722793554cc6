#include <doctest.h>

#include "yang/errors.hpp"
#include "yang/laurent.hpp"
#include "yang/ratfunc.hpp"
#include "yang/yangian_rep.hpp"

using namespace yang;

namespace {
Poly t(unsigned k) { return Poly(Var::t(k)); }
Poly h() { return Poly(Var::hbar()); }
Poly z() { return Poly(Var::z()); }
}  // namespace

TEST_CASE("normalization cancels common factors and makes the denominator monic") {
  const auto r = RationalFunction::normalize(Poly(2L) * (t(1) - t(2)) * (t(1) + h()), Poly(4L) * (t(1) - t(2)));
  CHECK(r.is_polynomial());
  CHECK(r.num() == Poly(rational(1, 2)) * (t(1) + h()));
  const auto s = RationalFunction::normalize(Poly(1L), Poly(3L) * t(1));
  CHECK(s.den() == t(1));
  CHECK(s.num() == Poly(rational(1, 3)));
  CHECK_THROWS_AS(RationalFunction::normalize(Poly(1L), Poly()), DivisionByZero);
}

TEST_CASE("rational function field operations") {
  const RationalFunction a = RationalFunction::normalize(Poly(1L), t(1) - t(2));
  const RationalFunction b = RationalFunction::normalize(Poly(1L), t(2) - t(1));
  CHECK((a + b).is_zero());
  CHECK(a * (t(1) - t(2)) == RationalFunction(1L));
  CHECK((a / a) == RationalFunction(1L));
  CHECK_THROWS_AS(a / RationalFunction(), DivisionByZero);
  CHECK((a - a).is_zero());
}

TEST_CASE("expansion at infinity of 1/(z - c)") {
  const Poly c(Var::c());
  const auto tail = expand_at_infinity(Poly(1L), z() - c, Var::z(), 5);
  CHECK(tail.coefficient_at(0).is_zero());
  CHECK(tail.coefficient_at(-1) == Poly(1L));
  CHECK(tail.coefficient_at(-4) == c.pow(3));
  CHECK_THROWS_AS(tail.coefficient_at(-6), InsufficientDepth);
}

TEST_CASE("expansion keeps the polynomial part and checks against the denominator") {
  const Poly num = z().pow(4) + t(1) * z() + h();
  const Poly den = z() * z() - t(1) * z() + t(2);
  const int depth = 6;
  const auto tail = expand_at_infinity(num, den, Var::z(), depth);
  // tail * den agrees with num in every exponent >= 2 - depth.
  CHECK(tail.coefficient_at(2) == Poly(1L));
  CHECK(tail.coefficient_at(1) == t(1));
  for (int e = 2 - depth; e <= 4; ++e) {
    Poly coeff;
    for (const auto& [te, tc] : tail.coefficients())
      for (const auto& [de, dc] : den.collect(Var::z()))
        if (te + static_cast<int>(de) == e) coeff += tc * dc;
    const auto np = num.collect(Var::z());
    const Poly expect = e >= 0 && np.count(static_cast<unsigned>(e)) ? np.at(static_cast<unsigned>(e)) : Poly();
    CHECK(coeff == expect);
  }
}

TEST_CASE("non-monic denominators are rejected") {
  CHECK_THROWS_AS(expand_at_infinity(Poly(1L), t(1) * z() - Poly(1L), Var::z(), 3), NonMonicDenominator);
  CHECK_NOTHROW(expand_at_infinity(Poly(1L), Poly(2L) * z() - Poly(1L), Var::z(), 3));
}

TEST_CASE("sum of finite residues matches the substitution formula") {
  for (unsigned w = 1; w <= 4; ++w)
    for (unsigned v = 0; v <= w; ++v) {
      const Poly A = rep::residue_A(w), B = rep::residue_B(v, w);
      for (unsigned n = 0; n <= 4; ++n) {
        const Poly res = sum_finite_residues(z().pow(n) * B, A, Var::z());
        // sum_k t_k^n B(t_k) / prod_{m != k} (t_k - t_m), over the Vandermonde denominator
        Poly vandermonde(1L);
        for (unsigned i = 1; i <= w; ++i)
          for (unsigned j = i + 1; j <= w; ++j) vandermonde *= t(i) - t(j);
        Poly total;
        for (unsigned k = 1; k <= w; ++k) {
          Poly dA(1L);
          for (unsigned m = 1; m <= w; ++m)
            if (m != k) dA *= t(k) - t(m);
          total += t(k).pow(n) * B.substitute(Var::z(), t(k)) * exact_divide(vandermonde, dA);
        }
        CHECK(exact_divide(total, vandermonde) == res);
      }
    }
}
