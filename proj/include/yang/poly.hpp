#ifndef YANG_POLY_HPP
#define YANG_POLY_HPP

// Sparse multivariate polynomials over Q.
//
// Variables carry a significance rank: z is the most significant, then
// t1, t2, ..., then the auxiliary symbols c, a, q, w, and h (hbar) is the
// least significant.  Terms are kept in graded order (total degree first,
// ties broken lexicographically by significance), which is also the
// printing order.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace yang {

using Scalar = mpq_class;

std::string to_string(const Scalar& s);

/// num/den in canonical form.
inline Scalar rational(long num, long den) {
  Scalar s{mpz_class(num), mpz_class(den)};
  s.canonicalize();
  return s;
}

class Var {
public:
  static Var z() { return Var(0); }
  static Var t(unsigned k);
  static Var hbar() { return Var(kHbar); }
  static Var c() { return Var(kAux + 1); }
  static Var a() { return Var(kAux + 2); }
  static Var q() { return Var(kAux + 3); }
  static Var w() { return Var(kAux + 4); }

  /// Looks a name up (`h`, `z`, `tK`, `c`, `a`, `q`, `w`).
  static std::optional<Var> from_name(const std::string& name);

  std::string name() const;
  bool is_t() const { return rank_ >= 1 && rank_ < kAux; }
  unsigned t_index() const { return rank_; }
  std::uint32_t rank() const { return rank_; }

  friend bool operator==(Var x, Var y) { return x.rank_ == y.rank_; }
  friend auto operator<=>(Var x, Var y) { return x.rank_ <=> y.rank_; }

private:
  static constexpr std::uint32_t kAux = 1'000'000;
  static constexpr std::uint32_t kHbar = 2'000'000;
  explicit Var(std::uint32_t rank) : rank_(rank) {}
  std::uint32_t rank_;
};

/// Exponent vector stored sparsely as (variable, exponent > 0), sorted by rank.
class Monomial {
public:
  using Entry = std::pair<Var, unsigned>;

  Monomial() = default;
  Monomial(std::initializer_list<Entry> entries);
  static Monomial of(Var v, unsigned e = 1);

  unsigned degree() const { return degree_; }
  unsigned exponent(Var v) const;
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }

  Monomial operator*(const Monomial& o) const;
  /// Quotient when `o` divides this monomial.
  std::optional<Monomial> divide(const Monomial& o) const;
  Monomial without(Var v) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  void push(Var v, unsigned e);
  std::vector<Entry> entries_;
  unsigned degree_ = 0;
};

/// Strict "greater than" in the canonical graded order.
bool graded_greater(const Monomial& x, const Monomial& y);

struct GradedDescending {
  bool operator()(const Monomial& x, const Monomial& y) const {
    return graded_greater(x, y);
  }
};

class Poly {
public:
  using Terms = std::map<Monomial, Scalar, GradedDescending>;

  Poly() = default;
  Poly(long c);
  Poly(const Scalar& c);
  Poly(Var v);
  static Poly term(const Scalar& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; only meaningful when is_constant().
  Scalar constant_value() const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Leading term in the canonical order; requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;

  unsigned total_degree() const;
  unsigned degree_in(Var v) const;
  std::vector<Var> variables() const;
  bool uses(Var v) const { return degree_in(v) > 0; }

  /// Splits by powers of `v`; coefficients do not contain `v`.
  std::map<unsigned, Poly> collect(Var v) const;
  static Poly from_collected(Var v, const std::map<unsigned, Poly>& parts);

  Poly rename(const std::function<Var(Var)>& f) const;
  Poly substitute(Var v, const Poly& value) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  Poly operator-() const;
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);
  friend Poly operator*(Poly x, const Scalar& s) { return x *= s; }
  friend Poly operator*(const Scalar& s, Poly x) { return x *= s; }
  friend bool operator==(const Poly& x, const Poly& y) {
    return x.terms_ == y.terms_;
  }

  Poly pow(unsigned e) const;

  /// Canonical text, e.g. `t1^2*t2 - 1/2*h + 3`.
  std::string to_string() const;

  /// Adds `c * m` in place.
  void add_term(const Scalar& c, const Monomial& m);

private:
  Terms terms_;
};

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};

/// Multivariate division in the canonical order. The remainder is zero iff
/// `b` divides `a` exactly.
DivisionResult divide_with_remainder(const Poly& a, const Poly& b);

/// Returns q with a = q*b or throws NotDivisible / DivisionByZero.
Poly exact_divide(const Poly& a, const Poly& b);

/// Monic greatest common divisor (0 only when both inputs are 0).
Poly gcd(const Poly& a, const Poly& b);

/// Scales so the leading coefficient is 1.
Poly make_monic(const Poly& p);

}  // namespace yang

#endif
