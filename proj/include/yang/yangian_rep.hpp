#ifndef YANG_YANGIAN_REP_HPP
#define YANG_YANGIAN_REP_HPP

// The polynomial module M(w) = sum_v M_v of the sl2 Yangian, where M_v is
// the space of polynomials in h, t1..tw symmetric in t1..tv and in
// t(v+1)..tw separately.
//
//   x+_r : M_v -> M_{v-1}    x-_r : M_v -> M_{v+1}    h_r : M_v -> M_v
//
// x+_r vanishes on M_0 and x-_r vanishes on M_w.

#include <string>
#include <vector>

#include "yang/poly.hpp"

namespace yang::rep {

/// One homogeneous component (w, v, f). Components outside 0..w are allowed
/// only for the zero element, which is what x+ on M_0 and x- on M_w produce.
class ModuleElement {
public:
  /// Validates 0 <= v <= w and bisymmetry of f.
  ModuleElement(unsigned w, int v, Poly f);

  static ModuleElement zero(unsigned w, int v);

  unsigned w() const { return w_; }
  int v() const { return v_; }
  const Poly& poly() const { return f_; }
  bool is_zero() const { return f_.is_zero(); }
  bool in_range() const { return v_ >= 0 && v_ <= static_cast<int>(w_); }

  /// Elements of different components may be combined only when one is zero.
  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement x, const ModuleElement& y) { return x += y; }
  friend ModuleElement operator-(ModuleElement x, const ModuleElement& y) { return x -= y; }
  friend ModuleElement operator*(const Poly& c, const ModuleElement& e);

  std::string to_string() const;

private:
  struct Unchecked {};
  ModuleElement(unsigned w, int v, Poly f, Unchecked) : w_(w), v_(v), f_(std::move(f)) {}
  friend ModuleElement make_unchecked(unsigned w, int v, Poly f);

  unsigned w_;
  int v_;
  Poly f_;
};

/// sl2 weight w - 2v.
int weight(const ModuleElement& e);

/// x+_r: sum over k in [v, w] of f(t_[1,v-1] u {k}; t_[v,w] \ {k}) t_k^r
/// prod_{m in [v,w] \ {k}} (t_k - t_m + h)/(t_k - t_m).
/// Throws CancellationFailure if the sum is not a polynomial.
ModuleElement x_plus(unsigned r, const ModuleElement& e);

/// x-_r: sum over k in [1, v+1] of f(t_[1,v+1] \ {k}; {k} u t_[v+2,w]) t_k^r
/// prod_{m in [1,v+1] \ {k}} (t_m - t_k + h)/(t_m - t_k).
ModuleElement x_minus(unsigned r, const ModuleElement& e);

/// kappa_0..kappa_N with kappa_r the z^(-r-1) coefficient of (Pi(z) - 1)/h,
/// Pi(z) = prod_{m<=v} (z-t_m-h)/(z-t_m) prod_{m>v} (z-t_m+h)/(z-t_m).
struct CartanSeries {
  unsigned w;
  unsigned v;
  std::vector<Poly> kappa;
};

CartanSeries cartan_series(unsigned v, unsigned w, unsigned N);

/// Multiplication by kappa_r.
ModuleElement h_op(unsigned r, const ModuleElement& e);

/// Multiplication by (sum of residues of z^n B(z)/A(z)) / h with
/// A = prod (z - t_m), B = prod_{m<=v} (z-t_m-h) prod_{m>v} (z-t_m+h).
ModuleElement h_via_residue(unsigned n, const ModuleElement& e);

/// A(z) and B(z) for the component (v, w).
Poly residue_A(unsigned w);
Poly residue_B(unsigned v, unsigned w);

}  // namespace yang::rep

#endif
