#ifndef YANG_VERIFIER_HPP
#define YANG_VERIFIER_HPP

// Checks the sl2 Yangian relations on every basis element of every
// component of M(w) up to a degree bound, for all index pairs up to a bound.
//
//   1.1  [h_r, h_s] = 0,  h_0 = (w - 2v) id,  [h_0, x±_s] = ±2 x±_s
//   1.2  2[h_{r+1}, x±_s] - 2[h_r, x±_{s+1}] = ±2h (h_r x±_s + x±_s h_r)
//   1.3  [x+_r, x-_s] = h_{r+s}   (with both realizations of h)
//   1.4  2[x±_{r+1}, x±_s] - 2[x±_r, x±_{s+1}] = ±2h (x±_r x±_s + x±_s x±_r)

#include <optional>
#include <string>
#include <vector>

#include "yang/poly.hpp"

namespace yang::verify {

struct Failure {
  int v;
  std::string basis;
  unsigned r;
  unsigned s;
  /// Which identity of the relation failed, e.g. "x+" or "residue".
  std::string kind;
  std::string residual;
};

struct RelationReport {
  std::string relation;
  unsigned w = 0;
  unsigned D = 0;
  unsigned R = 0;
  std::size_t cases_checked = 0;
  /// Cases whose operator application raised CancellationFailure.
  std::size_t cancellation_failures = 0;
  std::vector<Failure> failures;
  long elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  std::string to_json() const;
};

/// Worker count: YANG_THREADS when set (and positive), else the hardware count.
unsigned default_threads();

RelationReport verify_1_1(unsigned w, unsigned D, unsigned R, unsigned threads = 0);
RelationReport verify_1_2(unsigned w, unsigned D, unsigned R, unsigned threads = 0);
RelationReport verify_1_3(unsigned w, unsigned D, unsigned R, unsigned threads = 0);
RelationReport verify_1_4(unsigned w, unsigned D, unsigned R, unsigned threads = 0);

/// Dispatch by id ("1.1" .. "1.4"); throws yang::Error for other ids.
RelationReport verify_relation(const std::string& id, unsigned w, unsigned D, unsigned R,
                               unsigned threads = 0);

/// h_n computed from the series and from the residue sum agree on every
/// basis element of degree <= D, for n <= N.
RelationReport verify_cartan_agreement(unsigned w, unsigned D, unsigned N, unsigned threads = 0);

/// 2(X - 1)(z - c) = h a (X + 1) with X = (1 - (c - a h/2)/z)/(1 - (c + a h/2)/z),
/// for symbolic a, or for the given value of a.
bool verify_X_identity(std::optional<Scalar> a = std::nullopt);

}  // namespace yang::verify

#endif
