#ifndef YANG_FREE_ALGEBRA_HPP
#define YANG_FREE_ALGEBRA_HPP

// Elements of the free associative algebra on abstract generators x_{k,r}
// and x_{l,s}, used to compare presentations of the quadratic relations
// between two distinct vertices k and l.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yang/poly.hpp"

namespace yang::fa {

enum class Species { k, l };

struct Gen {
  Species species;
  unsigned index;

  friend auto operator<=>(const Gen&, const Gen&) = default;
  std::string to_string() const;
};

inline Gen xk(unsigned r) { return {Species::k, r}; }
inline Gen xl(unsigned s) { return {Species::l, s}; }

using Word = std::vector<Gen>;
using Pair = std::array<Gen, 2>;

/// Q[h]-linear combination of length-2 words; zero coefficients are dropped.
class FreeQuadratic {
public:
  void add(const Gen& a, const Gen& b, const Poly& coefficient);
  const std::map<Pair, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned hbar_degree() const;
  unsigned max_index() const;

  FreeQuadratic& operator+=(const FreeQuadratic& o);
  friend FreeQuadratic operator*(const Poly& c, const FreeQuadratic& x);
  friend bool operator==(const FreeQuadratic&, const FreeQuadratic&) = default;

  std::string to_string() const;

private:
  std::map<Pair, Poly> terms_;
};

/// Commutator ab - ba as a FreeQuadratic.
FreeQuadratic commutator(const Gen& a, const Gen& b);

/// Q-linear combination of words of arbitrary length.
class FreeWordElement {
public:
  void add(const Word& word, const Scalar& coefficient);
  const std::map<Word, Scalar>& terms() const { return terms_; }
  friend bool operator==(const FreeWordElement&, const FreeWordElement&) = default;
  std::string to_string() const;

private:
  std::map<Word, Scalar> terms_;
};

/// [a_1, [a_2, ..., [a_m, inner]...]] fully expanded, one signed word per
/// term and without collecting (2^m entries).
std::vector<std::pair<Word, int>> expand_nested_commutator(const Word& outer, const Gen& inner);

/// Sum over S_m of [x_{k,r_w(1)}, [..., [x_{k,r_w(m)}, x_{l,s}]...]] with
/// m = 1 - a_kl; ArityMismatch unless r has exactly m entries.
FreeWordElement build_serre_element(int a_kl, const std::vector<unsigned>& r, unsigned s);

/// Reinterprets a length-2 FreeWordElement as a FreeQuadratic.
FreeQuadratic to_quadratic(const FreeWordElement& e);

enum class Sign { plus = 1, minus = -1 };

/// eta_n(z, w) = prod_{j=1}^n (z - w + (1 + n - 2j) h/2) with n = -a_kl,
/// as a polynomial in z, w, h.
Poly eta_polynomial(unsigned n, const Poly& z, const Poly& w);

/// Coefficients of z^{-r-1} w^{-s-1} in
///   eta_n(z -+ h/2, w) x_k(z) x_l(w) - eta_n(z, w -+ h/2) x_l(w) x_k(z),
/// with x(z) = sum_r x_r z^{-r-1}. Only pairs whose generator indices all stay
/// within max_index are produced, in (r, s) order.
std::vector<FreeQuadratic> eta_relation_family(int a_kl, Sign sign, unsigned max_index);

/// 2[x_{k,r+1}, x_{l,s}] - 2[x_{k,r}, x_{l,s+1}] -+ h a_kl (x_{k,r} x_{l,s} + x_{l,s} x_{k,r})
/// for r + 1, s + 1 <= max_index.
std::vector<FreeQuadratic> quadratic_relation_family(int a_kl, Sign sign, unsigned max_index);

/// [x_{k,r}, x_{l,s}] for r, s <= max_index.
std::vector<FreeQuadratic> commutator_family(unsigned max_index);

/// Concatenation helper for families.
std::vector<FreeQuadratic> join(std::vector<FreeQuadratic> a, const std::vector<FreeQuadratic>& b);

enum class SpanVerdict { equal, first_in_second, second_in_first, incomparable };

std::string to_string(SpanVerdict v);

struct SpanComparison {
  SpanVerdict verdict;
  std::size_t rank_first;
  std::size_t rank_second;
  /// An element of one span outside the other; empty when the spans are equal.
  std::optional<FreeQuadratic> witness;
  /// 1 or 2: which family the witness comes from (0 when equal).
  int witness_family = 0;
};

/// Compares the Q-spans of { h^j rel : 0 <= j <= hbar_pad } for both
/// families, capped at h-degree hbar_pad + min(max h-degree of each family).
SpanComparison relation_span_compare(const std::vector<FreeQuadratic>& first,
                                     const std::vector<FreeQuadratic>& second, unsigned hbar_pad);

}  // namespace yang::fa

#endif
