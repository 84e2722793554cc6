#ifndef YANG_SYM_POLY_HPP
#define YANG_SYM_POLY_HPP

// Polynomials in h, t1..tw invariant under S_v x S_{w-v}, where the first
// block permutes t1..tv and the second block permutes t(v+1)..tw.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "yang/poly.hpp"

namespace yang::sym {

using Partition = std::vector<unsigned>;  // weakly decreasing, positive parts

/// A bisymmetric polynomial together with its (v, w). Construction checks
/// membership and throws yang::Error when it fails.
class BiSymPoly {
public:
  BiSymPoly(unsigned v, unsigned w, Poly f);

  unsigned v() const { return v_; }
  unsigned w() const { return w_; }
  const Poly& poly() const { return f_; }

private:
  unsigned v_;
  unsigned w_;
  Poly f_;
};

struct BasisIndex {
  unsigned hbar_power = 0;
  Partition lambda;
  Partition mu;

  unsigned degree() const;
  /// `{"v":..,"w":..,"hbar_power":..,"lambda":[..],"mu":[..]}`
  std::string to_json(unsigned v, unsigned w) const;
};

/// Throws UnknownVariable if f uses anything besides h, t1..tw.
bool is_bisymmetric(const Poly& f, unsigned v, unsigned w);

/// e_i of block 1 (t1..tv) or block 2 (t(v+1)..tw).
BiSymPoly block_elementary(unsigned i, int block, unsigned v, unsigned w);

/// Monomial symmetric polynomial m_lambda in the given variables (zero when
/// lambda has more parts than there are variables).
Poly monomial_symmetric(const Partition& lambda, const std::vector<Var>& vars);

/// Partitions of n with at most max_parts parts, in reverse lexicographic order.
std::vector<Partition> partitions(unsigned n, unsigned max_parts);

/// h^a m_lambda(block 1) m_mu(block 2) for every index of total degree <= D,
/// ordered by degree, then h-power descending, then lambda, then mu.
std::vector<std::pair<BasisIndex, BiSymPoly>> basis_up_to_degree(unsigned v, unsigned w, unsigned D);

/// Coefficients of q^0..q^D in 1/(1-q) * prod_{i<=v} 1/(1-q^i) * prod_{j<=w-v} 1/(1-q^j).
std::vector<std::uint64_t> hilbert_coefficients(unsigned v, unsigned w, unsigned D);

/// Average of f over the S_v x S_{w-v} orbit.
BiSymPoly symmetrize_blocks(const Poly& f, unsigned v, unsigned w);

/// Block-1 and block-2 variables for (v, w).
std::vector<Var> block_vars(int block, unsigned v, unsigned w);

}  // namespace yang::sym

#endif
