#ifndef YANG_KAC_MOODY_HPP
#define YANG_KAC_MOODY_HPP

// Graphs without edge loops, their symmetric generalized Cartan matrices and
// the root/weight lattice bookkeeping used by the quiver-variety model.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "yang/poly.hpp"

namespace yang::km {

using IntMatrix = std::vector<std::vector<long>>;

class CartanData;

/// Finite graph with no edge loops; n(k,l) counts edges joining k and l.
class Graph {
public:
  explicit Graph(std::vector<std::string> vertices);
  Graph(std::vector<std::string> vertices, IntMatrix multiplicity);

  /// Adjacency-list text: one `k l [multiplicity]` per line. A line holding a
  /// single name declares an isolated vertex; `#` starts a comment.
  static Graph parse_edge_list(std::string_view text);
  static Graph from_cartan(const CartanData& c);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  long n(std::size_t k, std::size_t l) const { return multiplicity_[k][l]; }
  void add_edge(std::size_t k, std::size_t l, long multiplicity = 1);

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::string> vertices_;
  IntMatrix multiplicity_;
};

/// Symmetric generalized Cartan matrix: a_kk = 2, a_kl = a_lk <= 0.
class CartanData {
public:
  explicit CartanData(IntMatrix matrix);

  std::size_t size() const { return matrix_.size(); }
  long operator()(std::size_t k, std::size_t l) const { return matrix_[k][l]; }
  const IntMatrix& matrix() const { return matrix_; }

  std::string to_rows() const;
  std::string to_json() const;

  friend bool operator==(const CartanData&, const CartanData&) = default;

private:
  IntMatrix matrix_;
};

/// a_kl = 2 delta_kl - n_kl.
CartanData cartan_matrix(const Graph& g);

enum class LatticeKind { root, weight };

/// Dimension vector v (root lattice, sum v_k alpha_k) or framing vector w
/// (weight lattice, sum w_k omega_k). Coordinates are nonnegative.
struct DimWeightVector {
  DimWeightVector(LatticeKind kind, std::vector<long> coords);

  static DimWeightVector simple_root(std::size_t n, std::size_t k);
  static DimWeightVector fundamental_weight(std::size_t n, std::size_t k);

  LatticeKind kind;
  std::vector<long> coords;
};

/// Bilinear form with (alpha_k|alpha_l) = a_kl and (omega_k|alpha_l) = delta_kl.
/// Two weight vectors raise MixedBasisUnsupported.
long pairing(const DimWeightVector& x, const DimWeightVector& y, const CartanData& c);

/// Rank of the tautological complex F_k(v,w): (w - v | alpha_k).
long rank_F(std::size_t k, const DimWeightVector& v, const DimWeightVector& w,
            const CartanData& c);

/// Laurent polynomial in q with rational coefficients.
class QLaurent {
public:
  QLaurent() = default;
  static QLaurent monomial(int exponent, const Scalar& c = 1);

  const std::map<int, Scalar>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  /// Value at q = 1.
  Scalar at_one() const;

  QLaurent operator-() const;
  friend QLaurent operator+(const QLaurent& x, const QLaurent& y);
  friend QLaurent operator-(const QLaurent& x, const QLaurent& y) { return x + (-y); }
  friend QLaurent operator*(const QLaurent& x, const QLaurent& y);
  friend bool operator==(const QLaurent&, const QLaurent&) = default;

  /// Descending powers, e.g. `q^2 + 1 + q^-2`.
  std::string to_string() const;

private:
  void add(int exponent, const Scalar& c);
  std::map<int, Scalar> coefficients_;
};

/// [n] = (q^n - q^-n)/(q - q^-1).
QLaurent q_integer(int n);

/// A pair of linear maps w -> w_+, w -> w_- on coordinate vectors with
/// w_+ + w_- = w. The default is w_+ = identity, w_- = 0.
struct WConvention {
  static WConvention plus_identity(std::size_t n);
  WConvention(IntMatrix plus, IntMatrix minus);

  IntMatrix plus;
  IntMatrix minus;
};

enum class Side { plus, minus };

/// (-1)^(alpha_k | v_side) for the given convention.
int sign_factor(std::size_t k, const DimWeightVector& v, Side side, const CartanData& c,
                const WConvention& convention);

}  // namespace yang::km

#endif
