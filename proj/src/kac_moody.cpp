#include "yang/kac_moody.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "yang/errors.hpp"

namespace yang::km {

namespace {

IntMatrix square(std::size_t n, long fill = 0) { return IntMatrix(n, std::vector<long>(n, fill)); }

void require_square(const IntMatrix& m, std::size_t n, const char* what) {
  if (m.size() != n || std::any_of(m.begin(), m.end(), [n](const auto& row) { return row.size() != n; }))
    throw Error(std::string(what) + ": matrix is not " + std::to_string(n) + "x" + std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::vector<std::string> vertices)
    : vertices_(std::move(vertices)), multiplicity_(square(vertices_.size())) {}

Graph::Graph(std::vector<std::string> vertices, IntMatrix multiplicity)
    : vertices_(std::move(vertices)), multiplicity_(std::move(multiplicity)) {
  const std::size_t n = vertices_.size();
  require_square(multiplicity_, n, "graph");
  for (std::size_t k = 0; k < n; ++k) {
    if (multiplicity_[k][k] != 0) throw Error("graph has an edge loop at " + vertices_[k]);
    for (std::size_t l = 0; l < n; ++l)
      if (multiplicity_[k][l] < 0 || multiplicity_[k][l] != multiplicity_[l][k])
        throw Error("edge multiplicities must be symmetric and nonnegative");
  }
}

void Graph::add_edge(std::size_t k, std::size_t l, long multiplicity) {
  if (k == l) throw Error("edge loop at " + vertices_.at(k));
  if (multiplicity < 0) throw Error("negative edge multiplicity");
  multiplicity_.at(k).at(l) += multiplicity;
  multiplicity_.at(l).at(k) += multiplicity;
}

Graph Graph::parse_edge_list(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::tuple<std::size_t, std::size_t, long>> edges;
  auto index_of = [&names](const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
    names.push_back(name);
    return names.size() - 1;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string s; fields >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    if (tok.size() > 3) throw ParseError("too many fields in edge line " + std::to_string(line_no), 0);
    const std::size_t k = index_of(tok[0]);
    if (tok.size() == 1) continue;
    const std::size_t l = index_of(tok[1]);
    long mult = 1;
    if (tok.size() == 3) {
      try {
        std::size_t used = 0;
        mult = std::stol(tok[2], &used);
        if (used != tok[2].size()) throw std::invalid_argument(tok[2]);
      } catch (const std::exception&) {
        throw ParseError("bad multiplicity '" + tok[2] + "' on line " + std::to_string(line_no), 0);
      }
    }
    if (k == l) throw Error("edge loop at " + tok[0] + " on line " + std::to_string(line_no));
    if (mult < 0) throw Error("negative multiplicity on line " + std::to_string(line_no));
    edges.emplace_back(k, l, mult);
  }
  Graph g(names);
  for (auto [k, l, m] : edges) g.add_edge(k, l, m);
  return g;
}

Graph Graph::from_cartan(const CartanData& c) {
  const std::size_t n = c.size();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(std::to_string(k + 1));
  IntMatrix m = square(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      if (k != l) m[k][l] = -c(k, l);
  return Graph(std::move(names), std::move(m));
}

// ---------------------------------------------------------------------------
// CartanData

CartanData::CartanData(IntMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.size();
  require_square(matrix_, n, "cartan");
  for (std::size_t k = 0; k < n; ++k) {
    if (matrix_[k][k] != 2) throw Error("cartan matrix diagonal must be 2");
    for (std::size_t l = 0; l < n; ++l)
      if (k != l && (matrix_[k][l] > 0 || matrix_[k][l] != matrix_[l][k]))
        throw Error("cartan matrix must be symmetric with nonpositive off-diagonal");
  }
}

std::string CartanData::to_rows() const {
  std::string s;
  for (const auto& row : matrix_) {
    for (std::size_t l = 0; l < row.size(); ++l) {
      if (l > 0) s += ' ';
      s += std::to_string(row[l]);
    }
    s += '\n';
  }
  return s;
}

std::string CartanData::to_json() const {
  std::string s = "[";
  for (std::size_t k = 0; k < matrix_.size(); ++k) {
    if (k > 0) s += ',';
    s += '[';
    for (std::size_t l = 0; l < matrix_[k].size(); ++l) {
      if (l > 0) s += ',';
      s += std::to_string(matrix_[k][l]);
    }
    s += ']';
  }
  return s + "]";
}

CartanData cartan_matrix(const Graph& g) {
  const std::size_t n = g.size();
  IntMatrix a = square(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) a[k][l] = (k == l ? 2 : 0) - g.n(k, l);
  return CartanData(std::move(a));
}

// ---------------------------------------------------------------------------
// Lattices

DimWeightVector::DimWeightVector(LatticeKind kind_, std::vector<long> coords_)
    : kind(kind_), coords(std::move(coords_)) {
  if (std::any_of(coords.begin(), coords.end(), [](long x) { return x < 0; }))
    throw Error("dimension and framing vectors must be nonnegative");
}

DimWeightVector DimWeightVector::simple_root(std::size_t n, std::size_t k) {
  std::vector<long> c(n, 0);
  c.at(k) = 1;
  return {LatticeKind::root, std::move(c)};
}

DimWeightVector DimWeightVector::fundamental_weight(std::size_t n, std::size_t k) {
  std::vector<long> c(n, 0);
  c.at(k) = 1;
  return {LatticeKind::weight, std::move(c)};
}

long pairing(const DimWeightVector& x, const DimWeightVector& y, const CartanData& c) {
  const std::size_t n = c.size();
  if (x.coords.size() != n || y.coords.size() != n)
    throw Error("pairing: vectors are not over the cartan index set");
  if (x.kind == LatticeKind::weight && y.kind == LatticeKind::weight) throw MixedBasisUnsupported();
  long sum = 0;
  if (x.kind == LatticeKind::root && y.kind == LatticeKind::root) {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) sum += x.coords[k] * c(k, l) * y.coords[l];
  } else {
    for (std::size_t k = 0; k < n; ++k) sum += x.coords[k] * y.coords[k];
  }
  return sum;
}

long rank_F(std::size_t k, const DimWeightVector& v, const DimWeightVector& w, const CartanData& c) {
  if (v.kind != LatticeKind::root || w.kind != LatticeKind::weight)
    throw Error("rank_F expects a dimension vector and a framing vector");
  const std::size_t n = c.size();
  if (k >= n || v.coords.size() != n || w.coords.size() != n) throw IndexOutOfRange("rank_F: vertex out of range");
  long r = w.coords[k];
  for (std::size_t l = 0; l < n; ++l) r -= c(k, l) * v.coords[l];
  return r;
}

// ---------------------------------------------------------------------------
// QLaurent

QLaurent QLaurent::monomial(int exponent, const Scalar& c) {
  QLaurent x;
  x.add(exponent, c);
  return x;
}

void QLaurent::add(int exponent, const Scalar& c) {
  if (c == 0) return;
  Scalar& slot = coefficients_[exponent];
  slot += c;
  if (slot == 0) coefficients_.erase(exponent);
}

Scalar QLaurent::at_one() const {
  Scalar s = 0;
  for (const auto& [e, c] : coefficients_) s += c;
  return s;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& [e, c] : r.coefficients_) c = -c;
  return r;
}

QLaurent operator+(const QLaurent& x, const QLaurent& y) {
  QLaurent r = x;
  for (const auto& [e, c] : y.coefficients_) r.add(e, c);
  return r;
}

QLaurent operator*(const QLaurent& x, const QLaurent& y) {
  QLaurent r;
  for (const auto& [ex, cx] : x.coefficients_)
    for (const auto& [ey, cy] : y.coefficients_) r.add(ex + ey, cx * cy);
  return r;
}

std::string QLaurent::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    const Scalar mag = abs(c);
    std::string power = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
    if (power.empty())
      s += yang::to_string(mag);
    else if (mag == 1)
      s += power;
    else
      s += yang::to_string(mag) + "*" + power;
  }
  return s;
}

QLaurent q_integer(int n) {
  if (n < 0) return -q_integer(-n);
  QLaurent r;
  for (int e = n - 1; e >= 1 - n; e -= 2) r = r + QLaurent::monomial(e);
  return r;
}

// ---------------------------------------------------------------------------
// w_+ / w_- convention

WConvention WConvention::plus_identity(std::size_t n) {
  IntMatrix id = square(n);
  for (std::size_t k = 0; k < n; ++k) id[k][k] = 1;
  return WConvention(std::move(id), square(n));
}

WConvention::WConvention(IntMatrix plus_, IntMatrix minus_)
    : plus(std::move(plus_)), minus(std::move(minus_)) {
  const std::size_t n = plus.size();
  require_square(plus, n, "w+");
  require_square(minus, n, "w-");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      if (plus[k][l] + minus[k][l] != (k == l ? 1 : 0))
        throw Error("w+ + w- must be the identity");
}

int sign_factor(std::size_t k, const DimWeightVector& v, Side side, const CartanData& c,
                const WConvention& convention) {
  const std::size_t n = c.size();
  if (k >= n || v.coords.size() != n || convention.plus.size() != n)
    throw IndexOutOfRange("sign_factor: vertex or dimension mismatch");
  const IntMatrix& m = side == Side::plus ? convention.plus : convention.minus;
  long exponent = 0;
  for (std::size_t l = 0; l < n; ++l) {
    long image = 0;
    for (std::size_t j = 0; j < n; ++j) image += m[l][j] * v.coords[j];
    exponent += c(k, l) * image;
  }
  return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace yang::km
