#include "yang/free_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "yang/errors.hpp"

namespace yang::fa {

std::string Gen::to_string() const {
  return std::string(species == Species::k ? "xk" : "xl") + std::to_string(index);
}

namespace {

std::string word_string(const Word& w) {
  std::string s;
  for (const auto& g : w) s += (s.empty() ? "" : "*") + g.to_string();
  return s;
}

Poly hbar() { return Poly(Var::hbar()); }

}  // namespace

// ---------------------------------------------------------------------------
// FreeQuadratic

void FreeQuadratic::add(const Gen& a, const Gen& b, const Poly& coefficient) {
  if (coefficient.is_zero()) return;
  Poly& slot = terms_[{a, b}];
  slot += coefficient;
  if (slot.is_zero()) terms_.erase({a, b});
}

unsigned FreeQuadratic::hbar_degree() const {
  unsigned d = 0;
  for (const auto& [p, c] : terms_) d = std::max(d, c.degree_in(Var::hbar()));
  return d;
}

unsigned FreeQuadratic::max_index() const {
  unsigned m = 0;
  for (const auto& [p, c] : terms_) m = std::max({m, p[0].index, p[1].index});
  return m;
}

FreeQuadratic& FreeQuadratic::operator+=(const FreeQuadratic& o) {
  for (const auto& [p, c] : o.terms_) add(p[0], p[1], c);
  return *this;
}

FreeQuadratic operator*(const Poly& c, const FreeQuadratic& x) {
  FreeQuadratic r;
  for (const auto& [p, coeff] : x.terms_) r.add(p[0], p[1], c * coeff);
  return r;
}

std::string FreeQuadratic::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    const std::string word = p[0].to_string() + "*" + p[1].to_string();
    if (c.is_constant()) {
      const Scalar k = c.constant_value();
      if (!s.empty()) s += k < 0 ? " - " : " + ";
      else if (k < 0) s += "-";
      s += (abs(k) == 1 ? "" : yang::to_string(abs(k)) + "*") + word;
    } else {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*" + word;
    }
  }
  return s;
}

FreeQuadratic commutator(const Gen& a, const Gen& b) {
  FreeQuadratic q;
  q.add(a, b, Poly(1L));
  q.add(b, a, Poly(-1L));
  return q;
}

// ---------------------------------------------------------------------------
// FreeWordElement and Serre elements

void FreeWordElement::add(const Word& word, const Scalar& coefficient) {
  if (coefficient == 0) return;
  Scalar& slot = terms_[word];
  slot += coefficient;
  if (slot == 0) terms_.erase(word);
}

std::string FreeWordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Scalar mag = abs(c);
    s += (mag == 1 ? "" : yang::to_string(mag) + "*") + word_string(w);
  }
  return s;
}

std::vector<std::pair<Word, int>> expand_nested_commutator(const Word& outer, const Gen& inner) {
  std::vector<std::pair<Word, int>> terms{{Word{inner}, 1}};
  for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
    std::vector<std::pair<Word, int>> next;
    next.reserve(2 * terms.size());
    for (const auto& [w, sign] : terms) {
      Word left{*it};
      left.insert(left.end(), w.begin(), w.end());
      next.emplace_back(std::move(left), sign);
      Word right = w;
      right.push_back(*it);
      next.emplace_back(std::move(right), -sign);
    }
    terms = std::move(next);
  }
  return terms;
}

FreeWordElement build_serre_element(int a_kl, const std::vector<unsigned>& r, unsigned s) {
  if (a_kl > 0) throw Error("off-diagonal cartan entry must be nonpositive");
  const std::size_t m = static_cast<std::size_t>(1 - a_kl);
  if (r.size() != m)
    throw ArityMismatch("serre element needs " + std::to_string(m) + " indices, got " + std::to_string(r.size()));
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  FreeWordElement out;
  do {
    Word outer;
    for (std::size_t i : perm) outer.push_back(xk(r[i]));
    for (const auto& [w, sign] : expand_nested_commutator(outer, xl(s))) out.add(w, sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

FreeQuadratic to_quadratic(const FreeWordElement& e) {
  FreeQuadratic q;
  for (const auto& [w, c] : e.terms()) {
    if (w.size() != 2) throw ArityMismatch("element has a word of length " + std::to_string(w.size()));
    q.add(w[0], w[1], Poly(c));
  }
  return q;
}

// ---------------------------------------------------------------------------
// Relation families

Poly eta_polynomial(unsigned n, const Poly& z, const Poly& w) {
  Poly p(1L);
  for (unsigned j = 1; j <= n; ++j) {
    const Scalar shift = rational(static_cast<long>(1 + n) - 2 * static_cast<long>(j), 2);
    p *= z - w + shift * hbar();
  }
  return p;
}

std::vector<FreeQuadratic> eta_relation_family(int a_kl, Sign sign, unsigned max_index) {
  if (a_kl > 0) throw Error("off-diagonal cartan entry must be nonpositive");
  const unsigned n = static_cast<unsigned>(-a_kl);
  const Poly z(Var::z()), w(Var::w());
  const Scalar half = rational(static_cast<long>(sign), 2);
  // Split each side by powers of z and w; the remaining coefficient is in h.
  auto split = [](const Poly& p) {
    std::vector<std::tuple<unsigned, unsigned, Poly>> parts;
    for (const auto& [i, zc] : p.collect(Var::z()))
      for (const auto& [j, c] : zc.collect(Var::w())) parts.emplace_back(i, j, c);
    return parts;
  };
  const auto before = split(eta_polynomial(n, z - half * hbar(), w));
  const auto after = split(eta_polynomial(n, z, w - half * hbar()));

  std::vector<FreeQuadratic> out;
  if (max_index < n) return out;
  for (unsigned r = 0; r + n <= max_index; ++r)
    for (unsigned s = 0; s + n <= max_index; ++s) {
      FreeQuadratic q;
      for (const auto& [i, j, c] : before) q.add(xk(r + i), xl(s + j), c);
      for (const auto& [i, j, c] : after) q.add(xl(s + j), xk(r + i), -c);
      out.push_back(std::move(q));
    }
  return out;
}

std::vector<FreeQuadratic> quadratic_relation_family(int a_kl, Sign sign, unsigned max_index) {
  std::vector<FreeQuadratic> out;
  if (max_index < 1) return out;
  const Poly h_term = Scalar(-static_cast<int>(sign) * a_kl) * hbar();
  for (unsigned r = 0; r + 1 <= max_index; ++r)
    for (unsigned s = 0; s + 1 <= max_index; ++s) {
      FreeQuadratic q = Poly(2L) * commutator(xk(r + 1), xl(s));
      q += Poly(-2L) * commutator(xk(r), xl(s + 1));
      q.add(xk(r), xl(s), h_term);
      q.add(xl(s), xk(r), h_term);
      out.push_back(std::move(q));
    }
  return out;
}

std::vector<FreeQuadratic> commutator_family(unsigned max_index) {
  std::vector<FreeQuadratic> out;
  for (unsigned r = 0; r <= max_index; ++r)
    for (unsigned s = 0; s <= max_index; ++s) out.push_back(commutator(xk(r), xl(s)));
  return out;
}

std::vector<FreeQuadratic> join(std::vector<FreeQuadratic> a, const std::vector<FreeQuadratic>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ---------------------------------------------------------------------------
// Span comparison

std::string to_string(SpanVerdict v) {
  switch (v) {
    case SpanVerdict::equal: return "equal";
    case SpanVerdict::first_in_second: return "first_in_second";
    case SpanVerdict::second_in_first: return "second_in_first";
    case SpanVerdict::incomparable: return "incomparable";
  }
  return "?";
}

namespace {

using Coordinate = std::pair<Pair, unsigned>;  // (word, h-degree)
using SparseVector = std::map<std::size_t, Scalar>;

class CoordinateIndex {
public:
  std::size_t operator()(const Coordinate& c) {
    auto [it, inserted] = index_.try_emplace(c, index_.size());
    return it->second;
  }

private:
  std::map<Coordinate, std::size_t> index_;
};

/// Row space kept in reduced form: each row has a pivot at which every
/// later row vanishes.
class RowSpace {
public:
  SparseVector reduce(SparseVector v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      const Scalar factor = it->second;
      for (const auto& [col, x] : row) {
        Scalar& slot = v[col];
        slot -= factor * x;
        if (slot == 0) v.erase(col);
      }
    }
    return v;
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  bool insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    const Scalar inv = Scalar(1) / r.begin()->second;
    for (auto& [col, x] : r) x *= inv;
    const std::size_t pivot = r.begin()->first;
    rows_.emplace_back(pivot, std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

private:
  std::vector<std::pair<std::size_t, SparseVector>> rows_;
};

struct Padded {
  FreeQuadratic element;
  SparseVector coords;
};

std::vector<Padded> pad_family(const std::vector<FreeQuadratic>& family, unsigned pad, unsigned cap,
                               CoordinateIndex& index) {
  std::vector<Padded> out;
  for (const auto& rel : family) {
    const unsigned deg = rel.hbar_degree();
    for (unsigned j = 0; j <= pad && deg + j <= cap; ++j) {
      Padded p{Poly::term(1, Monomial::of(Var::hbar(), j)) * rel, {}};
      for (const auto& [pair, c] : p.element.terms()) {
        for (const auto& [m, coeff] : c.terms()) {
          for (const auto& [v, e] : m.entries())
            if (v != Var::hbar()) throw Error("relation coefficient uses " + v.name() + "; only h is allowed");
          p.coords[index({pair, m.exponent(Var::hbar())})] = coeff;
        }
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

unsigned max_hbar_degree(const std::vector<FreeQuadratic>& family) {
  unsigned d = 0;
  for (const auto& q : family) d = std::max(d, q.hbar_degree());
  return d;
}

}  // namespace

SpanComparison relation_span_compare(const std::vector<FreeQuadratic>& first,
                                     const std::vector<FreeQuadratic>& second, unsigned hbar_pad) {
  const unsigned cap = hbar_pad + std::min(max_hbar_degree(first), max_hbar_degree(second));
  CoordinateIndex index;
  const auto p1 = pad_family(first, hbar_pad, cap, index);
  const auto p2 = pad_family(second, hbar_pad, cap, index);

  RowSpace s1, s2;
  for (const auto& p : p1) s1.insert(p.coords);
  for (const auto& p : p2) s2.insert(p.coords);

  auto outside = [](const std::vector<Padded>& family, const RowSpace& span) -> const Padded* {
    for (const auto& p : family)
      if (!span.contains(p.coords)) return &p;
    return nullptr;
  };
  const Padded* w12 = outside(p1, s2);
  const Padded* w21 = outside(p2, s1);

  SpanComparison out{SpanVerdict::equal, s1.rank(), s2.rank(), std::nullopt, 0};
  if (!w12 && !w21) return out;
  if (!w12) {
    out.verdict = SpanVerdict::first_in_second;
    out.witness = w21->element;
    out.witness_family = 2;
  } else if (!w21) {
    out.verdict = SpanVerdict::second_in_first;
    out.witness = w12->element;
    out.witness_family = 1;
  } else {
    out.verdict = SpanVerdict::incomparable;
    out.witness = w12->element;
    out.witness_family = 1;
  }
  return out;
}

}  // namespace yang::fa
