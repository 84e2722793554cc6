#include "yang/poly.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "yang/errors.hpp"

namespace yang {

std::string to_string(const Scalar& s) { return s.get_str(); }

// ---------------------------------------------------------------------------
// Var

Var Var::t(unsigned k) {
  if (k == 0 || k >= kAux) throw IndexOutOfRange("t-variable index out of range");
  return Var(k);
}

std::optional<Var> Var::from_name(const std::string& name) {
  if (name == "h") return hbar();
  if (name == "z") return z();
  if (name == "c") return c();
  if (name == "a") return a();
  if (name == "q") return q();
  if (name == "w") return w();
  if (name.size() >= 2 && name[0] == 't' && name[1] != '0' &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char ch) { return ch >= '0' && ch <= '9'; })) {
    if (name.size() > 7) return std::nullopt;
    return t(static_cast<unsigned>(std::stoul(name.substr(1))));
  }
  return std::nullopt;
}

std::string Var::name() const {
  if (rank_ == 0) return "z";
  if (is_t()) return "t" + std::to_string(rank_);
  switch (rank_) {
    case kAux + 1: return "c";
    case kAux + 2: return "a";
    case kAux + 3: return "q";
    case kAux + 4: return "w";
    case kHbar: return "h";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::initializer_list<Entry> entries) {
  std::vector<Entry> sorted(entries);
  std::sort(sorted.begin(), sorted.end(),
            [](const Entry& x, const Entry& y) { return x.first < y.first; });
  for (const auto& [v, e] : sorted) {
    if (e == 0) continue;
    if (!entries_.empty() && entries_.back().first == v) {
      entries_.back().second += e;
      degree_ += e;
    } else {
      push(v, e);
    }
  }
}

Monomial Monomial::of(Var v, unsigned e) {
  Monomial m;
  if (e > 0) m.push(v, e);
  return m;
}

void Monomial::push(Var v, unsigned e) {
  entries_.emplace_back(v, e);
  degree_ += e;
}

unsigned Monomial::exponent(Var v) const {
  for (const auto& [x, e] : entries_)
    if (x == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.entries_.reserve(entries_.size() + o.entries_.size());
  auto i = entries_.begin();
  auto j = o.entries_.begin();
  while (i != entries_.end() || j != o.entries_.end()) {
    if (j == o.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      r.push(i->first, i->second);
      ++i;
    } else if (i == entries_.end() || j->first < i->first) {
      r.push(j->first, j->second);
      ++j;
    } else {
      r.push(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial r;
  auto i = entries_.begin();
  for (const auto& [v, e] : o.entries_) {
    while (i != entries_.end() && i->first < v) {
      r.push(i->first, i->second);
      ++i;
    }
    if (i == entries_.end() || i->first != v || i->second < e) return std::nullopt;
    if (i->second > e) r.push(v, i->second - e);
    ++i;
  }
  for (; i != entries_.end(); ++i) r.push(i->first, i->second);
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  for (const auto& [x, e] : entries_)
    if (x != v) r.push(x, e);
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : entries_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool graded_greater(const Monomial& x, const Monomial& y) {
  if (x.degree() != y.degree()) return x.degree() > y.degree();
  const auto& a = x.entries();
  const auto& b = y.entries();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second) return a[i].second > b[j].second;
      ++i;
      ++j;
    } else {
      return a[i].first < b[j].first;
    }
  }
  return i < a.size();
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(long c) {
  if (c != 0) terms_.emplace(Monomial(), Scalar(c));
}

Poly::Poly(const Scalar& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Poly::Poly(Var v) { terms_.emplace(Monomial::of(v), Scalar(1)); }

Poly Poly::term(const Scalar& c, const Monomial& m) {
  Poly p;
  p.add_term(c, m);
  return p;
}

void Poly::add_term(const Scalar& c, const Monomial& m) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar Poly::constant_value() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Scalar(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

const Scalar& Poly::leading_coefficient() const {
  assert(!terms_.empty());
  return terms_.begin()->second;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

unsigned Poly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::vector<Var> Poly::variables() const {
  std::set<Var> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.entries()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

std::map<unsigned, Poly> Poly::collect(Var v) const {
  std::map<unsigned, Poly> out;
  for (const auto& [m, c] : terms_) out[m.exponent(v)].add_term(c, m.without(v));
  return out;
}

Poly Poly::from_collected(Var v, const std::map<unsigned, Poly>& parts) {
  Poly p;
  for (const auto& [e, coeff] : parts) {
    const Monomial xe = Monomial::of(v, e);
    for (const auto& [m, c] : coeff.terms_) p.add_term(c, m * xe);
  }
  return p;
}

Poly Poly::rename(const std::function<Var(Var)>& f) const {
  Poly p;
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (const auto& [v, e] : m.entries()) r = r * Monomial::of(f(v), e);
    p.add_term(c, r);
  }
  return p;
}

Poly Poly::substitute(Var v, const Poly& value) const {
  Poly result;
  std::map<unsigned, Poly> powers;
  for (const auto& [e, coeff] : collect(v)) {
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
    result += coeff * it->second;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Poly operator*(const Poly& x, const Poly& y) {
  Poly p;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) p.add_term(cx * cy, mx * my);
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1L);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const Scalar mag = abs(c);
    if (m.is_one()) {
      s += yang::to_string(mag);
    } else if (mag == 1) {
      s += m.to_string();
    } else {
      s += yang::to_string(mag) + "*" + m.to_string();
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Division and gcd

DivisionResult divide_with_remainder(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  DivisionResult out;
  Poly p = a;
  const Monomial& lb = b.leading_monomial();
  const Scalar& cb = b.leading_coefficient();
  while (!p.is_zero()) {
    const Monomial lp = p.leading_monomial();
    const Scalar cp = p.leading_coefficient();
    if (auto m = lp.divide(lb)) {
      const Poly t = Poly::term(cp / cb, *m);
      out.quotient += t;
      p -= t * b;
    } else {
      out.remainder.add_term(cp, lp);
      p.add_term(-cp, lp);
    }
  }
  return out;
}

Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  if (b.is_constant()) return a * (Scalar(1) / b.constant_value());
  auto [q, r] = divide_with_remainder(a, b);
  if (!r.is_zero()) throw NotDivisible(r.to_string());
  return q;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Scalar(1) / p.leading_coefficient());
}

namespace {

// Most significant variable present in either polynomial.
std::optional<Var> main_variable(const Poly& a, const Poly& b) {
  std::optional<Var> best;
  for (const Poly* p : {&a, &b})
    for (Var v : p->variables())
      if (!best || v < *best) best = v;
  return best;
}

Poly content_in(const Poly& p, Var x) {
  Poly g;
  for (const auto& [e, coeff] : p.collect(x)) {
    g = gcd(g, coeff);
    if (g.is_constant()) break;
  }
  return g;
}

Poly primitive_in(const Poly& p, Var x) { return exact_divide(p, content_in(p, x)); }

Poly pseudo_remainder(const Poly& a, const Poly& b, Var x) {
  const unsigned db = b.degree_in(x);
  const Poly lcb = b.collect(x).rbegin()->second;
  Poly r = a;
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(x);
    if (dr < db) break;
    const Poly lcr = r.collect(x).rbegin()->second;
    r = lcb * r - lcr * Poly::term(Scalar(1), Monomial::of(x, dr - db)) * b;
  }
  return r;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1L);
  const Var x = *main_variable(a, b);

  const Poly ca = content_in(a, x);
  const Poly cb = content_in(b, x);
  const Poly g = gcd(ca, cb);
  Poly pa = exact_divide(a, ca);
  Poly pb = exact_divide(b, cb);
  if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.degree_in(x) == 0) {
      pa = Poly(1L);
      break;
    }
    Poly r = pseudo_remainder(pa, pb, x);
    pa = std::move(pb);
    pb = r.is_zero() ? Poly() : primitive_in(r, x);
  }
  return make_monic(g * pa);
}

}  // namespace yang
