#include "yang/sym_poly.hpp"

#include <algorithm>
#include <numeric>

#include "yang/errors.hpp"

namespace yang::sym {

namespace {

void check_range(unsigned v, unsigned w) {
  if (v > w) throw IndexOutOfRange("component v=" + std::to_string(v) + " exceeds w=" + std::to_string(w));
}

void check_variables(const Poly& f, unsigned w) {
  for (Var x : f.variables()) {
    if (x == Var::hbar()) continue;
    if (x.is_t() && x.t_index() <= w) continue;
    throw UnknownVariable(x.name());
  }
}

Poly swap_t(const Poly& f, unsigned i, unsigned j) {
  return f.rename([i, j](Var x) {
    if (x.is_t() && x.t_index() == i) return Var::t(j);
    if (x.is_t() && x.t_index() == j) return Var::t(i);
    return x;
  });
}

void extend_partitions(unsigned remaining, unsigned max_part, unsigned parts_left, Partition& cur,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (parts_left == 0) return;
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    extend_partitions(remaining - p, p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

std::string json_list(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

}  // namespace

BiSymPoly::BiSymPoly(unsigned v, unsigned w, Poly f) : v_(v), w_(w), f_(std::move(f)) {
  check_range(v, w);
  if (!is_bisymmetric(f_, v, w))
    throw Error("polynomial " + f_.to_string() + " is not invariant under S_" + std::to_string(v) +
                " x S_" + std::to_string(w - v));
}

unsigned BasisIndex::degree() const {
  return hbar_power + std::accumulate(lambda.begin(), lambda.end(), 0U) +
         std::accumulate(mu.begin(), mu.end(), 0U);
}

std::string BasisIndex::to_json(unsigned v, unsigned w) const {
  return "{\"v\":" + std::to_string(v) + ",\"w\":" + std::to_string(w) +
         ",\"hbar_power\":" + std::to_string(hbar_power) + ",\"lambda\":" + json_list(lambda) +
         ",\"mu\":" + json_list(mu) + "}";
}

bool is_bisymmetric(const Poly& f, unsigned v, unsigned w) {
  check_range(v, w);
  check_variables(f, w);
  for (unsigned i = 1; i < v; ++i)
    if (swap_t(f, i, i + 1) != f) return false;
  for (unsigned i = v + 1; i < w; ++i)
    if (swap_t(f, i, i + 1) != f) return false;
  return true;
}

std::vector<Var> block_vars(int block, unsigned v, unsigned w) {
  check_range(v, w);
  std::vector<Var> vars;
  const unsigned lo = block == 1 ? 1 : v + 1;
  const unsigned hi = block == 1 ? v : w;
  for (unsigned k = lo; k <= hi; ++k) vars.push_back(Var::t(k));
  return vars;
}

BiSymPoly block_elementary(unsigned i, int block, unsigned v, unsigned w) {
  if (block != 1 && block != 2) throw IndexOutOfRange("block must be 1 or 2");
  const auto vars = block_vars(block, v, w);
  if (i < 1 || i > vars.size())
    throw IndexOutOfRange("e_" + std::to_string(i) + " on a block of size " + std::to_string(vars.size()));
  return BiSymPoly(v, w, monomial_symmetric(Partition(i, 1), vars));
}

Poly monomial_symmetric(const Partition& lambda, const std::vector<Var>& vars) {
  if (lambda.size() > vars.size()) return {};
  std::vector<unsigned> exps(vars.size(), 0);
  std::copy(lambda.begin(), lambda.end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  Poly out;
  do {
    Monomial m;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (exps[k] > 0) m = m * Monomial::of(vars[k], exps[k]);
    out.add_term(1, m);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

std::vector<Partition> partitions(unsigned n, unsigned max_parts) {
  std::vector<Partition> out;
  Partition cur;
  extend_partitions(n, n, max_parts, cur, out);
  return out;
}

std::vector<std::pair<BasisIndex, BiSymPoly>> basis_up_to_degree(unsigned v, unsigned w, unsigned D) {
  check_range(v, w);
  const auto b1 = block_vars(1, v, w);
  const auto b2 = block_vars(2, v, w);
  std::vector<std::pair<BasisIndex, BiSymPoly>> out;
  for (unsigned d = 0; d <= D; ++d) {
    for (unsigned a = d + 1; a-- > 0;) {
      const unsigned rest = d - a;
      for (unsigned l = rest + 1; l-- > 0;) {
        for (const auto& lam : partitions(l, v)) {
          const Poly ml = monomial_symmetric(lam, b1);
          for (const auto& mu : partitions(rest - l, w - v)) {
            Poly f = Poly::term(1, Monomial::of(Var::hbar(), a)) * ml * monomial_symmetric(mu, b2);
            out.emplace_back(BasisIndex{a, lam, mu}, BiSymPoly(v, w, std::move(f)));
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> hilbert_coefficients(unsigned v, unsigned w, unsigned D) {
  check_range(v, w);
  std::vector<std::uint64_t> c(D + 1, 0);
  c[0] = 1;
  auto divide_by = [&c, D](unsigned step) {
    for (unsigned n = step; n <= D; ++n) c[n] += c[n - step];
  };
  divide_by(1);
  for (unsigned i = 1; i <= v; ++i) divide_by(i);
  for (unsigned j = 1; j <= w - v; ++j) divide_by(j);
  return c;
}

BiSymPoly symmetrize_blocks(const Poly& f, unsigned v, unsigned w) {
  check_range(v, w);
  check_variables(f, w);
  std::vector<unsigned> p1(v), p2(w - v);
  std::iota(p1.begin(), p1.end(), 1U);
  std::iota(p2.begin(), p2.end(), v + 1);
  Poly sum;
  unsigned long count = 0;
  do {
    do {
      sum += f.rename([&](Var x) {
        if (!x.is_t()) return x;
        const unsigned k = x.t_index();
        return Var::t(k <= v ? p1[k - 1] : p2[k - v - 1]);
      });
      ++count;
    } while (std::next_permutation(p2.begin(), p2.end()));
  } while (std::next_permutation(p1.begin(), p1.end()));
  return BiSymPoly(v, w, sum * rational(1, static_cast<long>(count)));
}

}  // namespace yang::sym
