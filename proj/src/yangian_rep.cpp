#include "yang/yangian_rep.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "yang/errors.hpp"
#include "yang/laurent.hpp"
#include "yang/sym_poly.hpp"

namespace yang::rep {

ModuleElement make_unchecked(unsigned w, int v, Poly f) {
  return ModuleElement(w, v, std::move(f), ModuleElement::Unchecked{});
}

namespace {

Poly t(unsigned k) { return Poly(Var::t(k)); }
Poly hbar() { return Poly(Var::hbar()); }

/// f with its argument slots filled by t_{slots[0]}, t_{slots[1]}, ...
Poly place(const Poly& f, const std::vector<unsigned>& slots) {
  return f.rename([&slots](Var x) { return x.is_t() ? Var::t(slots.at(x.t_index() - 1)) : x; });
}

/// prod_{i<j} (t_i - t_j) over the listed indices, in list order.
Poly vandermonde(const std::vector<unsigned>& idx) {
  Poly p(1L);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) p *= t(idx[i]) - t(idx[j]);
  return p;
}

/// Divides the common-denominator numerator by every t_i - t_j of the block.
Poly cancel_denominator(Poly numerator, const std::vector<unsigned>& block, const char* op) {
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      try {
        numerator = exact_divide(numerator, t(block[i]) - t(block[j]));
      } catch (const NotDivisible&) {
        throw CancellationFailure(std::string(op) + ": sum keeps denominator t" +
                                  std::to_string(block[i]) + " - t" + std::to_string(block[j]));
      }
    }
  return numerator;
}

// Shared body of x+ and x-. `block` holds the indices summed over; for each
// k the summand is f(slots_k) t_k^r prod_{m != k} (1 + h/(sign*(t_k - t_m))).
// Over the common denominator prod_{i<j} (t_i - t_j) the k-th cofactor is
// (-1)^{#m<k} prod_{i<j; i,j != k} (t_i - t_j), times (-1)^{n-1} when the
// factors are written (t_m - t_k).
template <class SlotFn>
Poly sum_over_block(const ModuleElement& e, unsigned r, const std::vector<unsigned>& block, bool plus,
                    SlotFn slots_for) {
  const std::size_t n = block.size();
  Poly numerator;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const unsigned k = block[pos];
    std::vector<unsigned> others;
    for (unsigned m : block)
      if (m != k) others.push_back(m);

    Poly term = place(e.poly(), slots_for(k)) * t(k).pow(r);
    for (unsigned m : others) term *= plus ? t(k) - t(m) + hbar() : t(m) - t(k) + hbar();
    term *= vandermonde(others);
    const bool odd = (pos % 2 == 1) != (!plus && n % 2 == 0);
    if (odd)
      numerator -= term;
    else
      numerator += term;
  }
  return cancel_denominator(std::move(numerator), block, plus ? "x+" : "x-");
}

void require_component(const ModuleElement& e, const char* op) {
  if (!e.in_range()) throw IndexOutOfRange(std::string(op) + ": element has no component");
}

}  // namespace

// ---------------------------------------------------------------------------
// ModuleElement

ModuleElement::ModuleElement(unsigned w, int v, Poly f) : w_(w), v_(v), f_(std::move(f)) {
  if (v < 0 || v > static_cast<int>(w))
    throw IndexOutOfRange("component v=" + std::to_string(v) + " outside [0, " + std::to_string(w) + "]");
  if (!sym::is_bisymmetric(f_, static_cast<unsigned>(v), w))
    throw Error("polynomial " + f_.to_string() + " is not in component v=" + std::to_string(v));
}

ModuleElement ModuleElement::zero(unsigned w, int v) { return make_unchecked(w, v, Poly()); }

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (w_ != o.w_) throw std::logic_error("module elements over different w");
  if (o.is_zero()) return *this;
  if (is_zero()) {
    v_ = o.v_;
    f_ = o.f_;
    return *this;
  }
  if (v_ != o.v_) throw std::logic_error("adding elements of different components");
  f_ += o.f_;
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  return *this += make_unchecked(o.w_, o.v_, -o.f_);
}

ModuleElement operator*(const Poly& c, const ModuleElement& e) {
  return make_unchecked(e.w_, e.v_, c * e.f_);
}

std::string ModuleElement::to_string() const {
  return "component " + std::to_string(v_) + ": " + f_.to_string();
}

int weight(const ModuleElement& e) { return static_cast<int>(e.w()) - 2 * e.v(); }

// ---------------------------------------------------------------------------
// Operators

ModuleElement x_plus(unsigned r, const ModuleElement& e) {
  const unsigned w = e.w();
  if (e.v() <= 0 || e.is_zero()) return ModuleElement::zero(w, e.v() - 1);
  require_component(e, "x+");
  const unsigned v = static_cast<unsigned>(e.v());

  std::vector<unsigned> block;
  for (unsigned m = v; m <= w; ++m) block.push_back(m);
  auto slots = [v, w](unsigned k) {
    std::vector<unsigned> s;
    for (unsigned m = 1; m < v; ++m) s.push_back(m);
    s.push_back(k);
    for (unsigned m = v; m <= w; ++m)
      if (m != k) s.push_back(m);
    return s;
  };
  return make_unchecked(w, e.v() - 1, sum_over_block(e, r, block, true, slots));
}

ModuleElement x_minus(unsigned r, const ModuleElement& e) {
  const unsigned w = e.w();
  if (e.v() >= static_cast<int>(w) || e.is_zero()) return ModuleElement::zero(w, e.v() + 1);
  require_component(e, "x-");
  const unsigned v = static_cast<unsigned>(e.v());

  std::vector<unsigned> block;
  for (unsigned m = 1; m <= v + 1; ++m) block.push_back(m);
  auto slots = [v, w](unsigned k) {
    std::vector<unsigned> s;
    for (unsigned m = 1; m <= v + 1; ++m)
      if (m != k) s.push_back(m);
    s.push_back(k);
    for (unsigned m = v + 2; m <= w; ++m) s.push_back(m);
    return s;
  };
  return make_unchecked(w, e.v() + 1, sum_over_block(e, r, block, false, slots));
}

Poly residue_A(unsigned w) {
  Poly a(1L);
  for (unsigned m = 1; m <= w; ++m) a *= Poly(Var::z()) - t(m);
  return a;
}

Poly residue_B(unsigned v, unsigned w) {
  if (v > w) throw IndexOutOfRange("component v exceeds w");
  Poly b(1L);
  for (unsigned m = 1; m <= w; ++m) b *= Poly(Var::z()) - t(m) + (m <= v ? -hbar() : hbar());
  return b;
}

namespace {

struct SeriesCache {
  std::mutex mutex;
  std::map<std::pair<unsigned, unsigned>, CartanSeries> entries;
};

SeriesCache& series_cache() {
  static SeriesCache cache;
  return cache;
}

CartanSeries compute_cartan_series(unsigned v, unsigned w, unsigned N) {
  const Poly A = residue_A(w);
  const Poly numerator = exact_divide(residue_B(v, w) - A, hbar());
  const LaurentTail tail = expand_at_infinity(numerator, A, Var::z(), static_cast<int>(N) + 1);
  CartanSeries s{w, v, {}};
  for (unsigned r = 0; r <= N; ++r) s.kappa.push_back(tail.coefficient_at(-static_cast<int>(r) - 1));
  return s;
}

}  // namespace

CartanSeries cartan_series(unsigned v, unsigned w, unsigned N) {
  if (v > w) throw IndexOutOfRange("component v exceeds w");
  auto& cache = series_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.entries.find({v, w});
    if (it != cache.entries.end() && it->second.kappa.size() > N) {
      CartanSeries s = it->second;
      s.kappa.resize(N + 1);
      return s;
    }
  }
  CartanSeries s = compute_cartan_series(v, w, N);
  std::lock_guard lock(cache.mutex);
  auto& slot = cache.entries[{v, w}];
  if (slot.kappa.size() < s.kappa.size()) slot = s;
  return s;
}

ModuleElement h_op(unsigned r, const ModuleElement& e) {
  if (e.is_zero()) return e;
  require_component(e, "h");
  const auto s = cartan_series(static_cast<unsigned>(e.v()), e.w(), r);
  return s.kappa[r] * e;
}

ModuleElement h_via_residue(unsigned n, const ModuleElement& e) {
  if (e.is_zero()) return e;
  require_component(e, "h");
  const unsigned v = static_cast<unsigned>(e.v());
  const Poly zn = Poly::term(1, Monomial::of(Var::z(), n));
  const Poly residue = sum_finite_residues(zn * residue_B(v, e.w()), residue_A(e.w()), Var::z());
  return exact_divide(residue, hbar()) * e;
}

}  // namespace yang::rep
