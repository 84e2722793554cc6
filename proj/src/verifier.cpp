#include "yang/verifier.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

#include <json.hpp>

#include "yang/errors.hpp"
#include "yang/ratfunc.hpp"
#include "yang/sym_poly.hpp"
#include "yang/yangian_rep.hpp"

namespace yang::verify {

using rep::ModuleElement;

namespace {

enum class Op { x_plus, x_minus, h, h_residue };

ModuleElement apply(Op op, unsigned r, const ModuleElement& e) {
  switch (op) {
    case Op::x_plus: return rep::x_plus(r, e);
    case Op::x_minus: return rep::x_minus(r, e);
    case Op::h: return rep::h_op(r, e);
    case Op::h_residue: return rep::h_via_residue(r, e);
  }
  return e;
}

/// Applies a word of operators, rightmost first.
ModuleElement word(std::initializer_list<std::pair<Op, unsigned>> ops, const ModuleElement& e) {
  ModuleElement out = e;
  for (auto it = std::rbegin(ops); it != std::rend(ops); ++it) {
    if (out.is_zero()) return out;
    out = apply(it->first, it->second, out);
  }
  return out;
}

Poly hbar() { return Poly(Var::hbar()); }

struct CaseInput {
  ModuleElement f;
  std::string basis;
  unsigned r;
  unsigned s;
};

struct Residual {
  std::string kind;
  ModuleElement value;
};

using CheckFn = std::function<std::vector<Residual>(const CaseInput&)>;

struct CaseOutcome {
  std::vector<Failure> failures;
  bool cancellation = false;
};

CaseOutcome run_case(const CaseInput& in, const CheckFn& check) {
  CaseOutcome out;
  auto fail = [&](std::string kind, std::string residual) {
    out.failures.push_back({in.f.v(), in.basis, in.r, in.s, std::move(kind), std::move(residual)});
  };
  try {
    for (const auto& [kind, value] : check(in))
      if (!value.is_zero()) fail(kind, value.poly().to_string());
  } catch (const CancellationFailure& e) {
    out.cancellation = true;
    fail("cancellation", e.what());
  } catch (const Error& e) {
    fail("error", e.what());
  }
  return out;
}

RelationReport run_cases(const std::string& id, unsigned w, unsigned D, unsigned R,
                         const std::vector<std::pair<unsigned, unsigned>>& index_pairs, unsigned threads,
                         const CheckFn& check) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CaseInput> cases;
  for (unsigned v = 0; v <= w; ++v)
    for (const auto& [index, f] : sym::basis_up_to_degree(v, w, D)) {
      ModuleElement e(w, static_cast<int>(v), f.poly());
      const std::string basis = f.poly().to_string();
      for (const auto& [r, s] : index_pairs) cases.push_back({e, basis, r, s});
    }

  std::vector<CaseOutcome> outcomes(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) outcomes[i] = run_case(cases[i], check);
  };
  if (threads == 0) threads = default_threads();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(cases.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  RelationReport report;
  report.relation = id;
  report.w = w;
  report.D = D;
  report.R = R;
  report.cases_checked = cases.size();
  for (auto& o : outcomes) {
    if (o.cancellation) ++report.cancellation_failures;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::vector<std::pair<unsigned, unsigned>> all_pairs(unsigned R) {
  std::vector<std::pair<unsigned, unsigned>> p;
  for (unsigned r = 0; r <= R; ++r)
    for (unsigned s = 0; s <= R; ++s) p.emplace_back(r, s);
  return p;
}

struct SignedOp {
  const char* name;
  Op op;
  long sign;
};

constexpr SignedOp kSigns[] = {{"x+", Op::x_plus, 1}, {"x-", Op::x_minus, -1}};

}  // namespace

unsigned default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("YANG_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = static_cast<unsigned>(cap);
  }
  return n;
}

std::string RelationReport::to_json() const {
  nlohmann::ordered_json j;
  j["relation"] = relation;
  j["w"] = w;
  j["D"] = D;
  j["R"] = R;
  j["cases_checked"] = cases_checked;
  j["cancellation_failures"] = cancellation_failures;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    nlohmann::ordered_json x;
    x["v"] = f.v;
    x["basis"] = f.basis;
    x["r"] = f.r;
    x["s"] = f.s;
    x["kind"] = f.kind;
    x["residual"] = f.residual;
    j["failures"].push_back(std::move(x));
  }
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

RelationReport verify_1_1(unsigned w, unsigned D, unsigned R, unsigned threads) {
  return run_cases("1.1", w, D, R, all_pairs(R), threads, [](const CaseInput& in) {
    const auto& f = in.f;
    std::vector<Residual> out;
    out.push_back({"[h,h]", word({{Op::h, in.r}, {Op::h, in.s}}, f) - word({{Op::h, in.s}, {Op::h, in.r}}, f)});
    if (in.r == 0 && in.s == 0)
      out.push_back({"h0", rep::h_op(0, f) - Poly(static_cast<long>(rep::weight(f))) * f});
    if (in.r == 0)
      for (const auto& sg : kSigns) {
        const ModuleElement x = apply(sg.op, in.s, f);
        out.push_back({std::string("[h0,") + sg.name + "]",
                       rep::h_op(0, x) - apply(sg.op, in.s, rep::h_op(0, f)) - Poly(2 * sg.sign) * x});
      }
    return out;
  });
}

RelationReport verify_1_2(unsigned w, unsigned D, unsigned R, unsigned threads) {
  return run_cases("1.2", w, D, R, all_pairs(R), threads, [](const CaseInput& in) {
    const auto& f = in.f;
    const unsigned r = in.r, s = in.s;
    std::vector<Residual> out;
    for (const auto& sg : kSigns) {
      const ModuleElement lhs = Poly(2L) * (word({{Op::h, r + 1}, {sg.op, s}}, f) - word({{sg.op, s}, {Op::h, r + 1}}, f)) -
                                Poly(2L) * (word({{Op::h, r}, {sg.op, s + 1}}, f) - word({{sg.op, s + 1}, {Op::h, r}}, f));
      const ModuleElement rhs =
          (Poly(2 * sg.sign) * hbar()) * (word({{Op::h, r}, {sg.op, s}}, f) + word({{sg.op, s}, {Op::h, r}}, f));
      out.push_back({sg.name, lhs - rhs});
    }
    return out;
  });
}

RelationReport verify_1_3(unsigned w, unsigned D, unsigned R, unsigned threads) {
  return run_cases("1.3", w, D, R, all_pairs(R), threads, [](const CaseInput& in) {
    const auto& f = in.f;
    const ModuleElement bracket =
        word({{Op::x_plus, in.r}, {Op::x_minus, in.s}}, f) - word({{Op::x_minus, in.s}, {Op::x_plus, in.r}}, f);
    return std::vector<Residual>{{"series", bracket - rep::h_op(in.r + in.s, f)},
                                 {"residue", bracket - rep::h_via_residue(in.r + in.s, f)}};
  });
}

RelationReport verify_1_4(unsigned w, unsigned D, unsigned R, unsigned threads) {
  return run_cases("1.4", w, D, R, all_pairs(R), threads, [](const CaseInput& in) {
    const auto& f = in.f;
    const unsigned r = in.r, s = in.s;
    std::vector<Residual> out;
    for (const auto& sg : kSigns) {
      const ModuleElement lhs =
          Poly(2L) * (word({{sg.op, r + 1}, {sg.op, s}}, f) - word({{sg.op, s}, {sg.op, r + 1}}, f)) -
          Poly(2L) * (word({{sg.op, r}, {sg.op, s + 1}}, f) - word({{sg.op, s + 1}, {sg.op, r}}, f));
      const ModuleElement rhs =
          (Poly(2 * sg.sign) * hbar()) * (word({{sg.op, r}, {sg.op, s}}, f) + word({{sg.op, s}, {sg.op, r}}, f));
      out.push_back({sg.name, lhs - rhs});
    }
    return out;
  });
}

RelationReport verify_relation(const std::string& id, unsigned w, unsigned D, unsigned R, unsigned threads) {
  if (id == "1.1") return verify_1_1(w, D, R, threads);
  if (id == "1.2") return verify_1_2(w, D, R, threads);
  if (id == "1.3") return verify_1_3(w, D, R, threads);
  if (id == "1.4") return verify_1_4(w, D, R, threads);
  throw Error("unknown relation '" + id + "'");
}

RelationReport verify_cartan_agreement(unsigned w, unsigned D, unsigned N, unsigned threads) {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned n = 0; n <= N; ++n) pairs.emplace_back(n, 0);
  return run_cases("h-agreement", w, D, N, pairs, threads, [](const CaseInput& in) {
    return std::vector<Residual>{{"series-residue", rep::h_op(in.r, in.f) - rep::h_via_residue(in.r, in.f)}};
  });
}

bool verify_X_identity(std::optional<Scalar> a_value) {
  const Poly z(Var::z()), c(Var::c()), h(Var::hbar());
  const Poly a = a_value ? Poly(*a_value) : Poly(Var::a());
  const Scalar half = rational(1, 2);
  // X = (1 - (c - a h/2)/z) / (1 - (c + a h/2)/z), cleared of 1/z.
  const RationalFunction X = RationalFunction::normalize(z - c + half * a * h, z - c - half * a * h);
  const RationalFunction lhs = RationalFunction(2L) * (X - RationalFunction(1L)) * RationalFunction(z - c);
  const RationalFunction rhs = RationalFunction(h * a) * (X + RationalFunction(1L));
  return lhs == rhs;
}

}  // namespace yang::verify
