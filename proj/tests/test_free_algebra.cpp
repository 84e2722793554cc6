#include <doctest.h>

#include "yang/errors.hpp"
#include "yang/free_algebra.hpp"

using namespace yang;
using namespace yang::fa;

namespace {
Poly h() { return Poly(Var::hbar()); }
}  // namespace

TEST_CASE("quadratic elements") {
  const auto c = commutator(xk(1), xl(0));
  CHECK(c.terms().size() == 2);
  CHECK(c.to_string() == "xk1*xl0 - xl0*xk1");
  auto sum = c;
  sum += commutator(xl(0), xk(1));
  CHECK(sum.is_zero());
  CHECK((h() * c).hbar_degree() == 1);
  CHECK(c.max_index() == 1);
  FreeQuadratic z;
  z.add(xk(0), xl(0), Poly());
  CHECK(z.is_zero());
}

TEST_CASE("nested commutators expand without collecting") {
  const auto words = expand_nested_commutator({xk(0), xk(1)}, xl(2));
  CHECK(words.size() == 4);
  int sum = 0;
  for (const auto& [w, sign] : words) {
    CHECK(w.size() == 3);
    sum += sign;
  }
  CHECK(sum == 0);
}

TEST_CASE("Serre element with a repeated index") {
  const auto e = build_serre_element(-1, {3, 3}, 5);
  FreeWordElement expect;
  expect.add({xk(3), xk(3), xl(5)}, 2);
  expect.add({xk(3), xl(5), xk(3)}, -4);
  expect.add({xl(5), xk(3), xk(3)}, 2);
  CHECK(e == expect);
}

TEST_CASE("Serre element with distinct indices") {
  const auto e = build_serre_element(-1, {0, 1}, 2);
  CHECK(e.terms().size() == 6);
  CHECK(e == build_serre_element(-1, {1, 0}, 2));
  CHECK(build_serre_element(-2, {0, 1, 2}, 0) == build_serre_element(-2, {2, 0, 1}, 0));
  CHECK(build_serre_element(-2, {0, 1, 2}, 0) == build_serre_element(-2, {1, 2, 0}, 0));
}

TEST_CASE("Serre arity and m = 1") {
  CHECK_THROWS_AS(build_serre_element(-1, {0}, 0), ArityMismatch);
  CHECK_THROWS_AS(build_serre_element(0, {0, 1}, 0), ArityMismatch);
  const auto q = to_quadratic(build_serre_element(0, {2}, 1));
  CHECK(q == commutator(xk(2), xl(1)));
}

TEST_CASE("eta polynomials") {
  const Poly z(Var::z()), w(Var::w());
  CHECK(eta_polynomial(0, z, w) == Poly(1L));
  CHECK(eta_polynomial(1, z, w) == z - w);
  const Poly half = Poly(rational(1, 2)) * h();
  CHECK(eta_polynomial(2, z, w) == (z - w + half) * (z - w - half));
}

TEST_CASE("family sizes respect the index bound") {
  CHECK(commutator_family(2).size() == 9);
  CHECK(quadratic_relation_family(-1, Sign::plus, 3).size() == 9);
  for (const auto& rel : eta_relation_family(-2, Sign::minus, 4)) CHECK(rel.max_index() <= 4);
  for (const auto& rel : quadratic_relation_family(-1, Sign::plus, 4)) CHECK(rel.max_index() <= 4);
  CHECK(join(commutator_family(1), commutator_family(1)).size() == 8);
}

TEST_CASE("span verdicts") {
  const auto a = commutator_family(2);
  CHECK(relation_span_compare(a, a, 1).verdict == SpanVerdict::equal);
  CHECK_FALSE(relation_span_compare(a, a, 1).witness);
  const std::vector<FreeQuadratic> small(a.begin(), a.begin() + 3);
  const auto cmp = relation_span_compare(small, a, 1);
  CHECK(cmp.verdict == SpanVerdict::first_in_second);
  CHECK(cmp.witness_family == 2);
  CHECK(relation_span_compare(a, small, 1).verdict == SpanVerdict::second_in_first);
  const std::vector<FreeQuadratic> other(a.begin() + 3, a.end());
  CHECK(relation_span_compare(small, other, 1).verdict == SpanVerdict::incomparable);
  CHECK(to_string(SpanVerdict::first_in_second) == "first_in_second");
}

TEST_CASE("eta form versus the quadratic relation") {
  for (unsigned R : {2U, 4U})
    for (unsigned pad : {1U, 2U}) {
      const auto q = join(quadratic_relation_family(-1, Sign::plus, R), quadratic_relation_family(-1, Sign::minus, R));
      const auto e = join(eta_relation_family(-1, Sign::plus, R), eta_relation_family(-1, Sign::minus, R));
      CHECK(relation_span_compare(q, e, pad).verdict == SpanVerdict::equal);
      // 2 eta^+ is the (1.4)^- element, so equal signs do not match up.
      CHECK(relation_span_compare(quadratic_relation_family(-1, Sign::minus, R),
                                  eta_relation_family(-1, Sign::plus, R), pad)
                .verdict == SpanVerdict::equal);
      CHECK(relation_span_compare(quadratic_relation_family(-1, Sign::plus, R),
                                  eta_relation_family(-1, Sign::plus, R), pad)
                .verdict == SpanVerdict::incomparable);
      const auto e0 = join(eta_relation_family(0, Sign::plus, R), eta_relation_family(0, Sign::minus, R));
      CHECK(relation_span_compare(e0, commutator_family(R), pad).verdict == SpanVerdict::equal);
    }
}

TEST_CASE("eta relation at a = -1 is twice the opposite-sign quadratic relation") {
  const auto e = eta_relation_family(-1, Sign::plus, 3);
  const auto q = quadratic_relation_family(-1, Sign::minus, 3);
  REQUIRE(e.size() == q.size());
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(Poly(2L) * e[i] == q[i]);
}
