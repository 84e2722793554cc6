#include <doctest.h>

#include <json.hpp>

#include "yang/errors.hpp"
#include "yang/verifier.hpp"
#include "yang/yangian_rep.hpp"

using namespace yang;
using namespace yang::verify;

TEST_CASE("small relation runs pass and report") {
  for (const char* id : {"1.1", "1.2", "1.3", "1.4"}) {
    const auto r = verify_relation(id, 2, 1, 1, 2);
    CHECK(r.passed());
    CHECK(r.cancellation_failures == 0);
    CHECK(r.cases_checked == 40);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["relation"] == id);
    CHECK(j["failures"].empty());
    CHECK(j.contains("elapsed_ms"));
  }
  CHECK_THROWS_AS(verify_relation("1.5", 1, 1, 1), Error);
}

TEST_CASE("thread count does not change the outcome") {
  const auto a = verify_1_3(2, 2, 1, 1);
  const auto b = verify_1_3(2, 2, 1, 4);
  CHECK(a.cases_checked == b.cases_checked);
  CHECK(a.passed());
  CHECK(b.passed());
}

TEST_CASE("X identity") {
  CHECK(verify_X_identity());
  CHECK(verify_X_identity(Scalar(-1)));
  CHECK(verify_X_identity(rational(3, 2)));
}

TEST_CASE("cartan agreement on a small range") { CHECK(verify_cartan_agreement(2, 1, 3).passed()); }

TEST_CASE("the checks detect a shifted index") {
  const rep::ModuleElement one(2, 1, Poly(1L));
  for (unsigned r = 0; r <= 2; ++r) {
    const auto bracket = rep::x_plus(r, rep::x_minus(1, one)) - rep::x_minus(1, rep::x_plus(r, one));
    CHECK(bracket.poly() == rep::h_op(r + 1, one).poly());
    CHECK(bracket.poly() != rep::h_op(r + 2, one).poly());
  }
}
