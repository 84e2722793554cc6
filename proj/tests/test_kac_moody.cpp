#include <doctest.h>

#include <random>

#include "yang/errors.hpp"
#include "yang/kac_moody.hpp"

using namespace yang;
using namespace yang::km;

TEST_CASE("cartan matrix of A2 and A3") {
  const auto a2 = cartan_matrix(Graph::parse_edge_list("k l\n"));
  CHECK(a2.to_json() == "[[2,-1],[-1,2]]");
  const auto a3 = cartan_matrix(Graph::parse_edge_list("# path\n1 2\n2 3\n"));
  CHECK(a3.to_json() == "[[2,-1,0],[-1,2,-1],[0,-1,2]]");
}

TEST_CASE("edge lists: multiplicities, isolated vertices, errors") {
  const auto g = Graph::parse_edge_list("a b 2\nc\n");
  REQUIRE(g.size() == 3);
  CHECK(g.n(0, 1) == 2);
  CHECK(g.n(1, 0) == 2);
  CHECK(cartan_matrix(g).to_json() == "[[2,-2,0],[-2,2,0],[0,0,2]]");
  CHECK_THROWS_AS(Graph::parse_edge_list("a a\n"), Error);
  CHECK_THROWS_AS(Graph::parse_edge_list("a b x\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse_edge_list("a b 1 2\n"), ParseError);
  const auto back = Graph::from_cartan(cartan_matrix(g));
  CHECK(back.vertices() == std::vector<std::string>{"1", "2", "3"});
  CHECK(cartan_matrix(back) == cartan_matrix(g));
}

TEST_CASE("cartan data validation") {
  CHECK_THROWS_AS(CartanData({{2, -1}, {0, 2}}), Error);
  CHECK_THROWS_AS(CartanData({{1, 0}, {0, 2}}), Error);
  CHECK_THROWS_AS(CartanData({{2, 1}, {1, 2}}), Error);
  CHECK_NOTHROW(CartanData(km::IntMatrix{{2}}));
}

TEST_CASE("pairings") {
  const CartanData c({{2, -1}, {-1, 2}});
  CHECK(pairing(DimWeightVector::simple_root(2, 0), DimWeightVector::simple_root(2, 1), c) == -1);
  CHECK(pairing(DimWeightVector::fundamental_weight(2, 0), DimWeightVector::simple_root(2, 0), c) == 1);
  CHECK(pairing(DimWeightVector::fundamental_weight(2, 0), DimWeightVector::simple_root(2, 1), c) == 0);
  CHECK_THROWS_AS(
      pairing(DimWeightVector::fundamental_weight(2, 0), DimWeightVector::fundamental_weight(2, 1), c),
      MixedBasisUnsupported);
  CHECK_THROWS_AS(DimWeightVector(LatticeKind::root, {1, -1}), Error);
}

TEST_CASE("rank_F equals the pairing (w - v | alpha_k)") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coord(0, 4);
  const std::vector<CartanData> types{CartanData(km::IntMatrix{{2}}), CartanData({{2, -1}, {-1, 2}}),
                                      CartanData({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}),
                                      CartanData({{2, -2}, {-2, 2}})};
  for (int i = 0; i < 100; ++i) {
    const auto& c = types[static_cast<std::size_t>(i) % types.size()];
    const std::size_t n = c.size();
    std::vector<long> vc(n), wc(n);
    for (auto& x : vc) x = coord(rng);
    for (auto& x : wc) x = coord(rng);
    const DimWeightVector v(LatticeKind::root, vc), w(LatticeKind::weight, wc);
    for (std::size_t k = 0; k < n; ++k) {
      const auto ak = DimWeightVector::simple_root(n, k);
      CHECK(rank_F(k, v, w, c) == pairing(w, ak, c) - pairing(v, ak, c));
    }
  }
  const CartanData c(IntMatrix{{2}});
  CHECK_THROWS_AS(rank_F(1, DimWeightVector(LatticeKind::root, {1}), DimWeightVector(LatticeKind::weight, {1}), c),
                  IndexOutOfRange);
}

TEST_CASE("q-integers") {
  CHECK(q_integer(2).to_string() == "q + q^-1");
  CHECK(q_integer(3).to_string() == "q^2 + 1 + q^-2");
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(-2).to_string() == "-q - q^-1");
  for (int n = 0; n <= 10; ++n) {
    CHECK(q_integer(-n) == -q_integer(n));
    CHECK(q_integer(n).at_one() == n);
    // [n](q - q^-1) = q^n - q^-n
    CHECK(q_integer(n) * (QLaurent::monomial(1) - QLaurent::monomial(-1)) ==
          QLaurent::monomial(n) - QLaurent::monomial(-n));
  }
}

TEST_CASE("w-convention and sign factors") {
  const CartanData c({{2, -1}, {-1, 2}});
  const auto conv = WConvention::plus_identity(2);
  const DimWeightVector v(LatticeKind::root, {1, 0});
  // (-1)^{a_00 v_0 + a_01 v_1} = (-1)^2
  CHECK(sign_factor(0, v, Side::plus, c, conv) == 1);
  CHECK(sign_factor(1, v, Side::plus, c, conv) == -1);
  CHECK(sign_factor(1, v, Side::minus, c, conv) == 1);
  CHECK_THROWS_AS(WConvention({{1, 0}, {0, 1}}, {{1, 0}, {0, 0}}), Error);
}
