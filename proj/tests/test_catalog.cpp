#include "bgmu/catalog.hpp"
#include "bgmu/kottwitz.hpp"

#include <doctest.h>

using namespace bgmu;

namespace {

IntVec z(std::vector<int> v) {
  IntVec out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("preset construction and basic shape") {
  for (int n = 2; n <= 6; ++n) {
    RootDatum gl = build_group({"GL", n});
    CHECK(gl.rank() == static_cast<std::size_t>(n));
    CHECK(gl.num_simple() == static_cast<std::size_t>(n - 1));
    CHECK(gl.all_roots().size() == static_cast<std::size_t>(n * (n - 1)));
  }
  CHECK(build_group({"SL", 3}).num_simple() == 2);
  CHECK(build_group({"PGL", 3}).num_simple() == 2);
  CHECK(build_group({"Sp", 2}).all_roots().size() == 8);       // C2
  CHECK(build_group({"SO_odd", 2}).all_roots().size() == 8);   // B2
  CHECK(build_group({"U", 3}).galois_order() == 2);
  CHECK_THROWS_AS(build_group({"E", 8}), std::invalid_argument);
  CHECK_THROWS_AS(build_group({"GL", 0}), std::invalid_argument);
}

TEST_CASE("fundamental groups match the classical values") {
  using P = std::pair<std::size_t, std::vector<Int>>;
  auto pi1 = [](const RootDatum& rd) { return rd.pi1_group(rd.full_levi()); };
  for (int n = 2; n <= 5; ++n) {
    CHECK(pi1(build_group({"GL", n})) == P{1, {}});           // Z
    CHECK(pi1(build_group({"SL", n})) == P{0, {}});           // trivial
    CHECK(pi1(build_group({"PGL", n})) == P{0, {Int(n)}});    // Z/n
  }
  for (int n = 2; n <= 4; ++n) {
    CHECK(pi1(build_group({"Sp", n})) == P{0, {}});           // trivial
    CHECK(pi1(build_group({"SO_odd", n})) == P{0, {Int(2)}}); // Z/2
  }
  CHECK(pi1(build_group({"U", 3})) == P{0, {Int(2)}});        // Z/2
}

TEST_CASE("GL weight lifts are partial-sum covectors") {
  RootDatum gl4 = build_group({"GL", 4});
  for (int i = 0; i < 3; ++i) {
    Rat p = gl4.pairing_weight(i, QVec{Rat(4), Rat(3), Rat(2), Rat(1)});
    Rat expect(0);
    for (int t = 0; t <= i; ++t) expect += Rat(4 - t);
    CHECK(p == expect);
  }
}

TEST_CASE("Sp and SO coroot normalizations") {
  RootDatum sp4 = build_group({"Sp", 2});
  // last simple root is long: alpha = 2 e_n^*, coroot = e_n
  CHECK(sp4.simple_roots().back() == z({0, 2}));
  CHECK(sp4.simple_coroots().back() == z({0, 1}));
  RootDatum so5 = build_group({"SO_odd", 2});
  // last simple root is short: alpha = e_n^*, coroot = 2 e_n
  CHECK(so5.simple_roots().back() == z({0, 1}));
  CHECK(so5.simple_coroots().back() == z({0, 2}));
}

TEST_CASE("unitary datum is the GL datum with the flip action") {
  RootDatum u3 = build_group({"U", 3});
  RootDatum gl3 = build_group({"GL", 3});
  CHECK(u3.simple_roots() == gl3.simple_roots());
  CHECK(u3.simple_coroots() == gl3.simple_coroots());
  REQUIRE(u3.galois_generators().size() == 1);
  // nu -> -reverse(nu)
  CHECK(u3.galois_generators()[0].apply(z({1, 2, 3})) == z({-3, -2, -1}));
}

TEST_CASE("adjoint quotient") {
  RootDatum sl3 = build_group({"SL", 3});
  AdjointQuotient adj = adjoint_quotient(sl3);
  CHECK(adj.datum.rank() == 2);
  CHECK(adj.datum.num_simple() == 2);
  // the adjoint form of SL3 has pi1 = Z/3
  CHECK(adj.datum.pi1_group(adj.datum.full_levi()) ==
        std::make_pair(std::size_t{0}, std::vector<Int>{3}));
  // projection maps each simple coroot to the corresponding Cartan column
  for (std::size_t j = 0; j < 2; ++j) {
    const IntVec& coroot = sl3.simple_coroots()[j];
    QVec coroot_q;
    for (const auto& x : coroot) coroot_q.emplace_back(x);
    IntVec image = adj.projection.apply(coroot);
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(Rat(image[i]) == sl3.pairing_root(static_cast<int>(i), coroot_q));
  }
  // Galois action carries over for quasi-split forms
  AdjointQuotient adj_u = adjoint_quotient(build_group({"U", 3}));
  CHECK(adj_u.datum.galois_order() == 2);
}
