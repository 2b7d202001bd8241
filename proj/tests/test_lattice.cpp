#include "bgmu/lattice.hpp"
#include "reference_forms.hpp"

#include <doctest.h>

#include <random>

using namespace bgmu;

namespace {

IntMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
  return m;
}

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("floor division and rational rounding") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(rat_floor(Rat(-1, 2)) == -1);
  CHECK(rat_ceil(Rat(-1, 2)) == 0);
  CHECK(rat_ceil(Rat(3)) == 3);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(determinant(from_rows({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
}

TEST_CASE("hermite normal form properties and canonical form") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m = random_matrix(rng);
    HnfResult res = hermite_normal_form(m);
    // u is unimodular and u * m == h
    CHECK(abs(determinant(res.u)) == 1);
    IntMatrix um = res.u.multiply(m);
    CHECK(um == res.h);
    // canonical form agrees with the elementary-operations reference
    IntMatrix ref = bgmu_test::reference_hermite(m);
    CHECK(res.h == ref);
  }
}

TEST_CASE("smith normal form transforms and invariant factors") {
  std::mt19937 rng(911);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m = random_matrix(rng);
    SnfResult res = smith_normal_form_full(m);
    CHECK(abs(determinant(res.u)) == 1);
    CHECK(abs(determinant(res.v)) == 1);
    IntMatrix umv = res.u.multiply(m).multiply(res.v);
    CHECK(umv == res.d);
    // diagonal, nonnegative, divisibility chain
    std::vector<Int> diag;
    for (std::size_t i = 0; i < res.d.rows; ++i)
      for (std::size_t j = 0; j < res.d.cols; ++j) {
        if (i == j) {
          CHECK(res.d.at(i, j) >= 0);
          if (res.d.at(i, j) != 0) diag.push_back(res.d.at(i, j));
        } else {
          CHECK(res.d.at(i, j) == 0);
        }
      }
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      CHECK(diag[i + 1] % diag[i] == 0);
    CHECK(diag == bgmu_test::reference_invariant_factors(m));
    CHECK(diag == smith_normal_form(m));
  }
}

TEST_CASE("SNF regression: chained difference vectors") {
  // Rows (1,-1,0,...), (0,1,-1,...) once drove the eliminate loop into a
  // cycle of pivot-row swaps; make sure they diagonalize.
  IntMatrix m(2, 7);
  m.at(0, 0) = 1;
  m.at(0, 1) = -1;
  m.at(1, 1) = 1;
  m.at(1, 2) = -1;
  CHECK(smith_normal_form(m) == std::vector<Int>{1, 1});
}

TEST_CASE("lattice membership") {
  std::vector<IntVec> gens = {{2, 0, 0}, {0, 3, 0}};
  auto c = lattice_membership(gens, {4, -3, 0});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == -1);
  CHECK(!lattice_membership(gens, {1, 0, 0}).has_value());
  CHECK(!lattice_membership(gens, {0, 0, 1}).has_value());
  CHECK(lattice_membership({}, {0, 0}).has_value());
  CHECK(!lattice_membership({}, {1, 0}).has_value());
}

TEST_CASE("rational linear solve with kernel") {
  // x + y = 3, x - y = 1 --> (2, 1), trivial kernel
  std::vector<QVec> rows = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
  QVec b = {Rat(3), Rat(1)};
  std::vector<QVec> kernel;
  auto x = solve_linear(rows, b, &kernel);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(2));
  CHECK((*x)[1] == Rat(1));
  CHECK(kernel.empty());

  // underdetermined: x + y + z = 1
  rows = {{Rat(1), Rat(1), Rat(1)}};
  b = {Rat(1)};
  x = solve_linear(rows, b, &kernel);
  REQUIRE(x.has_value());
  CHECK(kernel.size() == 2);

  // inconsistent
  rows = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  b = {Rat(1), Rat(3)};
  CHECK(!solve_linear(rows, b).has_value());
}

TEST_CASE("quotient lattice canonical residues") {
  // Z^2 / <(1,-1)> is free of rank 1
  QuotientLattice q1(2, {{1, -1}});
  CHECK(q1.free_rank() == 1);
  CHECK(q1.torsion_invariants().empty());
  CHECK(q1.reduce({3, 2}) == q1.reduce({2, 3}));
  CHECK(q1.reduce({3, 2}) != q1.reduce({2, 2}));

  // Z^2 / <(2,0),(0,4)> has invariants (2,4)
  QuotientLattice q2(2, {{2, 0}, {0, 4}});
  CHECK(q2.free_rank() == 0);
  CHECK(q2.torsion_invariants() == std::vector<Int>{2, 4});
  CHECK(q2.torsion_exponent() == 4);
  CHECK(q2.reduce({5, 7}) == q2.reduce({1, 3}));
  CHECK(q2.reduce({1, 3}) != q2.reduce({0, 3}));

  // canonical residues are idempotent
  QuotientLattice q3(3, {{1, -1, 0}, {0, 2, -2}});
  for (const IntVec& v : std::vector<IntVec>{{5, -1, 2}, {-3, 0, 7}}) {
    IntVec r = q3.reduce(v);
    CHECK(q3.reduce(r) == r);
  }
}
