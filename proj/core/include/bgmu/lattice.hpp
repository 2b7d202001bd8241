// Exact integer/rational lattice algebra: Hermite and Smith normal forms,
// lattice membership, rational span solving and canonical quotient residues.
// Everything here is exact; no floating point is used anywhere in this library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgmu {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using QVec = std::vector<Rat>;

/// Raised for broken internal invariants (exit code 3 in the CLI), as opposed
/// to std::invalid_argument which signals bad user input (exit code 2).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// floor division / floor & ceil of rationals (cpp_int divides toward zero)
Int floor_div(const Int& a, const Int& b);
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;  // row major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static IntMatrix identity(std::size_t n);
  bool operator==(const IntMatrix&) const = default;

  IntVec apply(const IntVec& v) const;  // matrix * column vector
  QVec apply(const QVec& v) const;
  IntMatrix multiply(const IntMatrix& other) const;
};

Int determinant(const IntMatrix& m);  // fraction-free (Bareiss)

struct HnfResult {
  IntMatrix h;  // row-style Hermite form, u * m == h
  IntMatrix u;  // unimodular
};

/// Row-style Hermite normal form: integer row operations only, pivots
/// positive, entries above a pivot reduced into [0, pivot). The integer row
/// span of m is preserved.
HnfResult hermite_normal_form(const IntMatrix& m);

struct SnfResult {
  IntMatrix d;  // diagonal with divisibility chain, u * m * v == d
  IntMatrix u, v;
};

SnfResult smith_normal_form_full(const IntMatrix& m);

/// Nonzero invariant factors d1 | d2 | ... (including 1s), length = rank.
std::vector<Int> smith_normal_form(const IntMatrix& m);

/// Integer coefficients c with sum c_i * generators_i == v, if any.
std::optional<IntVec> lattice_membership(const std::vector<IntVec>& generators,
                                         const IntVec& v);

/// Rational coefficients c with sum c_i * generators_i == v, if any
/// (free coordinates set to zero).
std::optional<QVec> rational_span_solve(const std::vector<QVec>& generators,
                                        const QVec& v);

/// General exact linear solve a * x == b over the rationals; `a` is given as
/// a list of rows. Returns one solution with free variables zero, plus a
/// basis of the kernel if requested.
std::optional<QVec> solve_linear(const std::vector<QVec>& rows, const QVec& b,
                                 std::vector<QVec>* kernel = nullptr);

/// Z^ambient_rank modulo the integer row span of `relations`, with canonical
/// residues: where a Hermite pivot exists the residue coordinate lies in
/// [0, pivot); free coordinates pass through untouched.
class QuotientLattice {
 public:
  QuotientLattice(std::size_t ambient_rank, const std::vector<IntVec>& relations);

  IntVec reduce(const IntVec& x) const;
  std::size_t ambient_rank() const { return n_; }
  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion_invariants() const { return torsion_; }

  /// Largest torsion invariant (1 if torsion-free); every torsion element is
  /// killed by this exponent.
  const Int& torsion_exponent() const { return exponent_; }

 private:
  std::size_t n_;
  std::vector<IntVec> rows_;            // nonzero HNF rows of the relations
  std::vector<std::size_t> pivot_col_;  // per stored row
  std::size_t free_rank_ = 0;
  std::vector<Int> torsion_;
  Int exponent_ = 1;
};

}  // namespace bgmu
