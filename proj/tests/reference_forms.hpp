// Independent reference implementations used as test oracles. These are
// deliberately written with different algorithms than the library:
// - invariant factors via the minimal-entry pivoting method (values only),
// - Hermite form via plain elementary row operations (Euclid by repeated
//   subtraction of multiples, no 2x2 unimodular combines),
// - the Newton-polygon enumeration for GL_n as a lattice-vertex DFS.
#pragma once

#include "bgmu/lattice.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace bgmu_test {

using bgmu::Int;
using bgmu::IntMatrix;
using bgmu::IntVec;
using bgmu::Rat;

// Invariant factors (nonzero diagonal of the Smith form, in order) by the
// classic minimal-entry method: move the smallest nonzero entry of the
// trailing block to the pivot, reduce the pivot row and column by division
// with remainder, restart whenever a remainder appears, and fold a
// non-divisible entry's row into the pivot row before finishing a pivot.
inline std::vector<Int> reference_invariant_factors(IntMatrix m) {
  std::vector<Int> factors;
  const std::size_t nmin = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < nmin; ++t) {
    for (;;) {
      // minimal |entry| in the trailing block
      std::size_t bi = m.rows, bj = m.cols;
      for (std::size_t i = t; i < m.rows; ++i)
        for (std::size_t j = t; j < m.cols; ++j) {
          if (m.at(i, j) == 0) continue;
          if (bi == m.rows || abs(m.at(i, j)) < abs(m.at(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m.rows) goto done;  // trailing block is zero
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(t, c), m.at(bi, c));
      for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, bj));
      bool restart = false;
      for (std::size_t i = t + 1; i < m.rows && !restart; ++i) {
        Int q = m.at(i, t) / m.at(t, t);  // truncated: remainder has |r| < |pivot|
        if (q != 0)
          for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(t, c);
        if (m.at(i, t) != 0) restart = true;
      }
      if (restart) continue;
      for (std::size_t j = t + 1; j < m.cols && !restart; ++j) {
        Int q = m.at(t, j) / m.at(t, t);
        if (q != 0)
          for (std::size_t r = 0; r < m.rows; ++r) m.at(r, j) -= q * m.at(r, t);
        if (m.at(t, j) != 0) restart = true;
      }
      if (restart) continue;
      // pivot row/column clear; enforce divisibility of the trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols && divides; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (std::size_t c = 0; c < m.cols; ++c) m.at(t, c) += m.at(i, c);
            divides = false;
          }
      if (divides) break;
    }
    if (m.at(t, t) < 0)
      for (std::size_t c = 0; c < m.cols; ++c) m.at(t, c) = -m.at(t, c);
    factors.push_back(m.at(t, t));
  }
done:
  while (!factors.empty() && factors.back() == 0) factors.pop_back();
  return factors;
}

// Canonical Hermite form of the row lattice of m: pivots positive, entries
// above a pivot reduced into [0, pivot), zero rows last. Pure elementary row
// operations: Euclid on pairs of rows by repeated subtraction of multiples.
inline IntMatrix reference_hermite(IntMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    // Euclid: shrink entries in column c below row r until one survives
    for (;;) {
      std::size_t nonzero = m.rows;
      std::size_t count = 0;
      Int best;  // minimal |entry|
      std::size_t besti = m.rows;
      for (std::size_t i = r; i < m.rows; ++i)
        if (m.at(i, c) != 0) {
          ++count;
          nonzero = i;
          if (besti == m.rows || abs(m.at(i, c)) < abs(best)) {
            best = m.at(i, c);
            besti = i;
          }
        }
      if (count == 0) {
        nonzero = m.rows;
        break;
      }
      if (count == 1) {
        if (nonzero != r)
          for (std::size_t j = 0; j < m.cols; ++j)
            std::swap(m.at(r, j), m.at(nonzero, j));
        break;
      }
      for (std::size_t i = r; i < m.rows; ++i) {
        if (i == besti || m.at(i, c) == 0) continue;
        Int q = m.at(i, c) / m.at(besti, c);
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(besti, j);
      }
    }
    if (m.at(r, c) == 0) continue;
    if (m.at(r, c) < 0)
      for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = bgmu::floor_div(m.at(i, c), m.at(r, c));
      if (q != 0)
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(r, j);
    }
    ++r;
  }
  return m;
}

// All concave Newton polygons for GL_n from (0, 0) to (n, total) with
// integral breakpoints, lying weakly below the bound `hi` of partial sums
// (hi[n-1] == total). Returns the sorted list of partial-sum vectors.
inline std::vector<std::vector<Rat>> gl_polygon_oracle(int n,
                                                       const std::vector<Rat>& hi,
                                                       const Int& total) {
  std::vector<std::vector<Rat>> out;
  std::vector<std::pair<int, Int>> vertices{{0, Int(0)}};
  std::function<void(std::optional<Rat>)> dfs = [&](std::optional<Rat> last_slope) {
    auto [a, ya] = vertices.back();
    if (a == n) {
      if (ya != total) return;
      std::vector<Rat> psums;
      for (std::size_t s = 1; s < vertices.size(); ++s) {
        auto [x0, y0] = vertices[s - 1];
        auto [x1, y1] = vertices[s];
        Rat slope = Rat(y1 - y0, x1 - x0);
        for (int j = x0 + 1; j <= x1; ++j)
          psums.push_back(Rat(y0) + slope * Rat(j - x0));
      }
      out.push_back(std::move(psums));
      return;
    }
    // choose the next lattice vertex (b, yb), slope strictly below last_slope
    for (int b = a + 1; b <= n; ++b) {
      // yb bounded above by both the slope condition and the hi bound
      Int yb_hi = bgmu::rat_floor(Rat(hi[static_cast<std::size_t>(b - 1)]));
      if (last_slope) {
        Rat cap = Rat(ya) + *last_slope * Rat(b - a);
        Int slope_cap = bgmu::rat_ceil(cap) - 1;  // strict: yb < cap
        if (Rat(bgmu::rat_floor(cap)) != cap) slope_cap = bgmu::rat_floor(cap);
        if (slope_cap < yb_hi) yb_hi = slope_cap;
      }
      // keep segments below hi at every intermediate integer point
      Int lo = total - Int(1024);  // generous finite floor; sets are tiny
      for (Int yb = yb_hi; yb >= lo; --yb) {
        Rat slope = Rat(yb - ya, b - a);
        bool ok = true;
        for (int j = a + 1; j < b && ok; ++j)
          if (Rat(ya) + slope * Rat(j - a) > hi[static_cast<std::size_t>(j - 1)])
            ok = false;
        if (!ok) continue;
        // prune: the concave continuation cannot climb back up to `total`
        if (b < n && Rat(yb) + slope * Rat(n - b) < Rat(total)) break;
        if (b == n && yb != total) continue;
        vertices.push_back({b, yb});
        dfs(slope);
        vertices.pop_back();
      }
    }
  };
  dfs(std::nullopt);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bgmu_test
