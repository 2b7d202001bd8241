#include "bgmu/lattice.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace bgmu {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw internal_error("floor_div by zero");
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int rat_floor(const Rat& r) {
  return floor_div(numerator(r), denominator(r));
}

Int rat_ceil(const Rat& r) {
  return -floor_div(-numerator(r), denominator(r));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  if (v.size() != cols) throw internal_error("IntMatrix::apply size mismatch");
  IntVec out(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[i] += at(i, j) * v[j];
  return out;
}

QVec IntMatrix::apply(const QVec& v) const {
  if (v.size() != cols) throw internal_error("IntMatrix::apply size mismatch");
  QVec out(rows, Rat(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[i] += Rat(at(i, j)) * v[j];
  return out;
}

IntMatrix IntMatrix::multiply(const IntMatrix& o) const {
  if (cols != o.rows) throw internal_error("IntMatrix::multiply size mismatch");
  IntMatrix out(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j)
        out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw internal_error("determinant of non-square matrix");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

namespace {

// extended gcd: returns (g, s, t) with s*a + t*b == g >= 0
std::tuple<Int, Int, Int> xgcd(Int a, Int b) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    // force evaluation into temporaries: the bignum type uses expression
    // templates, so deferred right-hand sides would see mutated operands
    Int a2 = a - q * b, s2 = s0 - q * s1, t2 = t0 - q * t1;
    a = b;
    b = a2;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  return {a, s0, t0};
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// rows (i,j) <- (p*row_i + q*row_j, r*row_i + s*row_j); caller keeps ps-qr = ±1
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const Int& p,
                  const Int& q, const Int& r, const Int& s) {
  for (std::size_t c = 0; c < m.cols; ++c) {
    Int x = m.at(i, c), y = m.at(j, c);
    m.at(i, c) = p * x + q * y;
    m.at(j, c) = r * x + s * y;
  }
}

void combine_cols(IntMatrix& m, std::size_t i, std::size_t j, const Int& p,
                  const Int& q, const Int& r, const Int& s) {
  for (std::size_t t = 0; t < m.rows; ++t) {
    Int x = m.at(t, i), y = m.at(t, j);
    m.at(t, i) = p * x + q * y;
    m.at(t, j) = r * x + s * y;
  }
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols && r < h.rows; ++c) {
    std::size_t piv = h.rows;
    for (std::size_t i = r; i < h.rows; ++i)
      if (h.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == h.rows) continue;
    if (piv != r) {
      swap_rows(h, r, piv);
      swap_rows(u, r, piv);
    }
    for (std::size_t i = r + 1; i < h.rows; ++i) {
      if (h.at(i, c) == 0) continue;
      auto [g, s, t] = xgcd(h.at(r, c), h.at(i, c));
      Int p = h.at(r, c) / g, q = h.at(i, c) / g;
      combine_rows(h, r, i, s, t, -q, p);
      combine_rows(u, r, i, s, t, -q, p);
    }
    if (h.at(r, c) < 0) {
      for (std::size_t j = 0; j < h.cols; ++j) h.at(r, j) = -h.at(r, j);
      for (std::size_t j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, c), h.at(r, c));
      if (q == 0) continue;
      for (std::size_t j = 0; j < h.cols; ++j) h.at(i, j) -= q * h.at(r, j);
      for (std::size_t j = 0; j < u.cols; ++j) u.at(i, j) -= q * u.at(r, j);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SnfResult smith_normal_form_full(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows);
  IntMatrix v = IntMatrix::identity(m.cols);
  std::size_t nmin = std::min(d.rows, d.cols);

  auto eliminate_at = [&](std::size_t t) {
    // clear row t and column t beyond the pivot, iterating to a fixpoint
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        if (d.at(i, t) % d.at(t, t) == 0) {
          // plain subtraction: leaves the pivot row untouched, so it cannot
          // reintroduce entries (the general 2x2 combine would)
          Int q = d.at(i, t) / d.at(t, t);
          for (std::size_t c = 0; c < d.cols; ++c) d.at(i, c) -= q * d.at(t, c);
          for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(t, c);
        } else {
          auto [g, s, w] = xgcd(d.at(t, t), d.at(i, t));
          Int p = d.at(t, t) / g, q = d.at(i, t) / g;
          combine_rows(d, t, i, s, w, -q, p);
          combine_rows(u, t, i, s, w, -q, p);
        }
        dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        if (d.at(t, j) % d.at(t, t) == 0) {
          Int q = d.at(t, j) / d.at(t, t);
          for (std::size_t r2 = 0; r2 < d.rows; ++r2)
            d.at(r2, j) -= q * d.at(r2, t);
          for (std::size_t r2 = 0; r2 < v.rows; ++r2)
            v.at(r2, j) -= q * v.at(r2, t);
        } else {
          auto [g, s, w] = xgcd(d.at(t, t), d.at(t, j));
          Int p = d.at(t, t) / g, q = d.at(t, j) / g;
          combine_cols(d, t, j, s, w, -q, p);
          combine_cols(v, t, j, s, w, -q, p);
        }
        dirty = true;
      }
    }
  };

  for (std::size_t t = 0; t < nmin; ++t) {
    // move some nonzero entry of the trailing block to (t, t)
    std::size_t pi = d.rows, pj = d.cols;
    for (std::size_t i = t; i < d.rows && pi == d.rows; ++i)
      for (std::size_t j = t; j < d.cols; ++j)
        if (d.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == d.rows) break;
    if (pi != t) {
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
    }
    if (pj != t) {
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);
    }
    eliminate_at(t);
    if (d.at(t, t) < 0) {
      for (std::size_t j = 0; j < d.cols; ++j) d.at(t, j) = -d.at(t, j);
      for (std::size_t j = 0; j < u.cols; ++j) u.at(t, j) = -u.at(t, j);
    }
  }

  // enforce the divisibility chain d1 | d2 | ...
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t t = 0; t + 1 < nmin; ++t) {
      if (d.at(t, t) == 0 || d.at(t + 1, t + 1) % d.at(t, t) == 0) continue;
      // fold d_{t+1} into position t and re-eliminate
      for (std::size_t j = 0; j < d.cols; ++j) d.at(t, j) += d.at(t + 1, j);
      for (std::size_t j = 0; j < u.cols; ++j) u.at(t, j) += u.at(t + 1, j);
      eliminate_at(t);
      if (d.at(t, t) < 0) {
        for (std::size_t j = 0; j < d.cols; ++j) d.at(t, j) = -d.at(t, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(t, j) = -u.at(t, j);
      }
      if (d.at(t + 1, t + 1) < 0) {
        for (std::size_t j = 0; j < d.cols; ++j) d.at(t + 1, j) = -d.at(t + 1, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(t + 1, j) = -u.at(t + 1, j);
      }
      dirty = true;
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

std::vector<Int> smith_normal_form(const IntMatrix& m) {
  SnfResult s = smith_normal_form_full(m);
  std::vector<Int> out;
  for (std::size_t t = 0; t < std::min(m.rows, m.cols); ++t)
    if (s.d.at(t, t) != 0) out.push_back(s.d.at(t, t));
  return out;
}

std::optional<IntVec> lattice_membership(const std::vector<IntVec>& generators,
                                         const IntVec& v) {
  std::size_t n = v.size();
  std::size_t k = generators.size();
  if (k == 0) {
    for (const Int& x : v)
      if (x != 0) return std::nullopt;
    return IntVec{};
  }
  IntMatrix m(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    if (generators[j].size() != n)
      throw std::invalid_argument("lattice_membership: generator size mismatch");
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = generators[j][i];
  }
  SnfResult s = smith_normal_form_full(m);
  IntVec y = s.u.apply(v);
  IntVec z(k);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < std::min(n, k) && s.d.at(i, i) != 0) {
      if (y[i] % s.d.at(i, i) != 0) return std::nullopt;
      z[i] = y[i] / s.d.at(i, i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  IntVec c = s.v.apply(z);
  // exactness guard
  IntVec check(n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) check[i] += c[j] * generators[j][i];
  if (check != v) throw internal_error("lattice_membership verification failed");
  return c;
}

std::optional<QVec> solve_linear(const std::vector<QVec>& rows, const QVec& b,
                                 std::vector<QVec>* kernel) {
  std::size_t r = rows.size();
  if (b.size() != r) throw std::invalid_argument("solve_linear: rhs size mismatch");
  std::size_t c = r == 0 ? 0 : rows[0].size();
  // augmented Gaussian elimination over Q
  std::vector<QVec> a(r, QVec(c + 1, Rat(0)));
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("solve_linear: ragged matrix");
    for (std::size_t j = 0; j < c; ++j) a[i][j] = rows[i][j];
    a[i][c] = b[i];
  }
  std::vector<std::size_t> pivot_of_row;
  std::size_t rr = 0;
  for (std::size_t col = 0; col < c && rr < r; ++col) {
    std::size_t piv = r;
    for (std::size_t i = rr; i < r; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == r) continue;
    std::swap(a[rr], a[piv]);
    Rat inv = a[rr][col];
    for (std::size_t j = col; j <= c; ++j) a[rr][j] /= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == rr || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j <= c; ++j) a[i][j] -= f * a[rr][j];
    }
    pivot_of_row.push_back(col);
    ++rr;
  }
  for (std::size_t i = rr; i < r; ++i)
    if (a[i][c] != 0) return std::nullopt;
  QVec x(c, Rat(0));
  for (std::size_t i = 0; i < rr; ++i) x[pivot_of_row[i]] = a[i][c];
  if (kernel) {
    kernel->clear();
    std::vector<bool> is_pivot(c, false);
    for (std::size_t p : pivot_of_row) is_pivot[p] = true;
    for (std::size_t j = 0; j < c; ++j) {
      if (is_pivot[j]) continue;
      QVec k(c, Rat(0));
      k[j] = 1;
      for (std::size_t i = 0; i < rr; ++i) k[pivot_of_row[i]] = -a[i][j];
      kernel->push_back(std::move(k));
    }
  }
  return x;
}

std::optional<QVec> rational_span_solve(const std::vector<QVec>& generators,
                                        const QVec& v) {
  std::size_t n = v.size();
  std::vector<QVec> rows(n, QVec(generators.size(), Rat(0)));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != n)
      throw std::invalid_argument("rational_span_solve: generator size mismatch");
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = generators[j][i];
  }
  return solve_linear(rows, v);
}

QuotientLattice::QuotientLattice(std::size_t ambient_rank,
                                 const std::vector<IntVec>& relations)
    : n_(ambient_rank) {
  IntMatrix m(relations.size(), n_);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].size() != n_)
      throw std::invalid_argument("QuotientLattice: relation size mismatch");
    for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = relations[i][j];
  }
  HnfResult h = hermite_normal_form(m);
  for (std::size_t i = 0; i < h.h.rows; ++i) {
    std::size_t p = n_;
    for (std::size_t j = 0; j < n_; ++j)
      if (h.h.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p == n_) continue;  // zero row
    IntVec row(n_);
    for (std::size_t j = 0; j < n_; ++j) row[j] = h.h.at(i, j);
    rows_.push_back(std::move(row));
    pivot_col_.push_back(p);
  }
  free_rank_ = n_ - rows_.size();
  for (const Int& d : smith_normal_form(m))
    if (d != 1) torsion_.push_back(d);
  for (const Int& d : torsion_) exponent_ = d;  // chain: last one is the lcm
}

IntVec QuotientLattice::reduce(const IntVec& x) const {
  if (x.size() != n_) throw std::invalid_argument("QuotientLattice::reduce size mismatch");
  IntVec v = x;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t p = pivot_col_[i];
    Int q = floor_div(v[p], rows_[i][p]);
    if (q == 0) continue;
    for (std::size_t j = p; j < n_; ++j) v[j] -= q * rows_[i][j];
  }
  return v;
}

}  // namespace bgmu
