#include "bgmu/catalog.hpp"

#include <algorithm>

namespace bgmu {

namespace {

// covectors with <omega_i, coroot_j> = delta_ij, free coordinates zero
std::vector<QVec> lifts_from_coroots(const std::vector<IntVec>& coroots,
                                     std::size_t rank) {
  std::vector<QVec> lifts;
  for (std::size_t i = 0; i < coroots.size(); ++i) {
    std::vector<QVec> rows;
    QVec rhs;
    for (std::size_t j = 0; j < coroots.size(); ++j) {
      QVec row(rank);
      for (std::size_t t = 0; t < rank; ++t) row[t] = coroots[j][t];
      rows.push_back(std::move(row));
      rhs.push_back(Rat(i == j ? 1 : 0));
    }
    auto sol = solve_linear(rows, rhs);
    if (!sol) throw internal_error("catalog: no fundamental weight lift");
    lifts.push_back(*sol);
  }
  return lifts;
}

// type A_{n-1} data on Z^n: roots e_i - e_{i+1} (covectors), same coroots,
// partial-sum weight lifts
void gl_data(int n, std::vector<IntVec>& roots, std::vector<IntVec>& coroots,
             std::vector<QVec>& lifts) {
  for (int i = 0; i + 1 < n; ++i) {
    IntVec a(n), av(n);
    a[i] = 1;
    a[i + 1] = -1;
    av[i] = 1;
    av[i + 1] = -1;
    roots.push_back(a);
    coroots.push_back(av);
    QVec w(n, Rat(0));
    for (int t = 0; t <= i; ++t) w[t] = 1;
    lifts.push_back(std::move(w));
  }
}

IntMatrix cartan_matrix(const std::vector<IntVec>& roots,
                        const std::vector<IntVec>& coroots) {
  std::size_t k = roots.size();
  IntMatrix c(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < roots[i].size(); ++t)
        c.at(i, j) += roots[i][t] * coroots[j][t];
  return c;
}

}  // namespace

RootDatum build_group(const GroupSpec& spec) {
  const std::string& f = spec.family;
  int n = spec.n;
  std::vector<IntVec> roots, coroots;
  std::vector<QVec> lifts;
  std::vector<IntMatrix> galois;

  if (f == "GL") {
    if (n < 1) throw std::invalid_argument("GL_n needs n >= 1");
    gl_data(n, roots, coroots, lifts);
    return RootDatum("GL" + std::to_string(n), n, roots, coroots, lifts, galois);
  }
  if (f == "U") {
    if (n < 2) throw std::invalid_argument("U(n) needs n >= 2");
    gl_data(n, roots, coroots, lifts);
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i) a.at(i, n - 1 - i) = -1;  // nu -> -reverse(nu)
    galois.push_back(std::move(a));
    return RootDatum("U" + std::to_string(n), n, roots, coroots, lifts, galois);
  }
  if (f == "SL") {
    if (n < 2) throw std::invalid_argument("SL_n needs n >= 2");
    int k = n - 1;
    // coroot-basis coordinates: coroots are the standard basis
    for (int i = 0; i < k; ++i) {
      IntVec av(k);
      av[i] = 1;
      coroots.push_back(av);
      IntVec a(k);
      a[i] = 2;
      if (i > 0) a[i - 1] = -1;
      if (i + 1 < k) a[i + 1] = -1;
      roots.push_back(a);
    }
    lifts = lifts_from_coroots(coroots, k);
    return RootDatum("SL" + std::to_string(n), k, roots, coroots, lifts, galois);
  }
  if (f == "PGL") {
    if (n < 2) throw std::invalid_argument("PGL_n needs n >= 2");
    int k = n - 1;
    // coweight-basis coordinates: roots are the dual standard basis
    for (int i = 0; i < k; ++i) {
      IntVec a(k);
      a[i] = 1;
      roots.push_back(a);
      IntVec av(k);
      av[i] = 2;
      if (i > 0) av[i - 1] = -1;
      if (i + 1 < k) av[i + 1] = -1;
      coroots.push_back(av);
    }
    lifts = lifts_from_coroots(coroots, k);
    return RootDatum("PGL" + std::to_string(n), k, roots, coroots, lifts, galois);
  }
  if (f == "Sp") {
    if (n < 1) throw std::invalid_argument("Sp_{2n} needs n >= 1");
    for (int i = 0; i + 1 < n; ++i) {
      IntVec a(n), av(n);
      a[i] = 1;
      a[i + 1] = -1;
      av[i] = 1;
      av[i + 1] = -1;
      roots.push_back(a);
      coroots.push_back(av);
    }
    IntVec a(n), av(n);
    a[n - 1] = 2;  // long root 2 e_n
    av[n - 1] = 1;
    roots.push_back(a);
    coroots.push_back(av);
    lifts = lifts_from_coroots(coroots, n);
    return RootDatum("Sp" + std::to_string(2 * n), n, roots, coroots, lifts, galois);
  }
  if (f == "SO_odd") {
    if (n < 1) throw std::invalid_argument("SO_{2n+1} needs n >= 1");
    for (int i = 0; i + 1 < n; ++i) {
      IntVec a(n), av(n);
      a[i] = 1;
      a[i + 1] = -1;
      av[i] = 1;
      av[i + 1] = -1;
      roots.push_back(a);
      coroots.push_back(av);
    }
    IntVec a(n), av(n);
    a[n - 1] = 1;  // short root e_n, coroot 2 e_n
    av[n - 1] = 2;
    roots.push_back(a);
    coroots.push_back(av);
    lifts = lifts_from_coroots(coroots, n);
    return RootDatum("SO" + std::to_string(2 * n + 1), n, roots, coroots, lifts,
                     galois);
  }
  throw std::invalid_argument("unknown group family: " + f);
}

AdjointQuotient adjoint_quotient(const RootDatum& rd) {
  std::size_t k = rd.num_simple();
  std::size_t n = rd.rank();
  IntMatrix proj(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < n; ++t) proj.at(i, t) = rd.simple_roots()[i][t];
  IntMatrix cartan = cartan_matrix(rd.simple_roots(), rd.simple_coroots());
  std::vector<IntVec> roots, coroots;
  for (std::size_t i = 0; i < k; ++i) {
    IntVec a(k);
    a[i] = 1;
    roots.push_back(a);
    IntVec av(k);
    for (std::size_t t = 0; t < k; ++t) av[t] = cartan.at(t, i);
    coroots.push_back(av);
  }
  std::vector<QVec> lifts = lifts_from_coroots(coroots, k);
  // induced Galois: the diagram permutation in coweight coordinates
  std::vector<IntMatrix> galois;
  for (const IntMatrix& g : rd.galois_generators()) {
    std::vector<int> perm(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
      IntVec im = g.apply(rd.simple_coroots()[i]);
      for (std::size_t j = 0; j < k; ++j)
        if (im == rd.simple_coroots()[j]) {
          perm[i] = static_cast<int>(j);
          break;
        }
      if (perm[i] < 0) throw internal_error("adjoint_quotient: broken Galois action");
    }
    IntMatrix b(k, k);
    for (std::size_t j = 0; j < k; ++j) b.at(perm[j], j) = 1;
    galois.push_back(std::move(b));
  }
  RootDatum datum(rd.label() + ":ad", k, roots, coroots, lifts, galois);
  return {std::move(datum), std::move(proj)};
}

}  // namespace bgmu
