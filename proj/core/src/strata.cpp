#include "bgmu/strata.hpp"

#include <algorithm>
#include <set>

namespace bgmu {

namespace {

QVec to_q(const IntVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

IntVec negate(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace

bool is_minuscule(const RootDatum& rd, const IntVec& mu) {
  QVec q = to_q(mu);
  for (const QVec& alpha : rd.all_roots()) {
    Rat p = rd.pairing(alpha, q);
    if (p < -1 || p > 1) return false;
  }
  return true;
}

const CocharQ& delta(const KottwitzSet& set) { return set.delta; }

std::optional<LeviSubset> hn_witness_levi(const RootDatum& rd,
                                          const KottwitzSet& set,
                                          const SigmaConjClass& c) {
  CocharQ nu = newton_point(rd, c);
  CocharQ diff(rd.rank());
  for (std::size_t t = 0; t < rd.rank(); ++t) diff[t] = set.delta[t] - nu[t];
  auto coeffs = rd.coroot_coefficients(diff);
  if (!coeffs)
    throw std::invalid_argument("stratum is not below delta of the given set");
  // the minimal witness must contain both the support of delta - nu and the
  // centralizer Levi, and be Galois-stable; that closure is the witness
  std::vector<int> seed = rd.centralizer_levi(nu).indices;
  for (std::size_t i = 0; i < coeffs->size(); ++i)
    if ((*coeffs)[i] != 0) seed.push_back(static_cast<int>(i));
  LeviSubset m = rd.galois_closure(seed);
  if (m == rd.full_levi()) return std::nullopt;
  return m;
}

bool is_hn_decomposable(const RootDatum& rd, const KottwitzSet& set,
                        const SigmaConjClass& c) {
  return hn_witness_levi(rd, set, c).has_value();
}

SigmaConjClass max_hn_indecomposable(const RootDatum& rd, const KottwitzSet& set) {
  std::optional<SigmaConjClass> acc;
  for (const SigmaConjClass& c : set.elements) {
    if (is_hn_decomposable(rd, set, c)) continue;
    acc = acc ? join(rd, *acc, c) : c;
  }
  if (!acc) throw internal_error("Kottwitz set without HN-indecomposable strata");
  return *acc;
}

bool is_fully_hn_decomposable(const RootDatum& rd, const KottwitzSet& set) {
  for (const SigmaConjClass& c : set.elements)
    if (!is_hn_decomposable(rd, set, c) && !is_basic(rd, c)) return false;
  return true;
}

bool wa_meets_stratum(const RootDatum& rd, const KottwitzSet& set,
                      const SigmaConjClass& c) {
  if (!is_minuscule(rd, set.mu))
    throw std::invalid_argument(
        "wa_meets_stratum: hypothesis not met (mu is not minuscule)");
  return !is_hn_decomposable(rd, set, c);
}

ClosurePoset closure_poset(const RootDatum& rd, const KottwitzSet& set) {
  (void)rd;
  std::size_t n = set.elements.size();
  ClosurePoset out;
  out.upsets.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (set.leq_matrix[i][j]) out.upsets[i].push_back(j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !set.leq_matrix[i][j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < n && covering; ++k)
        if (k != i && k != j && set.leq_matrix[i][k] && set.leq_matrix[k][j])
          covering = false;
      if (covering) out.hasse_edges.push_back({i, j});
    }
  return out;
}

std::optional<IntVec> classical_point_witness(const RootDatum& rd,
                                              const KottwitzSet& set,
                                              const SigmaConjClass& c,
                                              bool strict_integral) {
  CocharQ nu = newton_point(rd, c);
  LeviSubset m = rd.centralizer_levi(nu);
  for (const IntVec& wmu : rd.weyl_orbit(set.mu)) {
    CocharQ shifted(rd.rank());
    for (std::size_t t = 0; t < rd.rank(); ++t)
      shifted[t] = set.nu_b[t] - Rat(wmu[t]);
    if (rd.av_levi(shifted, m) != nu) continue;
    if (strict_integral) {
      IntVec lift(rd.rank());
      for (std::size_t t = 0; t < rd.rank(); ++t)
        lift[t] = set.b_kappa.coords[t] - wmu[t];
      if (rd.sharp_levi(lift, m) != c.kappa) continue;
    }
    return wmu;
  }
  return std::nullopt;
}

bool has_classical_point(const RootDatum& rd, const KottwitzSet& set,
                         const SigmaConjClass& c, bool strict_integral) {
  return classical_point_witness(rd, set, c, strict_integral).has_value();
}

bool has_classical_point_closure(const RootDatum& rd, const KottwitzSet& set,
                                 const SigmaConjClass& c) {
  SigmaConjClass b = basic_class(rd, set.b_kappa.coords);
  LeviSubset m = rd.centralizer_levi(newton_point(rd, c));
  return has_reduction_to_levi(rd, b, m);
}

bool cell_classical_points(const RootDatum& rd, const IntVec& lambda,
                           const IntVec& mu) {
  IntVec target = negate(lambda);
  for (const IntVec& wmu : rd.weyl_orbit(mu))
    if (wmu == target) return true;
  return false;
}

std::vector<IntVec> cell_support(const RootDatum& rd, const IntVec& mu) {
  if (mu.size() != rd.rank())
    throw std::invalid_argument("cell_support: mu length must equal the rank");
  CocharQ neg_dom_q = rd.dominant_representative(to_q(negate(mu))).first;
  IntVec neg_dom(rd.rank());
  for (std::size_t t = 0; t < rd.rank(); ++t) neg_dom[t] = numerator(neg_dom_q[t]);
  IntVec w0nd = rd.longest_element_action(neg_dom);
  std::size_t k = rd.num_simple();
  std::vector<Int> bound(k);
  for (std::size_t i = 0; i < k; ++i) {
    CocharQ diff(rd.rank());
    for (std::size_t t = 0; t < rd.rank(); ++t)
      diff[t] = Rat(neg_dom[t] - w0nd[t]);
    Rat b = rd.pairing_weight(static_cast<int>(i), diff);
    bound[i] = rat_floor(b);
    if (bound[i] < 0) bound[i] = 0;
  }
  std::set<IntVec> cells;
  std::vector<Int> cvec(k, Int(0));
  bool done = false;
  while (!done) {
    IntVec lam = neg_dom;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < rd.rank(); ++t)
        lam[t] -= cvec[i] * rd.simple_coroots()[i][t];
    if (rd.is_dominant(to_q(lam)))
      for (const IntVec& w : rd.weyl_orbit(lam)) cells.insert(w);
    if (k == 0) break;
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (cvec[i] < bound[i]) {
        ++cvec[i];
        break;
      }
      cvec[i] = 0;
    }
    if (i == k) done = true;
  }
  return {cells.begin(), cells.end()};
}

std::vector<IntVec> wa_excluded_cells(const RootDatum& rd, const KottwitzSet& set) {
  SigmaConjClass b = basic_class(rd, set.b_kappa.coords);
  LeviSubset m = superbasic_reduction_levi(rd, b);
  LeviSubset full = rd.full_levi();
  std::vector<IntVec> out;
  for (const IntVec& lam : cell_support(rd, set.mu)) {
    CocharQ neg = to_q(negate(lam));
    if (!rd.leq_coroot_order(rd.av_levi(neg, m), rd.av_levi(neg, full)))
      out.push_back(lam);
  }
  return out;
}

std::pair<SigmaConjClass, bool> generic_class_of_cell(const RootDatum& rd,
                                                      const IntVec& lambda) {
  SigmaConjClass b = b_of_lambda(rd, lambda);
  IntVec lam_min = minimal_lambda(rd, b);
  bool minimal =
      rd.pairing(rd.rho(), to_q(lambda)) == rd.pairing(rd.rho(), to_q(lam_min));
  return {b, minimal};
}

Rat dim_cell_cap_schubert(const RootDatum& rd, const IntVec& lambda,
                          const IntVec& mu, bool* exact) {
  if (exact) *exact = is_minuscule(rd, mu);
  CocharQ sum(rd.rank());
  for (std::size_t t = 0; t < rd.rank(); ++t) sum[t] = Rat(lambda[t] + mu[t]);
  return rd.pairing(rd.rho(), sum);
}

Rat dim_s_lambda_eta(const RootDatum& rd, const CocharQ& eta) {
  if (!rd.is_dominant(eta))
    throw std::invalid_argument("dim_s_lambda_eta expects dominant eta");
  Rat p = rd.pairing(rd.rho(), eta);
  return p * 2;
}

bool hn_levi_membership_check(const RootDatum& rd, const KottwitzSet& set,
                              const SigmaConjClass& c, const LeviSubset& m) {
  if (!c.levi.subset_of(m))
    throw std::invalid_argument("hn_levi_membership_check: Levi must contain the centralizer");
  RootDatum rdm = rd.levi_datum(m);
  // mu seen from the Levi: the M-dominant representative of w0(mu)
  IntVec w0mu = rd.longest_element_action(set.mu);
  CocharQ mu_m_q = rdm.dominant_representative(to_q(w0mu)).first;
  IntVec mu_m(rd.rank());
  for (std::size_t t = 0; t < rd.rank(); ++t) mu_m[t] = numerator(mu_m_q[t]);
  // reduction of b to M: kappa_M(b_M) = kappa_M(b'_M) + (w0 mu)^{sharp_M}
  Pi1Element bp_m = rd.push_pi1(c.kappa, m);
  IntVec b_m_lift(rd.rank());
  for (std::size_t t = 0; t < rd.rank(); ++t)
    b_m_lift[t] = bp_m.coords[t] + w0mu[t];
  KottwitzSet inner = enumerate_kottwitz(rdm, mu_m, b_m_lift);
  // the Levi datum reindexes its simple roots 0..|m|-1; translate c into
  // that indexing before comparing
  LeviSubset inner_levi;
  for (int i : c.levi.indices) {
    auto it = std::find(m.indices.begin(), m.indices.end(), i);
    if (it == m.indices.end())
      throw internal_error("hn_levi_membership_check: index remap failed");
    inner_levi.indices.push_back(static_cast<int>(it - m.indices.begin()));
  }
  SigmaConjClass target{inner_levi, rdm.sharp_levi(c.kappa.coords, inner_levi)};
  for (const SigmaConjClass& e : inner.elements)
    if (e == target) return true;
  return false;
}

std::vector<StratumReport> stratum_reports(const RootDatum& rd,
                                           const KottwitzSet& set,
                                           bool strict_integral) {
  bool minuscule = is_minuscule(rd, set.mu);
  ClosurePoset poset = closure_poset(rd, set);
  std::vector<StratumReport> out;
  for (std::size_t i = 0; i < set.elements.size(); ++i) {
    const SigmaConjClass& c = set.elements[i];
    StratumReport r;
    r.cls = c;
    r.newton = newton_point(rd, c);
    r.kappa_g = kappa_G(rd, c).coords;
    r.basic = is_basic(rd, c);
    r.hn_witness = hn_witness_levi(rd, set, c);
    r.hn_decomposable = r.hn_witness.has_value();
    r.classical_witness = classical_point_witness(rd, set, c, false);
    r.classical_point = r.classical_witness.has_value();
    if (strict_integral)
      r.classical_point_strict = has_classical_point(rd, set, c, true);
    if (minuscule) r.wa_meets = !r.hn_decomposable;
    r.closure_upset = poset.upsets[i];
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CellReport> cell_reports(const RootDatum& rd, const KottwitzSet& set) {
  std::set<IntVec> excluded;
  for (const IntVec& lam : wa_excluded_cells(rd, set)) excluded.insert(lam);
  std::vector<CellReport> out;
  for (const IntVec& lam : cell_support(rd, set.mu)) {
    CellReport r;
    r.lambda = lam;
    r.wa_excluded = excluded.count(lam) > 0;
    r.classical_points = cell_classical_points(rd, lam, set.mu);
    auto [cls, minimal] = generic_class_of_cell(rd, lam);
    r.generic_class = cls;
    r.lambda_minimal = minimal;
    bool exact = false;
    r.dim_upper = dim_cell_cap_schubert(rd, lam, set.mu, &exact);
    r.dim_exact = exact;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bgmu
