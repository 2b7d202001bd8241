#include "bgmu/kottwitz.hpp"

#include <algorithm>
#include <set>

namespace bgmu {

namespace {

QVec to_q(const IntVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

// Galois index orbits lying inside `levi` but outside `m` (both Galois-stable,
// so the difference is a union of orbits). Returns the minimal index of each.
std::vector<int> off_levi_orbit_reps(const RootDatum& rd, const LeviSubset& levi,
                                     const LeviSubset& m) {
  std::vector<int> reps;
  for (const auto& orbit : rd.galois_index_orbits()) {
    if (!levi.contains(orbit.front()) || m.contains(orbit.front())) continue;
    reps.push_back(orbit.front());
  }
  return reps;
}

struct ReductionWitness {
  bool exists = false;
  IntVec lift;  // kappa_m lift when exists
};

// Reduction of c (viewed inside its centralizer Levi, where it is basic) to
// the Galois-stable standard Levi m contained in c.levi: an integral kappa_m
// pushing to kappa_{c.levi}(c) with av_levi(lift, m) equal to the Newton
// point. Solvable orbit by orbit because the off-m coroot averages pair
// diagonally with the fundamental weight lifts.
ReductionWitness reduction_witness(const RootDatum& rd, const SigmaConjClass& c,
                                   const LeviSubset& m) {
  if (!m.subset_of(c.levi))
    throw std::invalid_argument("reduction target must be contained in the centralizer Levi");
  if (!rd.is_galois_stable(m))
    throw std::invalid_argument("reduction target Levi must be Galois-stable");
  CocharQ nu = rd.av_levi(c.kappa.coords, c.levi);
  CocharQ base = rd.av_levi(c.kappa.coords, m);
  std::size_t n = rd.rank();
  CocharQ want(n);
  for (std::size_t t = 0; t < n; ++t) want[t] = nu[t] - base[t];
  IntVec x = c.kappa.coords;
  CocharQ acc(n, Rat(0));
  for (int j : off_levi_orbit_reps(rd, c.levi, m)) {
    CocharQ v = rd.av_levi(rd.simple_coroots()[j], m);
    Rat f = rd.pairing_weight(j, v);
    if (f <= 0) throw internal_error("nonpositive weight pairing on a coroot average");
    Rat s = rd.pairing_weight(j, want) / f;
    if (denominator(s) != 1) return {};
    Int si = numerator(s);
    for (std::size_t t = 0; t < n; ++t) {
      acc[t] += s * v[t];
      x[t] += si * rd.simple_coroots()[j][t];
    }
  }
  if (acc != want) return {};
  return {true, std::move(x)};
}

bool nu_lex_less(const CocharQ& a, const CocharQ& b) { return a < b; }

}  // namespace

CocharQ newton_point(const RootDatum& rd, const SigmaConjClass& c) {
  return rd.av_levi(c.kappa.coords, c.levi);
}

Pi1Element kappa_G(const RootDatum& rd, const SigmaConjClass& c) {
  return rd.push_pi1(c.kappa, rd.full_levi());
}

bool leq(const RootDatum& rd, const SigmaConjClass& a, const SigmaConjClass& b) {
  if (kappa_G(rd, a) != kappa_G(rd, b)) return false;
  return rd.leq_coroot_order(newton_point(rd, a), newton_point(rd, b));
}

bool is_basic(const RootDatum& rd, const SigmaConjClass& c) {
  return c.levi == rd.full_levi();
}

SigmaConjClass basic_class(const RootDatum& rd, const IntVec& kappa_lift) {
  LeviSubset full = rd.full_levi();
  return {full, rd.sharp_levi(kappa_lift, full)};
}

bool has_reduction_to_levi(const RootDatum& rd, const SigmaConjClass& c,
                           const LeviSubset& m) {
  if (!is_basic(rd, c))
    throw std::invalid_argument("has_reduction_to_levi expects a basic class");
  return reduction_witness(rd, c, m).exists;
}

bool is_superbasic(const RootDatum& rd, const SigmaConjClass& c) {
  if (!is_basic(rd, c)) return false;
  LeviSubset full = rd.full_levi();
  for (const LeviSubset& m : rd.galois_stable_levis()) {
    if (m == full) continue;
    if (reduction_witness(rd, c, m).exists) return false;
  }
  return true;
}

LeviSubset superbasic_reduction_levi(const RootDatum& rd, const SigmaConjClass& c) {
  std::vector<LeviSubset> admitting;
  for (const LeviSubset& m : rd.galois_stable_levis())
    if (m.subset_of(c.levi) && reduction_witness(rd, c, m).exists)
      admitting.push_back(m);
  std::vector<LeviSubset> minimal;
  for (const LeviSubset& m : admitting) {
    bool is_min = true;
    for (const LeviSubset& m2 : admitting)
      if (m2 != m && m2.subset_of(m)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(m);
  }
  if (minimal.size() != 1)
    throw internal_error("superbasic-reduction Levi is not unique");
  return minimal.front();
}

std::vector<SigmaConjClass> classes_in_weight_box(const RootDatum& rd,
                                                  const IntVec& kappa_lift,
                                                  const std::vector<Rat>& hi) {
  if (hi.size() != rd.num_simple())
    throw std::invalid_argument("classes_in_weight_box: one bound per simple root");
  CocharQ nu_basic = rd.av_levi(kappa_lift, rd.full_levi());
  std::vector<std::pair<CocharQ, SigmaConjClass>> found;
  for (const LeviSubset& m : rd.galois_stable_levis()) {
    std::vector<int> reps = off_levi_orbit_reps(rd, rd.full_levi(), m);
    CocharQ base = rd.av_levi(kappa_lift, m);
    std::vector<Int> smin(reps.size()), smax(reps.size());
    bool feasible = true;
    for (std::size_t o = 0; o < reps.size(); ++o) {
      int j = reps[o];
      Rat f = rd.pairing_weight(j, rd.galois_average(rd.simple_coroots()[j]));
      if (f <= 0) throw internal_error("nonpositive diagonal weight pairing");
      Rat c0 = rd.pairing_weight(j, base);
      smin[o] = rat_ceil((rd.pairing_weight(j, nu_basic) - c0) / f);
      smax[o] = rat_floor((hi[j] - c0) / f);
      if (smin[o] > smax[o]) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    // product over the per-orbit integer ranges
    std::vector<Int> s(smin);
    bool done = reps.empty() ? false : true;
    if (reps.empty()) {
      // single candidate: the basic class of kappa_lift
      CocharQ nu = base;
      bool regular = true;
      for (std::size_t i = 0; i < rd.num_simple(); ++i)
        if (!m.contains(static_cast<int>(i)) &&
            rd.pairing_root(static_cast<int>(i), nu) <= 0) {
          regular = false;
          break;
        }
      if (regular) found.push_back({nu, {m, rd.sharp_levi(kappa_lift, m)}});
      continue;
    }
    while (done) {
      IntVec x = kappa_lift;
      for (std::size_t o = 0; o < reps.size(); ++o)
        for (std::size_t t = 0; t < rd.rank(); ++t)
          x[t] += s[o] * rd.simple_coroots()[reps[o]][t];
      CocharQ nu = rd.av_levi(x, m);
      bool regular = true;
      for (std::size_t i = 0; i < rd.num_simple(); ++i)
        if (!m.contains(static_cast<int>(i)) &&
            rd.pairing_root(static_cast<int>(i), nu) <= 0) {
          regular = false;
          break;
        }
      if (regular) found.push_back({std::move(nu), {m, rd.sharp_levi(x, m)}});
      // advance the odometer
      std::size_t o = 0;
      for (; o < reps.size(); ++o) {
        if (s[o] < smax[o]) {
          ++s[o];
          break;
        }
        s[o] = smin[o];
      }
      if (o == reps.size()) done = false;
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return nu_lex_less(a.first, b.first);
    return a.second < b.second;
  });
  std::vector<SigmaConjClass> out;
  for (auto& [nu, cls] : found) {
    if (!out.empty() && out.back() == cls)
      throw internal_error("duplicate class produced by the box enumeration");
    out.push_back(std::move(cls));
  }
  return out;
}

KottwitzSet enumerate_kottwitz(const RootDatum& rd, const IntVec& mu,
                               const IntVec& b_kappa_lift) {
  if (mu.size() != rd.rank() || b_kappa_lift.size() != rd.rank())
    throw std::invalid_argument("enumerate_kottwitz: vector length must equal the rank");
  if (!rd.is_dominant(to_q(mu)))
    throw std::invalid_argument("enumerate_kottwitz: mu must be dominant");
  KottwitzSet set;
  set.mu = mu;
  set.b_kappa = rd.sharp_levi(b_kappa_lift, rd.full_levi());
  set.nu_b = rd.av_levi(b_kappa_lift, rd.full_levi());
  IntVec neg_mu(rd.rank());
  for (std::size_t t = 0; t < rd.rank(); ++t) neg_mu[t] = -mu[t];
  CocharQ neg_dom = rd.dominant_representative(rd.galois_average(neg_mu)).first;
  set.delta.resize(rd.rank());
  for (std::size_t t = 0; t < rd.rank(); ++t) set.delta[t] = set.nu_b[t] + neg_dom[t];

  IntVec k0(rd.rank());
  for (std::size_t t = 0; t < rd.rank(); ++t) k0[t] = b_kappa_lift[t] - mu[t];
  std::vector<Rat> hi(rd.num_simple());
  for (std::size_t i = 0; i < rd.num_simple(); ++i)
    hi[i] = rd.pairing_weight(static_cast<int>(i), set.delta);
  for (const SigmaConjClass& c : classes_in_weight_box(rd, k0, hi))
    if (rd.leq_coroot_order(newton_point(rd, c), set.delta))
      set.elements.push_back(c);

  std::size_t n_basic = 0;
  for (const SigmaConjClass& c : set.elements)
    if (is_basic(rd, c)) ++n_basic;
  if (!set.elements.empty() && n_basic != 1)
    throw internal_error("nonempty Kottwitz set without a unique basic element");

  std::size_t n = set.elements.size();
  set.leq_matrix.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      set.leq_matrix[i][j] = leq(rd, set.elements[i], set.elements[j]);
  return set;
}

SigmaConjClass join(const RootDatum& rd, const SigmaConjClass& a,
                    const SigmaConjClass& b) {
  if (kappa_G(rd, a) != kappa_G(rd, b))
    throw std::invalid_argument("join requires equal kappa_G");
  CocharQ nu1 = newton_point(rd, a), nu2 = newton_point(rd, b);
  const IntVec& k0 = kappa_G(rd, a).coords;
  for (int r = 0; r <= 64; ++r) {
    std::vector<Rat> hi(rd.num_simple());
    for (std::size_t i = 0; i < rd.num_simple(); ++i) {
      Rat m = std::max(rd.pairing_weight(static_cast<int>(i), nu1),
                       rd.pairing_weight(static_cast<int>(i), nu2));
      hi[i] = Rat(rat_ceil(m) + r);
    }
    std::vector<SigmaConjClass> upper;
    for (const SigmaConjClass& c : classes_in_weight_box(rd, k0, hi)) {
      CocharQ nu = newton_point(rd, c);
      if (rd.leq_coroot_order(nu1, nu) && rd.leq_coroot_order(nu2, nu))
        upper.push_back(c);
    }
    if (upper.empty()) continue;
    // once any upper bound is inside the box, so is the join, and it is the
    // minimum of everything found (weight pairings increase along the order)
    for (const SigmaConjClass& c : upper) {
      bool is_min = true;
      for (const SigmaConjClass& d : upper)
        if (!leq(rd, c, d)) {
          is_min = false;
          break;
        }
      if (is_min) return c;
    }
    throw internal_error("join: bounded upper set has no minimum");
  }
  throw internal_error("join: search bound exhausted");
}

SigmaConjClass b_of_lambda(const RootDatum& rd, const IntVec& lambda) {
  if (lambda.size() != rd.rank())
    throw std::invalid_argument("b_of_lambda: lambda length must equal the rank");
  IntVec w0l = rd.longest_element_action(lambda);
  CocharQ lb = rd.galois_average(w0l);
  CocharQ top = rd.dominant_representative(rd.galois_average(lambda)).first;
  std::vector<Rat> hi(rd.num_simple());
  for (std::size_t i = 0; i < rd.num_simple(); ++i)
    hi[i] = rd.pairing_weight(static_cast<int>(i), top);
  std::vector<SigmaConjClass> s;
  for (const SigmaConjClass& c : classes_in_weight_box(rd, lambda, hi))
    if (rd.leq_coroot_order(lb, newton_point(rd, c))) s.push_back(c);
  for (const SigmaConjClass& c : s) {
    bool is_min = true;
    for (const SigmaConjClass& d : s)
      if (!leq(rd, c, d)) {
        is_min = false;
        break;
      }
    if (!is_min) continue;
    // characterization check: kappa_M agrees with the projection of w0(lambda)
    if (rd.sharp_levi(w0l, c.levi) != c.kappa)
      throw internal_error("b_of_lambda: kappa characterization failed");
    return c;
  }
  throw internal_error("b_of_lambda: no minimum above w0(lambda)");
}

IntVec minimal_lambda(const RootDatum& rd, const SigmaConjClass& c) {
  CocharQ nu = newton_point(rd, c);
  CocharQ w0nu = rd.longest_element_action(nu);
  IntVec k0 = kappa_G(rd, c).coords;
  std::size_t k = rd.num_simple();

  // achievable pairings for the coset of k0 sit in p0_i + step_i Z; the
  // ceiling target is the least achievable value above the pairing of w0(nu)
  std::vector<Rat> ceil_targets(k), steps(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rat p0 = rd.pairing_weight(static_cast<int>(i), to_q(k0));
    Rat want = rd.pairing_weight(static_cast<int>(i), w0nu);
    steps[i] = rd.weight_pairing_step(static_cast<int>(i));
    if (steps[i] == 0)
      ceil_targets[i] = p0;
    else
      ceil_targets[i] = p0 + steps[i] * Rat(rat_ceil((want - p0) / steps[i]));
  }

  auto rho_pairing = [&](const IntVec& lam) { return rd.pairing(rd.rho(), to_q(lam)); };

  if (rd.is_split()) {
    // ceiling fast path: pairings are the least achievable values above w0(nu)
    auto fiber = rd.cochar_from_weight_pairings(ceil_targets, k0);
    if (fiber && fiber->directions.empty() &&
        b_of_lambda(rd, fiber->particular) == c)
      return fiber->particular;
  }

  // bounded search: weight-pairing targets one step around the ceiling,
  // construction directions swept over a small coefficient box
  std::optional<IntVec> best;
  Rat best_rho;
  std::vector<std::vector<Rat>> choices(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (steps[i] == 0) {
      choices[i] = {ceil_targets[i]};
    } else {
      choices[i] = {ceil_targets[i] - steps[i], ceil_targets[i],
                    ceil_targets[i] + steps[i]};
    }
  }
  std::vector<std::size_t> idx(k, 0);
  bool done = false;
  while (!done) {
    std::vector<Rat> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = choices[i][idx[i]];
    auto fiber = rd.cochar_from_weight_pairings(t, k0);
    if (fiber) {
      std::size_t nd = std::min<std::size_t>(fiber->directions.size(), 3);
      Int lo = -2, hi_c = 2;
      std::vector<Int> coef(nd, lo);
      bool inner_done = false;
      while (!inner_done) {
        IntVec lam = fiber->particular;
        for (std::size_t d = 0; d < nd; ++d)
          for (std::size_t tt = 0; tt < rd.rank(); ++tt)
            lam[tt] += coef[d] * fiber->directions[d][tt];
        bool match = false;
        try {
          match = b_of_lambda(rd, lam) == c;
        } catch (const internal_error&) {
          match = false;
        }
        if (match) {
          Rat rp = rho_pairing(lam);
          if (!best || rp < best_rho || (rp == best_rho && lam < *best)) {
            best = lam;
            best_rho = rp;
          }
        }
        if (nd == 0) break;
        std::size_t d = 0;
        for (; d < nd; ++d) {
          if (coef[d] < hi_c) {
            ++coef[d];
            break;
          }
          coef[d] = lo;
        }
        if (d == nd) inner_done = true;
      }
    }
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (idx[i] + 1 < choices[i].size()) {
        ++idx[i];
        break;
      }
      idx[i] = 0;
    }
    if (i == k) done = true;
  }
  if (!best) throw internal_error("minimal_lambda: no admissible lambda found");
  return *best;
}

namespace {

// An integral cocharacter z that is central (killed by every simple root),
// has Galois average nu_b0 and pi1(G)_Gamma class b0_kappa. Subtracting such
// a z from a kappa lift shifts every Levi average by exactly nu_b0, which is
// what twisting by the basic class b0 does to Newton points.
std::optional<IntVec> central_integral_representative(const RootDatum& rd,
                                                      const Pi1Element& b0_kappa,
                                                      const CocharQ& nu_b0) {
  std::size_t n = rd.rank(), k = rd.num_simple();
  // integer kernel of the simple-root matrix = the central cocharacter lattice
  IntMatrix a(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rd.simple_roots()[i][j];
  SnfResult snf = smith_normal_form_full(a);
  std::size_t nonzero = 0;
  for (std::size_t t = 0; t < std::min(k, n); ++t)
    if (snf.d.at(t, t) != 0) ++nonzero;
  std::vector<IntVec> basis;
  for (std::size_t j = nonzero; j < n; ++j) {
    IntVec col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = snf.v.at(i, j);
    basis.push_back(std::move(col));
  }
  // search small integer combinations of the central basis
  auto [free_rank, torsion] = rd.pi1_group(rd.full_levi());
  (void)free_rank;
  Int bound = 2;
  for (const Int& t : torsion) bound += t;
  for (const Int& x : b0_kappa.coords) bound += abs(x);
  std::vector<Int> coef(basis.size(), -bound);
  for (;;) {
    IntVec z(n);
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t t = 0; t < n; ++t) z[t] += coef[b] * basis[b][t];
    if (rd.galois_average(z) == nu_b0 &&
        rd.sharp_levi(z, rd.full_levi()) == b0_kappa)
      return z;
    std::size_t b = 0;
    for (; b < basis.size(); ++b) {
      if (coef[b] < bound) {
        ++coef[b];
        break;
      }
      coef[b] = -bound;
    }
    if (b == basis.size()) break;
  }
  return std::nullopt;
}

}  // namespace

SigmaConjClass inner_twist_translate(const RootDatum& rd, const SigmaConjClass& c,
                                     const Pi1Element& b0_kappa) {
  if (b0_kappa.levi != rd.full_levi())
    throw std::invalid_argument("inner_twist_translate: b0 must be basic (full Levi)");
  CocharQ nu_b0 = rd.av_levi(b0_kappa.coords, rd.full_levi());
  std::optional<IntVec> z = central_integral_representative(rd, b0_kappa, nu_b0);
  if (!z)
    throw std::invalid_argument(
        "inner_twist_translate: translated class is not representable in this datum");
  IntVec shifted(rd.rank());
  for (std::size_t t = 0; t < rd.rank(); ++t)
    shifted[t] = c.kappa.coords[t] - (*z)[t];
  SigmaConjClass out{c.levi, rd.sharp_levi(shifted, c.levi)};
  CocharQ nu_c = newton_point(rd, c);
  CocharQ expected(rd.rank());
  for (std::size_t t = 0; t < rd.rank(); ++t) expected[t] = nu_c[t] - nu_b0[t];
  if (newton_point(rd, out) != expected)
    throw internal_error("inner_twist_translate: Newton point shift mismatch");
  return out;
}

}  // namespace bgmu
