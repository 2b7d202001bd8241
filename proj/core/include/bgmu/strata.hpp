// Stratum-level predicates on B(G, mu, b): Hodge-Newton decomposability,
// closure posets, classical points, the cells missed by every weakly
// admissible point, and exact dimension formulas.
#pragma once

#include "bgmu/kottwitz.hpp"

#include <optional>
#include <vector>

namespace bgmu {

struct StratumReport {
  SigmaConjClass cls;
  CocharQ newton;
  IntVec kappa_g;
  bool basic = false;
  bool hn_decomposable = false;
  std::optional<LeviSubset> hn_witness;  // minimal witness Levi when decomposable
  bool classical_point = false;
  std::optional<IntVec> classical_witness;  // element of W.mu
  std::optional<bool> classical_point_strict;  // only when strict mode is on
  std::optional<bool> wa_meets;  // absent when mu is not minuscule
  std::vector<std::size_t> closure_upset;  // indices of strata >= this one
};

struct CellReport {
  IntVec lambda;
  bool wa_excluded = false;
  bool classical_points = false;       // iff -lambda lies in W.mu
  SigmaConjClass generic_class;        // b_of_lambda(lambda)
  bool lambda_minimal = false;         // lambda minimizes <rho, .> in its fiber
  Rat dim_upper;                       // <rho, lambda + mu>
  bool dim_exact = false;              // exact iff mu is minuscule
};

/// <alpha, mu> in {-1, 0, 1} for every root alpha.
bool is_minuscule(const RootDatum& rd, const IntVec& mu);

/// delta = nu_b + (-mu)^{diamond, dominant}: the dominance bound of the set.
const CocharQ& delta(const KottwitzSet& set);

/// [b'] is Hodge-Newton decomposable when delta - nu_{b'} lies in the
/// rational coroot span of some proper Galois-stable standard Levi containing
/// the centralizer of nu_{b'}. Returns the minimal witness Levi.
std::optional<LeviSubset> hn_witness_levi(const RootDatum& rd,
                                          const KottwitzSet& set,
                                          const SigmaConjClass& c);
bool is_hn_decomposable(const RootDatum& rd, const KottwitzSet& set,
                        const SigmaConjClass& c);

/// Join of all HN-indecomposable strata of the set.
SigmaConjClass max_hn_indecomposable(const RootDatum& rd, const KottwitzSet& set);

/// Every nonbasic stratum HN-decomposable.
bool is_fully_hn_decomposable(const RootDatum& rd, const KottwitzSet& set);

/// For minuscule mu and the pairing with basic b: the stratum of c meets the
/// weakly admissible locus iff c is HN-indecomposable. Throws
/// std::invalid_argument when mu is not minuscule (hypothesis not met).
bool wa_meets_stratum(const RootDatum& rd, const KottwitzSet& set,
                      const SigmaConjClass& c);

struct ClosurePoset {
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;  // (lower, upper)
  std::vector<std::vector<std::size_t>> upsets;  // closure of stratum i
};
ClosurePoset closure_poset(const RootDatum& rd, const KottwitzSet& set);

/// Classical points: some Weyl translate w.mu satisfies
/// av_M(nu_b - w.mu) = nu_c for M the centralizer Levi of nu_c. In strict
/// mode the match must also hold for the integral Kottwitz points.
std::optional<IntVec> classical_point_witness(const RootDatum& rd,
                                              const KottwitzSet& set,
                                              const SigmaConjClass& c,
                                              bool strict_integral = false);
bool has_classical_point(const RootDatum& rd, const KottwitzSet& set,
                         const SigmaConjClass& c, bool strict_integral = false);

/// Closure variant: the closure of the stratum of basic c contains classical
/// points iff c reduces to the centralizer Levi of its Newton point.
bool has_classical_point_closure(const RootDatum& rd, const KottwitzSet& set,
                                 const SigmaConjClass& c);

/// A cell indexed by lambda carries classical points iff -lambda lies in the
/// Weyl orbit of mu.
bool cell_classical_points(const RootDatum& rd, const IntVec& lambda,
                           const IntVec& mu);

/// All lambda in the cell support (dominant representative <= (-mu)_dom,
/// congruent to -mu modulo the coroot lattice), sorted.
std::vector<IntVec> cell_support(const RootDatum& rd, const IntVec& mu);

/// Cells whose intersection with the weakly admissible locus is empty, for
/// basic b: av_M(-lambda) not below av_G(-lambda), M the superbasic-reduction
/// Levi of b.
std::vector<IntVec> wa_excluded_cells(const RootDatum& rd, const KottwitzSet& set);

/// Generic sigma-conjugacy class of the cell of lambda, with a flag telling
/// whether lambda minimizes <rho, .> among cocharacters with the same
/// generic class.
std::pair<SigmaConjClass, bool> generic_class_of_cell(const RootDatum& rd,
                                                      const IntVec& lambda);

/// <rho, lambda + mu>: the cell-Schubert intersection dimension; exact iff
/// mu is minuscule (`exact` output flag).
Rat dim_cell_cap_schubert(const RootDatum& rd, const IntVec& lambda,
                          const IntVec& mu, bool* exact = nullptr);

/// <2 rho, eta> for dominant eta.
Rat dim_s_lambda_eta(const RootDatum& rd, const CocharQ& eta);

/// Membership check for HN pairs: the reduction of c to the Levi m lies in
/// B(M, (w0 mu)_{M-dominant}, b_M) computed inside the Levi datum.
bool hn_levi_membership_check(const RootDatum& rd, const KottwitzSet& set,
                              const SigmaConjClass& c, const LeviSubset& m);

/// Full per-stratum reports (deterministic order = set.elements order).
std::vector<StratumReport> stratum_reports(const RootDatum& rd,
                                           const KottwitzSet& set,
                                           bool strict_integral = false);
std::vector<CellReport> cell_reports(const RootDatum& rd, const KottwitzSet& set);

}  // namespace bgmu
