// Sigma-conjugacy classes as (centralizer Levi, Kottwitz point kappa_M),
// with the Kottwitz set B(G, mu, b), its partial order, joins, the minimal
// class b(lambda) above a cocharacter and the dual minimal cocharacter.
#pragma once

#include "bgmu/root_datum.hpp"

#include <optional>
#include <vector>

namespace bgmu {

/// A sigma-conjugacy class: the Newton point's centralizer Levi together
/// with kappa in pi1(M)_Gamma. The Newton point is recovered exactly as
/// av_levi(kappa lift, levi) and is strictly regular off the Levi.
struct SigmaConjClass {
  LeviSubset levi;
  Pi1Element kappa;  // kappa.levi == levi

  bool operator==(const SigmaConjClass&) const = default;
  auto operator<=>(const SigmaConjClass&) const = default;
};

CocharQ newton_point(const RootDatum& rd, const SigmaConjClass& c);
Pi1Element kappa_G(const RootDatum& rd, const SigmaConjClass& c);

/// Partial order: equal kappa_G and Newton points comparable in the
/// dominance (coroot) order.
bool leq(const RootDatum& rd, const SigmaConjClass& a, const SigmaConjClass& b);

bool is_basic(const RootDatum& rd, const SigmaConjClass& c);

/// For basic c: does c admit a reduction to the standard Levi m, i.e. an
/// integral kappa_m pushing forward to kappa_G(c) whose m-basic Newton point
/// equals the Newton point of c?
bool has_reduction_to_levi(const RootDatum& rd, const SigmaConjClass& c,
                           const LeviSubset& m);

/// Basic and with no reduction to any proper Galois-stable standard Levi.
bool is_superbasic(const RootDatum& rd, const SigmaConjClass& c);

/// Minimal Galois-stable standard Levi admitting a reduction of the basic
/// class c; unique, and the reduction to it is superbasic there.
LeviSubset superbasic_reduction_levi(const RootDatum& rd, const SigmaConjClass& c);

/// Class of a basic element given by a kappa lift (Levi = everything).
SigmaConjClass basic_class(const RootDatum& rd, const IntVec& kappa_lift);

struct KottwitzSet {
  IntVec mu;            // dominant integral cocharacter
  Pi1Element b_kappa;   // kappa of the basic reference class b
  CocharQ nu_b;         // Newton point of b (central)
  CocharQ delta;        // nu_b + (-mu)^{Galois-average, dominant}
  std::vector<SigmaConjClass> elements;  // sorted: Newton point lex, then kappa
  std::vector<std::vector<bool>> leq_matrix;  // leq_matrix[i][j] iff e_i <= e_j
};

/// B(G, mu, b) = { [b'] : kappa_G(b') = kappa_G(b) - mu^sharp, nu_{b'} <= delta }.
/// mu must be dominant. A nonempty set contains exactly one basic element,
/// and it is the minimum.
KottwitzSet enumerate_kottwitz(const RootDatum& rd, const IntVec& mu,
                               const IntVec& b_kappa_lift);

/// All classes with kappa_G = class of kappa_lift whose fundamental-weight
/// pairings (at Galois-orbit representatives) are bounded by hi. Building
/// block for the enumeration, joins and b(lambda); the lower pairing bound is
/// the basic class of the same kappa.
std::vector<SigmaConjClass> classes_in_weight_box(const RootDatum& rd,
                                                  const IntVec& kappa_lift,
                                                  const std::vector<Rat>& hi);

/// Least upper bound of a and b (which must share kappa_G) in the partial
/// order on classes.
SigmaConjClass join(const RootDatum& rd, const SigmaConjClass& a,
                    const SigmaConjClass& b);

/// Minimal class with kappa_G = lambda^sharp dominating galois_average(w0 lambda).
SigmaConjClass b_of_lambda(const RootDatum& rd, const IntVec& lambda);

/// A cocharacter lambda with b_of_lambda(lambda) == c minimizing <rho, lambda>.
IntVec minimal_lambda(const RootDatum& rd, const SigmaConjClass& c);

/// Translation induced by passing to the inner form of the basic class b0:
/// kappa is shifted by -kappa(b0) and the Newton point by the central
/// -nu_{b0}. Throws std::invalid_argument when the translated class is not
/// representable inside this (quasi-split) datum.
SigmaConjClass inner_twist_translate(const RootDatum& rd, const SigmaConjClass& c,
                                     const Pi1Element& b0_kappa);

}  // namespace bgmu
