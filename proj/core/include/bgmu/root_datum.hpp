// Based root data with a finite Galois action on the cocharacter lattice:
// pairings, Weyl combinatorics, dominance (coroot) order, Levi projections
// and the Galois-coinvariant fundamental group pi1(M)_Gamma.
#pragma once

#include "bgmu/lattice.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bgmu {

/// Rational cocharacter (a point of X_*(T) tensor Q in coordinates).
using CocharQ = QVec;

/// Standard Levi: a sorted set of simple-root indices.
struct LeviSubset {
  std::vector<int> indices;  // sorted, unique

  bool contains(int i) const;
  bool subset_of(const LeviSubset& other) const;
  bool operator==(const LeviSubset&) const = default;
  auto operator<=>(const LeviSubset&) const = default;
};

/// Element of pi1(M)_Gamma = X_*(T) / (Z Phi_M^vee + (gamma - 1) X_*(T)),
/// stored via its canonical residue; `coords` is itself a lift.
struct Pi1Element {
  LeviSubset levi;
  IntVec coords;

  bool operator==(const Pi1Element&) const = default;
  auto operator<=>(const Pi1Element&) const = default;
};

/// A Weyl word: simple reflection indices, applied left to right,
/// i.e. refl[0] acts first.
struct WeylWord {
  std::vector<int> refl;
  std::size_t length() const { return refl.size(); }
};

class RootDatum {
 public:
  /// simple_roots: integer covectors; simple_coroots: integer vectors;
  /// fundamental_weight_lifts: rational covectors with <w_i, a_j^vee> = d_ij;
  /// galois_generators: lattice automorphisms permuting the simple roots and
  /// coroots by a common permutation. Throws std::invalid_argument on any
  /// violated structural invariant.
  RootDatum(std::string label, std::size_t rank,
            std::vector<IntVec> simple_roots, std::vector<IntVec> simple_coroots,
            std::vector<QVec> fundamental_weight_lifts,
            std::vector<IntMatrix> galois_generators);

  const std::string& label() const { return label_; }
  std::size_t rank() const { return rank_; }
  std::size_t num_simple() const { return simple_roots_.size(); }
  const std::vector<IntVec>& simple_roots() const { return simple_roots_; }
  const std::vector<IntVec>& simple_coroots() const { return simple_coroots_; }
  const std::vector<QVec>& weight_lifts() const { return weight_lifts_; }
  const std::vector<IntMatrix>& galois_generators() const { return galois_gens_; }
  std::size_t galois_order() const { return galois_group_.size(); }
  bool is_split() const { return galois_group_.size() == 1; }

  /// All roots as rational covectors (Weyl orbit closure of the simple ones).
  const std::vector<QVec>& all_roots() const { return all_roots_; }
  /// Half the sum of the positive roots, as a rational covector.
  const QVec& rho() const { return rho_; }

  // ----- pairings and Weyl combinatorics -----

  Rat pairing(const QVec& covector, const CocharQ& nu) const;
  Rat pairing_root(int i, const CocharQ& nu) const;    // <alpha_i, nu>
  Rat pairing_weight(int i, const CocharQ& nu) const;  // <omega_i, nu>

  CocharQ simple_reflection(int i, const CocharQ& nu) const;
  IntVec simple_reflection(int i, const IntVec& nu) const;
  CocharQ apply_word(const WeylWord& w, CocharQ nu) const;
  IntVec apply_word(const WeylWord& w, IntVec nu) const;

  bool is_dominant(const CocharQ& nu) const;
  /// (dominant representative, word w with apply_word(w, nu) dominant)
  std::pair<CocharQ, WeylWord> dominant_representative(const CocharQ& nu) const;

  std::vector<CocharQ> weyl_orbit(const CocharQ& nu) const;
  std::vector<IntVec> weyl_orbit(const IntVec& nu) const;

  const WeylWord& longest_element_word() const { return w0_; }
  CocharQ longest_element_action(const CocharQ& nu) const;
  IntVec longest_element_action(const IntVec& nu) const;

  // ----- Galois -----

  /// Average over the (finite, order-capped) group generated by the Galois
  /// generators; the identity for split data.
  CocharQ galois_average(const CocharQ& nu) const;
  CocharQ galois_average(const IntVec& nu) const;
  bool is_galois_invariant(const CocharQ& nu) const;

  /// Orbits of simple-root indices under the Galois diagram permutations.
  const std::vector<std::vector<int>>& galois_index_orbits() const {
    return index_orbits_;
  }
  bool is_galois_stable(const LeviSubset& m) const;
  /// Every Galois-stable standard Levi subset (unions of index orbits),
  /// sorted by size then lexicographically; includes the empty set and all of it.
  std::vector<LeviSubset> galois_stable_levis() const;
  LeviSubset full_levi() const;
  LeviSubset galois_closure(std::vector<int> indices) const;

  // ----- dominance (coroot) order and Levi projections -----

  /// nu' - nu as a rational combination of the simple coroots, if possible.
  std::optional<QVec> coroot_coefficients(const CocharQ& diff) const;
  /// nu <= nu' iff nu' - nu is a nonnegative rational combination of the
  /// simple coroots. Neither side needs to be dominant.
  bool leq_coroot_order(const CocharQ& nu, const CocharQ& nu_prime) const;

  /// Standard Levi on the simple roots vanishing on nu. The vanishing set
  /// must be Galois-stable (automatic for Galois-invariant nu); errors otherwise.
  LeviSubset centralizer_levi(const CocharQ& nu) const;

  /// The unique Galois-invariant, M-central vector congruent to
  /// galois_average(nu) modulo the rational span of M's simple coroots.
  CocharQ av_levi(const CocharQ& nu, const LeviSubset& m) const;
  CocharQ av_levi(const IntVec& nu, const LeviSubset& m) const;

  // ----- pi1 -----

  const QuotientLattice& quotient_for(const LeviSubset& m) const;
  Pi1Element sharp_levi(const IntVec& x, const LeviSubset& m) const;
  /// Canonical rational representative of the image in pi1(M)_{Gamma,Q}.
  CocharQ sharp_levi_rational(const CocharQ& nu, const LeviSubset& m) const;
  /// (free rank, torsion invariants) of pi1(M)_Gamma.
  std::pair<std::size_t, std::vector<Int>> pi1_group(const LeviSubset& m) const;
  /// Pushforward pi1(M)_Gamma -> pi1(M')_Gamma for m subset m'.
  Pi1Element push_pi1(const Pi1Element& x, const LeviSubset& m_bigger) const;

  /// Integer lattice Z Phi_M^vee + (gamma - 1) X_*(T) as a generator list.
  std::vector<IntVec> relation_generators(const LeviSubset& m) const;

  /// The datum of the standard Levi M: same lattice and Galois action,
  /// simple roots/coroots and weight lifts restricted to m.
  RootDatum levi_datum(const LeviSubset& m) const;

  /// Integer cocharacter with prescribed fundamental-weight pairings inside
  /// the coset kappa_lift + (Z Phi^vee + (gamma-1)X). Targets may be
  /// non-integral: lattices with torsion quotients have cosets whose weight
  /// pairings are fractional. Returns a particular solution plus integer
  /// directions spanning the solution set.
  struct WeightFiber {
    IntVec particular;
    std::vector<IntVec> directions;
  };
  std::optional<WeightFiber> cochar_from_weight_pairings(
      const std::vector<Rat>& targets, const IntVec& kappa_lift) const;

  /// Positive generator of the group of weight-i pairings attained on the
  /// relation lattice Z Phi^vee + (gamma-1)X; zero when the group is trivial.
  /// Feasible pairing values for a coset are spaced by exactly this step.
  Rat weight_pairing_step(int i) const;

 private:
  void validate() const;
  void build_galois_closure();
  void build_roots_and_rho();
  void build_w0();

  std::string label_;
  std::size_t rank_;
  std::vector<IntVec> simple_roots_;
  std::vector<IntVec> simple_coroots_;
  std::vector<QVec> weight_lifts_;
  std::vector<IntMatrix> galois_gens_;
  std::vector<IntMatrix> galois_group_;
  std::vector<std::vector<int>> gen_perms_;  // diagram permutation per generator
  std::vector<std::vector<int>> index_orbits_;
  std::vector<QVec> all_roots_;
  QVec rho_;
  WeylWord w0_;

  // Held behind a pointer so the datum stays movable.
  mutable std::unique_ptr<std::mutex> cache_mutex_ =
      std::make_unique<std::mutex>();
  mutable std::map<std::vector<int>, std::unique_ptr<QuotientLattice>> quotient_cache_;
};

}  // namespace bgmu
