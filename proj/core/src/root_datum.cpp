#include "bgmu/root_datum.hpp"

#include <algorithm>
#include <set>

namespace bgmu {

namespace {

QVec to_q(const IntVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

// covector * matrix (precomposition of a covector with a lattice map)
IntVec covector_times(const IntVec& chi, const IntMatrix& a) {
  IntVec out(a.cols);
  for (std::size_t j = 0; j < a.cols; ++j)
    for (std::size_t k = 0; k < a.rows; ++k) out[j] += chi[k] * a.at(k, j);
  return out;
}

constexpr std::size_t kGaloisOrderCap = 10000;
constexpr std::size_t kRootCap = 10000;

}  // namespace

bool LeviSubset::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

bool LeviSubset::subset_of(const LeviSubset& other) const {
  return std::includes(other.indices.begin(), other.indices.end(),
                       indices.begin(), indices.end());
}

RootDatum::RootDatum(std::string label, std::size_t rank,
                     std::vector<IntVec> simple_roots,
                     std::vector<IntVec> simple_coroots,
                     std::vector<QVec> fundamental_weight_lifts,
                     std::vector<IntMatrix> galois_generators)
    : label_(std::move(label)),
      rank_(rank),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)),
      weight_lifts_(std::move(fundamental_weight_lifts)),
      galois_gens_(std::move(galois_generators)) {
  validate();
  build_galois_closure();
  build_roots_and_rho();
  build_w0();
}

void RootDatum::validate() const {
  std::size_t k = simple_roots_.size();
  if (simple_coroots_.size() != k)
    throw std::invalid_argument("root/coroot count mismatch");
  if (weight_lifts_.size() != k)
    throw std::invalid_argument("need one fundamental weight lift per simple root");
  for (std::size_t i = 0; i < k; ++i)
    if (simple_roots_[i].size() != rank_ || simple_coroots_[i].size() != rank_ ||
        weight_lifts_[i].size() != rank_)
      throw std::invalid_argument("root datum entries must have length = rank");
  // Cartan matrix sanity
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Int c = 0;
      for (std::size_t t = 0; t < rank_; ++t)
        c += simple_roots_[i][t] * simple_coroots_[j][t];
      if (i == j && c != 2)
        throw std::invalid_argument("Cartan diagonal entry must be 2");
      if (i != j && c > 0)
        throw std::invalid_argument("Cartan off-diagonal entries must be <= 0");
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rat p = 0;
      for (std::size_t t = 0; t < rank_; ++t)
        p += weight_lifts_[i][t] * Rat(simple_coroots_[j][t]);
      if (p != Rat(i == j ? 1 : 0))
        throw std::invalid_argument("weight lifts must pair to delta_ij with the coroots");
    }
  // simple coroots (and roots) must be linearly independent
  {
    std::vector<QVec> gens;
    for (const auto& c : simple_coroots_) gens.push_back(to_q(c));
    std::vector<QVec> kernel;
    if (!gens.empty()) {
      std::vector<QVec> rows(rank_, QVec(k, Rat(0)));
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < rank_; ++i) rows[i][j] = gens[j][i];
      solve_linear(rows, QVec(rank_, Rat(0)), &kernel);
      if (!kernel.empty())
        throw std::invalid_argument("simple coroots must be linearly independent");
    }
  }
  for (const IntMatrix& a : galois_gens_) {
    if (a.rows != rank_ || a.cols != rank_)
      throw std::invalid_argument("Galois generator must be rank x rank");
    Int det = determinant(a);
    if (det != 1 && det != -1)
      throw std::invalid_argument("Galois generator must be a lattice automorphism");
  }
}

void RootDatum::build_galois_closure() {
  std::size_t k = simple_roots_.size();
  // one diagram permutation per generator
  for (const IntMatrix& a : galois_gens_) {
    std::vector<int> perm(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
      IntVec im = a.apply(simple_coroots_[i]);
      for (std::size_t j = 0; j < k; ++j)
        if (im == simple_coroots_[j]) {
          perm[i] = static_cast<int>(j);
          break;
        }
      if (perm[i] < 0)
        throw std::invalid_argument("Galois generator does not permute the simple coroots");
      // the same permutation must hold on the root side: alpha_{perm(i)} o A == alpha_i
      if (covector_times(simple_roots_[perm[i]], a) != simple_roots_[i])
        throw std::invalid_argument(
            "Galois generator permutes roots and coroots inconsistently");
    }
    gen_perms_.push_back(std::move(perm));
  }
  // finite closure of the generated matrix group
  std::set<std::vector<Int>> seen;
  std::vector<IntMatrix> frontier{IntMatrix::identity(rank_)};
  seen.insert(frontier[0].a);
  galois_group_.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const IntMatrix& g : frontier)
      for (const IntMatrix& a : galois_gens_) {
        IntMatrix p = a.multiply(g);
        if (seen.insert(p.a).second) {
          galois_group_.push_back(p);
          next.push_back(std::move(p));
          if (galois_group_.size() > kGaloisOrderCap)
            throw std::invalid_argument("Galois group order exceeds the supported cap");
        }
      }
    frontier = std::move(next);
  }
  // index orbits under the diagram permutations
  std::vector<int> comp(k);
  for (std::size_t i = 0; i < k; ++i) comp[i] = static_cast<int>(i);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& perm : gen_perms_)
      for (std::size_t i = 0; i < k; ++i) {
        int a = comp[i], b = comp[perm[i]];
        if (a != b) {
          int lo = std::min(a, b);
          for (auto& c : comp)
            if (c == a || c == b) c = lo;
          changed = true;
        }
      }
  }
  std::map<int, std::vector<int>> orbits;
  for (std::size_t i = 0; i < k; ++i) orbits[comp[i]].push_back(static_cast<int>(i));
  for (auto& [rep, members] : orbits) index_orbits_.push_back(members);
}

void RootDatum::build_roots_and_rho() {
  std::set<std::vector<Rat>> seen;
  std::vector<QVec> frontier;
  for (const IntVec& r : simple_roots_) {
    QVec q = to_q(r);
    if (seen.insert(q).second) frontier.push_back(q);
  }
  std::vector<QVec> all(frontier);
  while (!frontier.empty()) {
    std::vector<QVec> next;
    for (const QVec& chi : frontier)
      for (std::size_t i = 0; i < simple_roots_.size(); ++i) {
        // s_i on covectors: chi - <chi, alpha_i^vee> alpha_i
        Rat c = 0;
        for (std::size_t t = 0; t < rank_; ++t)
          c += chi[t] * Rat(simple_coroots_[i][t]);
        QVec im = chi;
        for (std::size_t t = 0; t < rank_; ++t)
          im[t] -= c * Rat(simple_roots_[i][t]);
        if (seen.insert(im).second) {
          all.push_back(im);
          next.push_back(std::move(im));
          if (all.size() > kRootCap)
            throw std::invalid_argument("root system is not of finite type");
        }
      }
    frontier = std::move(next);
  }
  all_roots_ = std::move(all);
  std::sort(all_roots_.begin(), all_roots_.end());
  rho_.assign(rank_, Rat(0));
  std::vector<QVec> root_gens;
  for (const IntVec& r : simple_roots_) root_gens.push_back(to_q(r));
  for (const QVec& chi : all_roots_) {
    auto coeffs = rational_span_solve(root_gens, chi);
    if (!coeffs) throw internal_error("root outside the simple-root span");
    bool pos = true;
    for (const Rat& c : *coeffs)
      if (c < 0) {
        pos = false;
        break;
      }
    if (pos)
      for (std::size_t t = 0; t < rank_; ++t) rho_[t] += chi[t] / 2;
  }
}

void RootDatum::build_w0() {
  if (simple_roots_.empty()) return;
  // a regular dominant rational vector: <alpha_i, r> = 1 for all i
  std::vector<QVec> rows;
  for (const IntVec& a : simple_roots_) rows.push_back(to_q(a));
  auto reg = solve_linear(rows, QVec(rows.size(), Rat(1)));
  if (!reg) throw internal_error("no regular dominant vector");
  CocharQ r = *reg;
  // anti-dominantize, recording the word: the composite is w0
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < simple_roots_.size(); ++i)
      if (pairing_root(static_cast<int>(i), r) > 0) {
        r = simple_reflection(static_cast<int>(i), r);
        w0_.refl.push_back(static_cast<int>(i));
        moved = true;
        break;
      }
  }
}

Rat RootDatum::pairing(const QVec& covector, const CocharQ& nu) const {
  if (covector.size() != nu.size())
    throw std::invalid_argument("pairing: size mismatch");
  Rat out = 0;
  for (std::size_t t = 0; t < covector.size(); ++t) out += covector[t] * nu[t];
  return out;
}

Rat RootDatum::pairing_root(int i, const CocharQ& nu) const {
  Rat out = 0;
  for (std::size_t t = 0; t < rank_; ++t) out += Rat(simple_roots_[i][t]) * nu[t];
  return out;
}

Rat RootDatum::pairing_weight(int i, const CocharQ& nu) const {
  return pairing(weight_lifts_[i], nu);
}

CocharQ RootDatum::simple_reflection(int i, const CocharQ& nu) const {
  Rat c = pairing_root(i, nu);
  CocharQ out = nu;
  for (std::size_t t = 0; t < rank_; ++t) out[t] -= c * Rat(simple_coroots_[i][t]);
  return out;
}

IntVec RootDatum::simple_reflection(int i, const IntVec& nu) const {
  Int c = 0;
  for (std::size_t t = 0; t < rank_; ++t) c += simple_roots_[i][t] * nu[t];
  IntVec out = nu;
  for (std::size_t t = 0; t < rank_; ++t) out[t] -= c * simple_coroots_[i][t];
  return out;
}

CocharQ RootDatum::apply_word(const WeylWord& w, CocharQ nu) const {
  for (int i : w.refl) nu = simple_reflection(i, nu);
  return nu;
}

IntVec RootDatum::apply_word(const WeylWord& w, IntVec nu) const {
  for (int i : w.refl) nu = simple_reflection(i, nu);
  return nu;
}

bool RootDatum::is_dominant(const CocharQ& nu) const {
  for (std::size_t i = 0; i < simple_roots_.size(); ++i)
    if (pairing_root(static_cast<int>(i), nu) < 0) return false;
  return true;
}

std::pair<CocharQ, WeylWord> RootDatum::dominant_representative(const CocharQ& nu) const {
  CocharQ v = nu;
  WeylWord w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < simple_roots_.size(); ++i)
      if (pairing_root(static_cast<int>(i), v) < 0) {
        v = simple_reflection(static_cast<int>(i), v);
        w.refl.push_back(static_cast<int>(i));
        moved = true;
        break;
      }
  }
  return {v, w};
}

std::vector<CocharQ> RootDatum::weyl_orbit(const CocharQ& nu) const {
  std::set<std::vector<Rat>> seen{nu};
  std::vector<CocharQ> frontier{nu};
  while (!frontier.empty()) {
    std::vector<CocharQ> next;
    for (const CocharQ& v : frontier)
      for (std::size_t i = 0; i < simple_roots_.size(); ++i) {
        CocharQ im = simple_reflection(static_cast<int>(i), v);
        if (seen.insert(im).second) next.push_back(std::move(im));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<IntVec> RootDatum::weyl_orbit(const IntVec& nu) const {
  std::vector<IntVec> out;
  for (const CocharQ& v : weyl_orbit(to_q(nu))) {
    IntVec w(rank_);
    for (std::size_t t = 0; t < rank_; ++t) w[t] = numerator(v[t]);
    out.push_back(std::move(w));
  }
  return out;
}

CocharQ RootDatum::longest_element_action(const CocharQ& nu) const {
  return apply_word(w0_, nu);
}

IntVec RootDatum::longest_element_action(const IntVec& nu) const {
  return apply_word(w0_, nu);
}

CocharQ RootDatum::galois_average(const CocharQ& nu) const {
  if (nu.size() != rank_) throw std::invalid_argument("galois_average: size mismatch");
  QVec sum(rank_, Rat(0));
  for (const IntMatrix& g : galois_group_) {
    QVec im = g.apply(nu);
    for (std::size_t t = 0; t < rank_; ++t) sum[t] += im[t];
  }
  Rat order = Rat(static_cast<unsigned long>(galois_group_.size()));
  for (auto& x : sum) x /= order;
  return sum;
}

CocharQ RootDatum::galois_average(const IntVec& nu) const {
  return galois_average(to_q(nu));
}

bool RootDatum::is_galois_invariant(const CocharQ& nu) const {
  for (const IntMatrix& g : galois_group_)
    if (g.apply(nu) != nu) return false;
  return true;
}

bool RootDatum::is_galois_stable(const LeviSubset& m) const {
  for (const auto& perm : gen_perms_)
    for (int i : m.indices)
      if (!m.contains(perm[i])) return false;
  return true;
}

std::vector<LeviSubset> RootDatum::galois_stable_levis() const {
  std::size_t no = index_orbits_.size();
  std::vector<LeviSubset> out;
  for (std::size_t mask = 0; mask < (1u << no); ++mask) {
    LeviSubset m;
    for (std::size_t o = 0; o < no; ++o)
      if (mask & (1u << o))
        m.indices.insert(m.indices.end(), index_orbits_[o].begin(),
                         index_orbits_[o].end());
    std::sort(m.indices.begin(), m.indices.end());
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const LeviSubset& a, const LeviSubset& b) {
    if (a.indices.size() != b.indices.size())
      return a.indices.size() < b.indices.size();
    return a.indices < b.indices;
  });
  return out;
}

LeviSubset RootDatum::full_levi() const {
  LeviSubset m;
  for (std::size_t i = 0; i < simple_roots_.size(); ++i)
    m.indices.push_back(static_cast<int>(i));
  return m;
}

LeviSubset RootDatum::galois_closure(std::vector<int> indices) const {
  std::set<int> s(indices.begin(), indices.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& perm : gen_perms_)
      for (int i : std::vector<int>(s.begin(), s.end()))
        if (s.insert(perm[i]).second) grew = true;
  }
  LeviSubset m;
  m.indices.assign(s.begin(), s.end());
  return m;
}

std::optional<QVec> RootDatum::coroot_coefficients(const CocharQ& diff) const {
  std::vector<QVec> gens;
  for (const IntVec& c : simple_coroots_) gens.push_back(to_q(c));
  if (gens.empty()) {
    for (const Rat& x : diff)
      if (x != 0) return std::nullopt;
    return QVec{};
  }
  return rational_span_solve(gens, diff);
}

bool RootDatum::leq_coroot_order(const CocharQ& nu, const CocharQ& nu_prime) const {
  CocharQ diff(rank_);
  for (std::size_t t = 0; t < rank_; ++t) diff[t] = nu_prime[t] - nu[t];
  auto coeffs = coroot_coefficients(diff);
  if (!coeffs) return false;
  for (const Rat& c : *coeffs)
    if (c < 0) return false;
  return true;
}

LeviSubset RootDatum::centralizer_levi(const CocharQ& nu) const {
  LeviSubset m;
  for (std::size_t i = 0; i < simple_roots_.size(); ++i)
    if (pairing_root(static_cast<int>(i), nu) == 0)
      m.indices.push_back(static_cast<int>(i));
  if (!is_galois_stable(m))
    throw std::invalid_argument("centralizer Levi is not Galois-stable");
  return m;
}

CocharQ RootDatum::av_levi(const CocharQ& nu, const LeviSubset& m) const {
  CocharQ d = galois_average(nu);
  if (m.indices.empty()) return d;
  // solve <alpha_j, d - sum_i c_i alpha_i^vee> = 0 over j in m
  std::size_t k = m.indices.size();
  std::vector<QVec> rows(k, QVec(k, Rat(0)));
  QVec rhs(k, Rat(0));
  for (std::size_t a = 0; a < k; ++a) {
    int j = m.indices[a];
    rhs[a] = pairing_root(j, d);
    for (std::size_t b = 0; b < k; ++b) {
      int i = m.indices[b];
      Int c = 0;
      for (std::size_t t = 0; t < rank_; ++t)
        c += simple_roots_[j][t] * simple_coroots_[i][t];
      rows[a][b] = c;
    }
  }
  auto coeffs = solve_linear(rows, rhs);
  if (!coeffs) throw internal_error("av_levi: singular Cartan submatrix");
  CocharQ out = d;
  for (std::size_t b = 0; b < k; ++b) {
    int i = m.indices[b];
    for (std::size_t t = 0; t < rank_; ++t)
      out[t] -= (*coeffs)[b] * Rat(simple_coroots_[i][t]);
  }
  return out;
}

CocharQ RootDatum::av_levi(const IntVec& nu, const LeviSubset& m) const {
  return av_levi(to_q(nu), m);
}

std::vector<IntVec> RootDatum::relation_generators(const LeviSubset& m) const {
  std::vector<IntVec> rels;
  for (int i : m.indices) rels.push_back(simple_coroots_[i]);
  for (const IntMatrix& a : galois_gens_)
    for (std::size_t j = 0; j < rank_; ++j) {
      IntVec col(rank_);
      bool nonzero = false;
      for (std::size_t i = 0; i < rank_; ++i) {
        col[i] = a.at(i, j) - Int(i == j ? 1 : 0);
        if (col[i] != 0) nonzero = true;
      }
      if (nonzero) rels.push_back(std::move(col));
    }
  return rels;
}

const QuotientLattice& RootDatum::quotient_for(const LeviSubset& m) const {
  std::lock_guard<std::mutex> lock(*cache_mutex_);
  auto it = quotient_cache_.find(m.indices);
  if (it == quotient_cache_.end()) {
    auto q = std::make_unique<QuotientLattice>(rank_, relation_generators(m));
    it = quotient_cache_.emplace(m.indices, std::move(q)).first;
  }
  return *it->second;
}

Pi1Element RootDatum::sharp_levi(const IntVec& x, const LeviSubset& m) const {
  return {m, quotient_for(m).reduce(x)};
}

CocharQ RootDatum::sharp_levi_rational(const CocharQ& nu, const LeviSubset& m) const {
  return av_levi(nu, m);
}

std::pair<std::size_t, std::vector<Int>> RootDatum::pi1_group(const LeviSubset& m) const {
  const QuotientLattice& q = quotient_for(m);
  return {q.free_rank(), q.torsion_invariants()};
}

Pi1Element RootDatum::push_pi1(const Pi1Element& x, const LeviSubset& m_bigger) const {
  if (!x.levi.subset_of(m_bigger))
    throw std::invalid_argument("push_pi1: target Levi must contain the source");
  return sharp_levi(x.coords, m_bigger);
}

RootDatum RootDatum::levi_datum(const LeviSubset& m) const {
  if (!is_galois_stable(m))
    throw std::invalid_argument("levi_datum: Levi subset must be Galois-stable");
  std::vector<IntVec> roots, coroots;
  std::vector<QVec> lifts;
  for (int i : m.indices) {
    roots.push_back(simple_roots_[i]);
    coroots.push_back(simple_coroots_[i]);
    lifts.push_back(weight_lifts_[i]);
  }
  return RootDatum(label_ + ":levi", rank_, std::move(roots), std::move(coroots),
                   std::move(lifts), galois_gens_);
}

Rat RootDatum::weight_pairing_step(int i) const {
  std::vector<IntVec> gens = relation_generators(full_levi());
  Int num = 0, den = 1;
  for (const IntVec& g : gens) {
    Rat p = 0;
    for (std::size_t t = 0; t < rank_; ++t)
      p += weight_lifts_[static_cast<std::size_t>(i)][t] * Rat(g[t]);
    if (p == 0) continue;
    // gcd of rationals num/den and p: gcd of numerators over the lcm of
    // denominators
    Int pd = denominator(p);
    Int l = den / gcd(den, pd) * pd;
    num = gcd(num * (l / den), numerator(p) * (l / pd));
    den = l;
  }
  if (num == 0) return Rat(0);
  return Rat(abs(num), den);
}

std::optional<RootDatum::WeightFiber> RootDatum::cochar_from_weight_pairings(
    const std::vector<Rat>& targets, const IntVec& kappa_lift) const {
  std::size_t k = simple_roots_.size();
  if (targets.size() != k)
    throw std::invalid_argument("cochar_from_weight_pairings: need one target per weight");
  std::vector<IntVec> gens = relation_generators(full_levi());
  std::size_t g = gens.size();
  // integer system: rows scaled to clear the weight-lift denominators
  IntMatrix a(k, g);
  IntVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    Int den = 1;
    for (const Rat& w : weight_lifts_[i])
      den = lcm(den, denominator(w));
    IntVec wi(rank_);
    for (std::size_t t = 0; t < rank_; ++t)
      wi[t] = numerator(weight_lifts_[i][t] * Rat(den));
    Int base = 0;
    for (std::size_t t = 0; t < rank_; ++t) base += wi[t] * kappa_lift[t];
    Rat rhs_q = targets[i] * Rat(den) - Rat(base);
    if (denominator(rhs_q) != 1) return std::nullopt;  // target off the coset
    rhs[i] = numerator(rhs_q);
    for (std::size_t j = 0; j < g; ++j) {
      Int e = 0;
      for (std::size_t t = 0; t < rank_; ++t) e += wi[t] * gens[j][t];
      a.at(i, j) = e;
    }
  }
  SnfResult s = smith_normal_form_full(a);
  IntVec y = s.u.apply(rhs);
  std::size_t nmin = std::min(k, g);
  IntVec z(g);
  for (std::size_t i = 0; i < k; ++i) {
    if (i < nmin && s.d.at(i, i) != 0) {
      if (y[i] % s.d.at(i, i) != 0) return std::nullopt;
      z[i] = y[i] / s.d.at(i, i);
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  IntVec c = s.v.apply(z);
  WeightFiber fiber;
  fiber.particular = kappa_lift;
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t t = 0; t < rank_; ++t)
      fiber.particular[t] += c[j] * gens[j][t];
  // integer kernel directions of the pairing system, mapped to lattice vectors
  std::set<IntVec> dirs;
  for (std::size_t j = 0; j < g; ++j) {
    bool in_kernel = j >= nmin || s.d.at(j, j) == 0;
    if (!in_kernel) continue;
    IntVec kc(g);
    for (std::size_t i = 0; i < g; ++i) kc[i] = s.v.at(i, j);
    IntVec dir(rank_);
    bool nonzero = false;
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t t = 0; t < rank_; ++t) {
        dir[t] += kc[i] * gens[i][t];
        if (dir[t] != 0) nonzero = true;
      }
    if (nonzero && dir != IntVec(rank_)) dirs.insert(dir);
  }
  fiber.directions.assign(dirs.begin(), dirs.end());
  return fiber;
}

}  // namespace bgmu
