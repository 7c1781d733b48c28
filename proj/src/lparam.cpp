#include "upacket/lparam.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace upacket {

Rat AffineWall::value(const std::vector<Rat>& y) const {
  Rat v = constant;
  for (size_t i = 0; i < linear.size(); ++i) v += linear[i] * y[i];
  return v;
}

namespace {

// Restriction of the GL_n root e_a - e_b to the tau-fixed subspace, as a
// functional on the coordinates (y_1, ..., y_m): chi_i contributes +y_i for
// i > 0, -y_{-i} for i < 0 and nothing for i = 0.
std::vector<Rat> restrict_root(int a, int b, int m) {
  std::vector<Rat> v(m, Rat(0));
  if (a > 0) v[a - 1] += 1;
  if (a < 0) v[-a - 1] -= 1;
  if (b > 0) v[b - 1] -= 1;
  if (b < 0) v[-b - 1] += 1;
  return v;
}

void add_vec(std::vector<Rat>& a, const std::vector<Rat>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

// tau sends e_a - e_b to e_{-b} - e_{-a}.
std::pair<int, int> tau_root(std::pair<int, int> r) {
  return {-r.second, -r.first};
}

}  // namespace

RestrictedRootDatum restricted_root_datum(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const int m = n / 2;
  const bool odd = n % 2 != 0;

  RestrictedRootDatum datum;
  datum.n = n;
  datum.m = m;

  // Basis labels in descending order chi_m, ..., chi_1, [chi_0], chi_{-1},
  // ..., chi_{-m}; this order is stable under tau and keeps the folded base
  // in the positive coordinate cone.
  std::vector<int> labels;
  for (int i = m; i >= 1; --i) labels.push_back(i);
  if (odd) labels.push_back(0);
  for (int i = 1; i <= m; ++i) labels.push_back(-i);

  // gamma_a over all tau-classes of roots, deduplicated.
  std::set<std::vector<Rat>> seen;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      std::pair<int, int> root{labels[a], labels[b]};
      std::vector<Rat> gamma = restrict_root(root.first, root.second, m);
      std::pair<int, int> image = tau_root(root);
      if (image != root) add_vec(gamma, restrict_root(image.first, image.second, m));
      if (seen.insert(gamma).second) datum.roots.push_back(gamma);
    }

  // Folded simple roots: tau-orbits on alpha_k = E_k - E_{k+1}.
  std::set<std::vector<Rat>> seen_simple;
  for (int k = 0; k + 1 < n; ++k) {
    std::pair<int, int> root{labels[k], labels[k + 1]};
    std::vector<Rat> gamma = restrict_root(root.first, root.second, m);
    std::pair<int, int> image = tau_root(root);
    if (image != root) add_vec(gamma, restrict_root(image.first, image.second, m));
    if (seen_simple.insert(gamma).second) datum.simples.push_back(gamma);
  }

  // Highest root: the unique positive root of maximal height in the simple
  // basis.  Heights are found by solving for the coordinates exactly.
  std::vector<std::vector<Rat>> basis(m, std::vector<Rat>(m));
  for (int i = 0; i < m; ++i)
    for (size_t k = 0; k < datum.simples.size(); ++k)
      basis[i][k] = datum.simples[k][i];
  Rat best_height(-1);
  for (const auto& gamma : datum.roots) {
    std::vector<Rat> coords;
    if (!solve_rational_system(basis, gamma, coords))
      throw std::logic_error("folded simples do not span");
    bool positive = true;
    Rat height(0);
    for (const Rat& c : coords) {
      if (c < 0) positive = false;
      height += c;
    }
    if (positive && height > best_height) {
      best_height = height;
      datum.highest = gamma;
    }
  }

  for (const auto& gamma : datum.simples)
    datum.walls.push_back(AffineWall{Rat(0), gamma});
  std::vector<Rat> neg_highest = datum.highest;
  for (Rat& c : neg_highest) c = -c;
  datum.walls.push_back(AffineWall{Rat(1), neg_highest});
  return datum;
}

bool in_closed_alcove(int n, const std::vector<Rat>& y) {
  if (n < 2) return true;  // rank zero, nothing to check
  RestrictedRootDatum datum = restricted_root_datum(n);
  if (static_cast<int>(y.size()) != datum.m)
    throw std::invalid_argument("y has wrong length");
  for (const AffineWall& w : datum.walls)
    if (w.value(y) < 0) return false;
  return true;
}

std::vector<Rat> alcove_barycenter(const RestrictedRootDatum& datum) {
  const int m = datum.m;
  std::vector<Rat> sum(m, Rat(0));
  for (size_t drop = 0; drop < datum.walls.size(); ++drop) {
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (size_t k = 0; k < datum.walls.size(); ++k) {
      if (k == drop) continue;
      a.push_back(datum.walls[k].linear);
      b.push_back(-datum.walls[k].constant);
    }
    std::vector<Rat> vertex;
    if (!solve_rational_system(a, b, vertex))
      throw std::logic_error("alcove walls are degenerate");
    add_vec(sum, vertex);
  }
  for (Rat& c : sum) c /= Rat(static_cast<long>(datum.walls.size()));
  return sum;
}

namespace {

std::vector<Rat> act_on_y(const SignedPermutation& w, const std::vector<Rat>& y) {
  std::vector<Rat> out(y.size(), Rat(0));
  for (int i = 1; i <= w.rank(); ++i) {
    int v = w.apply(i);
    out[std::abs(v) - 1] = v > 0 ? y[i - 1] : -y[i - 1];
  }
  return out;
}

// Membership in Y_tau: every coordinate a half-integer.
bool in_projected_lattice(const std::vector<Rat>& v) {
  for (const Rat& c : v) {
    Rat t = c * 2;
    if (t.get_den() != 1) return false;
  }
  return true;
}

void check_parameter_shape(const TameParameter& p) {
  const int m = p.m();
  if (p.n != 2 * m && p.n != 2 * m + 1)
    throw std::invalid_argument("n does not match the rank of omega");
  if (static_cast<int>(p.y.size()) != m)
    throw std::invalid_argument("y has wrong length");
}

}  // namespace

std::vector<SignedPermutation> w_stabilizer(const TameParameter& p) {
  check_parameter_shape(p);
  if (!in_closed_alcove(p.n, p.y))
    throw std::invalid_argument("y outside the closed alcove");
  std::vector<SignedPermutation> stab;
  for (const SignedPermutation& w : all_elements(p.m())) {
    std::vector<Rat> moved = act_on_y(w, p.y);
    for (size_t i = 0; i < moved.size(); ++i) moved[i] -= p.y[i];
    if (in_projected_lattice(moved)) stab.push_back(w);
  }
  return stab;
}

ValidationReport validate(const TameParameter& p) {
  check_parameter_shape(p);
  ValidationReport rep;
  rep.tame = true;  // tameness is built into the encoding
  rep.discrete = is_elliptic(p.omega);
  if (!rep.discrete)
    rep.diagnostics.push_back(
        "omega has a positive cycle; the parameter is not discrete");
  if (!in_closed_alcove(p.n, p.y)) {
    rep.regular = false;
    rep.diagnostics.push_back("y lies outside the closed alcove");
    return rep;
  }
  std::vector<SignedPermutation> stab = w_stabilizer(p);
  rep.regular = stab.size() == 1;
  if (!rep.regular)
    rep.diagnostics.push_back(
        "y is fixed modulo the projected lattice by " +
        to_cycle_string(stab[stab[0].is_identity() ? 1 : 0]) +
        "; the parameter is not regular");
  return rep;
}

GaloisLattice construct_torus(const TameParameter& p) {
  check_parameter_shape(p);
  if (!is_elliptic(p.omega))
    throw std::domain_error("parameter is not discrete");
  return build_twisted_lattice(p.n, p.omega);
}

std::vector<Int> compute_a_phi(const TameParameter& p) {
  ValidationReport rep = validate(p);
  if (!rep.discrete) throw std::domain_error("parameter is not discrete");
  if (!rep.regular) throw std::domain_error("parameter is not regular");
  GaloisLattice lat = construct_torus(p);
  return coinvariant_torsion({lat.tau_action, lat.frob_action});
}

namespace {

Int pow_int(const Int& base, int e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Int mod_nonneg(const Int& a, const Int& mod) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
  return r;
}

}  // namespace

bool character_data_compatible(const TameParameter& p, const Int& q) {
  check_parameter_shape(p);
  if (!is_elliptic(p.omega)) return false;
  ElementalDecomposition dec = elemental_decomposition(p.n, p.omega);
  for (const TorusFactor& f : dec.factors) {
    if (f.is_u1()) continue;
    Rat sum(0);
    for (int k : f.cycle) sum += p.y[k - 1];
    Rat scaled = Rat(pow_int(q, f.r) + 1) * sum;
    scaled.canonicalize();
    if (scaled.get_den() != 1) return false;
  }
  return true;
}

CharacterData character_data(const TameParameter& p, const Int& q) {
  ValidationReport rep = validate(p);
  if (!rep.all()) throw std::domain_error("parameter is not tame, discrete and regular");
  if (q < 3 || q % 2 == 0)
    throw std::invalid_argument("q must be an odd prime power");

  ElementalDecomposition dec = elemental_decomposition(p.n, p.omega);
  CharacterData cd;
  for (const TorusFactor& f : dec.factors) {
    if (f.is_u1()) continue;
    Int modulus = pow_int(q, f.r) + 1;
    Rat sum(0);
    for (int k : f.cycle) sum += p.y[k - 1];
    Rat scaled = Rat(modulus) * sum;
    scaled.canonicalize();
    if (scaled.get_den() != 1)
      throw std::invalid_argument("y incompatible with q");
    cd.exponents.push_back(mod_nonneg(scaled.get_num(), modulus));
    cd.moduli.push_back(modulus);
  }
  // The (omega, y) encoding pins the inertia image inside the identity
  // component of the tau-fixed dual torus, so the U_1 component bit of the
  // declared normalization is trivial.
  if (p.n % 2 != 0) cd.u1_bit = 0;
  return cd;
}

bool is_general_position(const CharacterData& cd,
                         const ElementalDecomposition& dec, const Int& q) {
  const int k = dec.num_even_factors();
  if (static_cast<int>(cd.exponents.size()) != k)
    throw std::invalid_argument("exponent count does not match the decomposition");

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> twist(k, 0);

  // q generates the full twist group mod q^r + 1 (its order is 2r and the
  // power q^r acts as inversion).
  do {
    bool size_ok = true;
    for (int i = 0; i < k && size_ok; ++i)
      size_ok = dec.factors[perm[i]].s == dec.factors[i].s;
    if (!size_ok) continue;

    std::fill(twist.begin(), twist.end(), 0);
    for (;;) {
      bool identity = true;
      bool fixes = true;
      for (int i = 0; i < k; ++i) {
        if (perm[i] != i || twist[i] != 0) identity = false;
        Int image = mod_nonneg(pow_int(q, twist[i]) * cd.exponents[perm[i]],
                               cd.moduli[i]);
        if (image != cd.exponents[i]) {
          fixes = false;
          break;
        }
      }
      if (fixes && !identity) return false;

      int c = k - 1;
      while (c >= 0 && twist[c] == 2 * dec.factors[c].r - 1) twist[c--] = 0;
      if (c < 0) break;
      ++twist[c];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

}  // namespace upacket
