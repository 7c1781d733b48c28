#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upacket/algebra.hpp"
#include "upacket/tori.hpp"
#include "upacket/weyl.hpp"

namespace upacket {

// Tame parameter datum (n, omega, y): omega is the Weyl image of Frobenius
// and y the rational alcove point with phi(t~) = exp(y) tau.  Coordinates of
// y live on the tau-fixed subspace, one per positive index.
struct TameParameter {
  int n = 0;
  SignedPermutation omega{std::vector<int>{}};
  std::vector<Rat> y;

  int m() const { return omega.rank(); }
};

// Affine functional constant + <linear, y>; walls of the closed alcove are
// the loci where these are >= 0.
struct AffineWall {
  Rat constant;
  std::vector<Rat> linear;

  Rat value(const std::vector<Rat>& y) const;
};

// The tau-folded root system of GL_n: restricted roots gamma_a (summed over
// tau-classes), a base from the folded simple roots, the highest root, and
// the m+1 alcove walls (the simple inequalities plus 1 - highest >= 0).
struct RestrictedRootDatum {
  int n = 0;
  int m = 0;
  std::vector<std::vector<Rat>> roots;    // Phi_tau, closed under negation
  std::vector<std::vector<Rat>> simples;  // Delta_tau
  std::vector<Rat> highest;               // gamma~_0
  std::vector<AffineWall> walls;
};

// Requires n >= 2.
RestrictedRootDatum restricted_root_datum(int n);

// Closure test against the alcove walls; vacuously true for m = 0.
bool in_closed_alcove(int n, const std::vector<Rat>& y);

// Barycenter of the alcove simplex (average of its m+1 vertices).
std::vector<Rat> alcove_barycenter(const RestrictedRootDatum& datum);

// { w in W^tau : w.y - y lies in Y_tau }, with Y_tau the projected lattice
// (half-integer vectors in these coordinates).  Requires y in the closed
// alcove.
std::vector<SignedPermutation> w_stabilizer(const TameParameter& p);

struct ValidationReport {
  bool tame = false;
  bool discrete = false;
  bool regular = false;
  std::vector<std::string> diagnostics;

  bool all() const { return tame && discrete && regular; }
};

ValidationReport validate(const TameParameter& p);

// Twisted character lattice of the torus attached to the parameter; requires
// a discrete parameter.
GaloisLattice construct_torus(const TameParameter& p);

// Elementary divisors of A_phi, computed as the torsion of the coinvariant
// lattice of X*(T) under tau and Frobenius.  Requires discrete and regular.
std::vector<Int> compute_a_phi(const TameParameter& p);

// Depth-zero character data on T-bar(k): one residue e_i mod q^{r_i} + 1 per
// 2r-factor, plus a mod-2 bit for the U_1 component group when n is odd.
struct CharacterData {
  std::vector<Int> exponents;
  std::vector<Int> moduli;
  std::optional<int> u1_bit;
};

// Declared normalization: e_i = (q^{r_i} + 1) * sum of the cycle's y
// coordinates, which must be an integer (else std::invalid_argument
// "y incompatible with q"); requires validate(p).all().
CharacterData character_data(const TameParameter& p, const Int& q);

// True when the normalization above accepts (p, q).
bool character_data_compatible(const TameParameter& p, const Int& q);

// No nontrivial element of the reduction-torus Weyl action (per-factor
// q-power twists, which include inversion, together with swaps of equal-size
// factors) fixes the exponent vector.
bool is_general_position(const CharacterData& cd,
                         const ElementalDecomposition& dec, const Int& q);

}  // namespace upacket
