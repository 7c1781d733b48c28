#pragma once

#include <vector>

#include "upacket/algebra.hpp"
#include "upacket/weyl.hpp"

namespace upacket {

// Character lattice X*(T) of a relatively unramified torus in U_n, with the
// two commuting integer actions: the ramified involution tau (chi_i -> -chi_{-i})
// and Frobenius acting through a signed permutation omega.
//
// Basis order: chi_{-m}, ..., chi_{-1}, [chi_0 when n is odd], chi_1, ..., chi_m.
struct GaloisLattice {
  int n = 0;  // dimension of the Hermitian space; lattice rank
  int m = 0;  // hyperoctahedral rank, n in {2m, 2m+1}
  IntMatrix tau_action;
  IntMatrix frob_action;

  // Basis position of chi_index; index in {-m..-1, 1..m} plus 0 when n is odd.
  int position(int index) const;
};

GaloisLattice build_twisted_lattice(int n, const SignedPermutation& omega);

// No nonzero vector fixed by both actions.
bool is_anisotropic(const GaloisLattice& lat);

// One factor T_s = Res_{L/K} U_1(E_s/L) per negative cycle (s = 2r), with a
// trailing U_1 factor (s = 1, r = 0) exactly when n is odd.
struct TorusFactor {
  int s = 0;               // factor dimension
  int r = 0;               // half-dimension; 0 for the U_1 factor
  std::vector<int> cycle;  // indices of the negative cycle, empty for U_1

  bool is_u1() const { return s == 1; }
};

struct ElementalDecomposition {
  int n = 0;
  bool has_u1 = false;
  std::vector<TorusFactor> factors;  // 2r-factors by cycle minimum, U_1 last

  int j() const { return static_cast<int>(factors.size()); }
  // Number of 2r-factors (excludes the U_1 factor).
  int num_even_factors() const { return j() - (has_u1 ? 1 : 0); }
};

// Requires omega elliptic; throws std::domain_error otherwise.
ElementalDecomposition elemental_decomposition(int n, const SignedPermutation& omega);

// Component group order of the Neron model: 1 for even n, 2 for odd n.
int neron_component_order(int n);

// Order of the depth-zero reduction of each factor: q^r + 1 for a 2r-factor,
// 1 for the U_1 factor (whose Z/2 component group is tracked by
// neron_component_order).
std::vector<Int> tbar_orders(const ElementalDecomposition& dec, const Int& q);

}  // namespace upacket
