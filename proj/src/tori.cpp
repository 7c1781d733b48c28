#include "upacket/tori.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace upacket {

int GaloisLattice::position(int index) const {
  const bool odd = n % 2 != 0;
  if (index == 0) {
    if (!odd) throw std::invalid_argument("chi_0 only exists for odd n");
    return m;
  }
  if (std::abs(index) < 1 || std::abs(index) > m)
    throw std::invalid_argument("label out of range");
  if (index < 0) return index + m;
  return m + (odd ? 1 : 0) + index - 1;
}

GaloisLattice build_twisted_lattice(int n, const SignedPermutation& omega) {
  const int m = omega.rank();
  if (n != 2 * m && n != 2 * m + 1)
    throw std::invalid_argument("dimension does not match the rank of omega");

  GaloisLattice lat;
  lat.n = n;
  lat.m = m;
  lat.tau_action = IntMatrix(n, n);
  lat.frob_action = IntMatrix(n, n);

  // tau: chi_i -> -chi_{-i}, chi_0 -> -chi_0.
  // Frobenius: chi_i -> chi_{omega(i)}, chi_0 fixed.
  if (n % 2 != 0) {
    lat.tau_action.at(lat.position(0), lat.position(0)) = -1;
    lat.frob_action.at(lat.position(0), lat.position(0)) = 1;
  }
  for (int i = 1; i <= m; ++i) {
    lat.tau_action.at(lat.position(-i), lat.position(i)) = -1;
    lat.tau_action.at(lat.position(i), lat.position(-i)) = -1;
    lat.frob_action.at(lat.position(omega.apply(i)), lat.position(i)) = 1;
    lat.frob_action.at(lat.position(-omega.apply(i)), lat.position(-i)) = 1;
  }
  return lat;
}

bool is_anisotropic(const GaloisLattice& lat) {
  return fixed_sublattice({lat.tau_action, lat.frob_action}).cols() == 0;
}

ElementalDecomposition elemental_decomposition(int n,
                                               const SignedPermutation& omega) {
  if (!is_elliptic(omega)) throw std::domain_error("torus not anisotropic");
  const int m = omega.rank();
  if (n != 2 * m && n != 2 * m + 1)
    throw std::invalid_argument("dimension does not match the rank of omega");

  ElementalDecomposition dec;
  dec.n = n;
  dec.has_u1 = n % 2 != 0;

  std::vector<bool> seen(m, false);
  for (int i = 1; i <= m; ++i) {
    if (seen[i - 1]) continue;
    TorusFactor f;
    int j = i;
    do {
      f.cycle.push_back(std::abs(j));
      seen[std::abs(j) - 1] = true;
      j = omega.apply(j);
    } while (std::abs(j) != i);
    f.r = static_cast<int>(f.cycle.size());
    f.s = 2 * f.r;
    dec.factors.push_back(std::move(f));
  }
  std::sort(dec.factors.begin(), dec.factors.end(),
            [](const TorusFactor& a, const TorusFactor& b) {
              return a.cycle.front() < b.cycle.front();
            });
  if (dec.has_u1) dec.factors.push_back(TorusFactor{1, 0, {}});
  return dec;
}

int neron_component_order(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return n % 2 == 0 ? 1 : 2;
}

std::vector<Int> tbar_orders(const ElementalDecomposition& dec, const Int& q) {
  if (q < 3 || q % 2 == 0)
    throw std::invalid_argument("q must be an odd prime power");
  std::vector<Int> orders;
  for (const TorusFactor& f : dec.factors) {
    if (f.is_u1()) {
      orders.push_back(1);
    } else {
      Int qr;
      mpz_pow_ui(qr.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(f.r));
      orders.push_back(qr + 1);
    }
  }
  return orders;
}

}  // namespace upacket
