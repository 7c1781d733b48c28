#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upacket/algebra.hpp"
#include "upacket/tori.hpp"

namespace upacket {

// Class in K^x / Nm E^x, a two-element group generated by a non-square unit u;
// the bit is the exponent of u.
struct DiscClass {
  int bit = 0;

  bool operator==(const DiscClass& other) const { return bit == other.bit; }
};

DiscClass disc_mul(DiscClass a, DiscClass b);

// Residue field cardinality of the base field; q odd.  Everything about the
// ramified quadratic extension E/K is tracked through q alone.
struct FieldParams {
  Int q;

  explicit FieldParams(Int q_in);
  int q_mod_4() const { return static_cast<int>(mpz_fdiv_ui(q.get_mpz_t(), 4)); }
  // -1 is a norm from E exactly when q = 1 (mod 4).
  DiscClass minus_one_class() const { return DiscClass{q_mod_4() == 1 ? 0 : 1}; }
};

enum class SpaceKind {
  hyperbolic,                  // Hyp^m (even n, quasi-split)
  hyperbolic_plus_anisotropic, // Hyp^{m-1} + Ani (even n, non-quasi-split)
  hyperbolic_plus_line,        // Hyp^m + L (odd n)
};

struct SpaceClass {
  SpaceKind kind;
  int m;           // number of hyperbolic planes
  DiscClass disc;  // discriminant of the whole space
  std::string label() const;
};

// Isometry classification by dimension and discriminant.  Odd-dimensional
// spaces with either discriminant carry isomorphic unitary groups.
SpaceClass classify_space(int n, DiscClass d, const FieldParams& fp);

// Per-factor kappa data selecting one of the 2^j embeddings: a valuation
// parity bit for each 2r-factor, and the unit-class bit of kappa for the U_1
// factor when n is odd (its valuation is forced even).
struct EmbeddingChoice {
  std::vector<int> parity;      // one bit per 2r-factor
  std::optional<int> u1_class;  // present exactly when n is odd
};

// disc(V_{s,kappa}) = u^{v_L(kappa) + r (q-1)/2}.
DiscClass disc_v_s_kappa(int r, int v_parity, const FieldParams& fp);

// Odd n: always quasi-split.  Even n: quasi-split iff the parity bits sum to
// zero mod 2.
bool is_quasi_split_embedding(const EmbeddingChoice& choice, int n);

// Checks the choice against a decomposition (bit counts, u1 presence).
void check_choice(const EmbeddingChoice& choice, const ElementalDecomposition& dec);

}  // namespace upacket
