#include "upacket/hermitian.hpp"

#include <stdexcept>

namespace upacket {

DiscClass disc_mul(DiscClass a, DiscClass b) { return DiscClass{(a.bit + b.bit) % 2}; }

FieldParams::FieldParams(Int q_in) : q(std::move(q_in)) {
  if (q < 3 || q % 2 == 0)
    throw std::invalid_argument("q must be an odd prime power");
}

std::string SpaceClass::label() const {
  switch (kind) {
    case SpaceKind::hyperbolic:
      return "Hyp^" + std::to_string(m);
    case SpaceKind::hyperbolic_plus_anisotropic:
      return m > 1 ? "Hyp^" + std::to_string(m - 1) + "+Ani" : "Ani";
    case SpaceKind::hyperbolic_plus_line:
      return m > 0 ? "Hyp^" + std::to_string(m) + "+L" : "L";
  }
  return "";
}

SpaceClass classify_space(int n, DiscClass d, const FieldParams& fp) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  const int m = n / 2;
  if (n % 2 == 0) {
    // Quasi-split form has discriminant (-1)^m.
    DiscClass expected{(m * fp.minus_one_class().bit) % 2};
    if (d == expected) return SpaceClass{SpaceKind::hyperbolic, m, d};
    return SpaceClass{SpaceKind::hyperbolic_plus_anisotropic, m, d};
  }
  return SpaceClass{SpaceKind::hyperbolic_plus_line, m, d};
}

DiscClass disc_v_s_kappa(int r, int v_parity, const FieldParams& fp) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (v_parity != 0 && v_parity != 1)
    throw std::invalid_argument("valuation parity must be a bit");
  return DiscClass{(v_parity + r * fp.minus_one_class().bit) % 2};
}

bool is_quasi_split_embedding(const EmbeddingChoice& choice, int n) {
  const bool odd = n % 2 != 0;
  if (odd != choice.u1_class.has_value())
    throw std::invalid_argument("u1 class bit must be present exactly for odd n");
  if (odd) return true;
  int sum = 0;
  for (int bit : choice.parity) {
    if (bit != 0 && bit != 1)
      throw std::invalid_argument("parity entries must be bits");
    sum += bit;
  }
  return sum % 2 == 0;
}

void check_choice(const EmbeddingChoice& choice, const ElementalDecomposition& dec) {
  if (static_cast<int>(choice.parity.size()) != dec.num_even_factors())
    throw std::invalid_argument("parity bit count does not match the decomposition");
  if (choice.u1_class.has_value() != dec.has_u1)
    throw std::invalid_argument("u1 class bit must be present exactly for odd n");
  for (int bit : choice.parity)
    if (bit != 0 && bit != 1)
      throw std::invalid_argument("parity entries must be bits");
  if (choice.u1_class && *choice.u1_class != 0 && *choice.u1_class != 1)
    throw std::invalid_argument("u1 class must be a bit");
}

}  // namespace upacket
