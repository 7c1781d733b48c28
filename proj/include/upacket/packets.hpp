#pragma once

#include <optional>
#include <vector>

#include "upacket/building.hpp"
#include "upacket/hermitian.hpp"
#include "upacket/lparam.hpp"
#include "upacket/tori.hpp"

namespace upacket {

struct PacketMember {
  EmbeddingChoice choice;
  bool quasi_split = true;                  // inner form of the target group
  std::optional<int> pure_inner_form_bit;   // odd n: the u1 class
  VertexLattice vertex;
  ReductionType reduction;
  std::vector<Int> tbar;
  Int dl_degree;
  std::optional<int> central_bit;  // odd n, when character data is available
  std::optional<int> label;        // index into Irr(A_phi)
};

struct PacketDescriptor {
  TameParameter parameter;
  Int q;
  ElementalDecomposition dec;
  std::vector<Int> a_phi;
  std::optional<CharacterData> character;
  bool label_warning = false;
  std::vector<PacketMember> members;  // 2^j, sorted by parity bit-vector

  int j() const { return dec.j(); }
};

// Deligne-Lusztig degree: the p'-part of |Sp_l(q) x SO_{m_red}(q)| divided by
// the product of the torus orders.  A non-integral quotient signals a
// modeling bug and throws std::logic_error.
Int dl_degree(const ReductionType& red, const std::vector<Int>& tbar,
              const Int& q);

// Odd n: records the central-character bit selecting one of the two
// constituents of the induction.  Even n: no-op.
void select_constituent(PacketMember& member, const CharacterData& cd, int n);

// Assigns Irr(A_phi) labels by the parity bit-vector, base point at the
// all-even member.  On shape mismatch sets the warning flag and leaves labels
// empty.
void label_members(PacketDescriptor& desc, const std::vector<Int>& divisors);

// Builds the full packet: one member per embedding choice (parity bit per
// 2r-factor, unit-class bit for the U_1 factor when n is odd).  Requires a
// tame, discrete, regular parameter.
PacketDescriptor enumerate_members(const TameParameter& p, const Int& q);

}  // namespace upacket
