#pragma once

#include <string>
#include <vector>

#include "upacket/hermitian.hpp"
#include "upacket/tori.hpp"

namespace upacket {

// Vertex of the building fixed by the torus, as exponents b_i of the lattice
// Lambda = prod pi_E^{b_i} O_i.  Under the canonical valuation representatives
// nu in {0,1}, admissibility reads: every entry of -v - 2b lies in {0,1}.
struct VertexLattice {
  std::vector<int> b;  // one entry per factor, U_1 included

  bool operator==(const VertexLattice& other) const { return b == other.b; }
};

struct ReductionType {
  int l = 0;          // symplectic dimension
  int m_red = 0;      // orthogonal dimension
  bool orth_split = true;
  int stab_component_order = 1;  // |G_flat / G_circ|, 1 or 2

  std::string label() const;
  bool operator==(const ReductionType& other) const {
    return l == other.l && m_red == other.m_red && orth_split == other.orth_split;
  }
};

// The unique admissible b: b_i = 0 for even-parity factors, b_i = -1 for
// odd-parity factors; the U_1 factor sits at b = 0.
VertexLattice fixed_vertex(const ElementalDecomposition& dec,
                           const EmbeddingChoice& choice);

// Parahoric reduction Sp_l x O_{m_red} at the fixed vertex.  Factors with
// even kappa-valuation feed the symplectic block and odd-valuation factors
// the orthogonal block (the U_1 factor is always orthogonal); the orthogonal
// form is split exactly when the embedding is quasi-split.
ReductionType reduction_type(const ElementalDecomposition& dec,
                             const EmbeddingChoice& choice, int n);

// Whether Z(G-bar) lies in the identity component: true iff n is even.
bool center_in_identity(int n);

// All admissible b with entries in [-window, window]; test oracle for
// fixed-vertex uniqueness.
std::vector<VertexLattice> brute_force_fixed_lattices(
    const ElementalDecomposition& dec, const EmbeddingChoice& choice,
    int window);

// One transcribed vertex of the Appendix A tables.
struct AppendixEntry {
  int n = 0;
  bool quasi_split = true;
  ReductionType reduction;
};

class AppendixTable {
 public:
  // Parses the checked-in fixture (one record per vertex: n, form, l, m_red,
  // orth flag).  Throws std::runtime_error on missing or corrupt input.
  static AppendixTable load(const std::string& path);

  // Vertex reductions for U_n of the given form; throws std::invalid_argument
  // if the fixture has no row set for (n, form).
  std::vector<ReductionType> table(int n, bool quasi_split) const;

  bool contains(int n, bool quasi_split, const ReductionType& r) const;
  const std::vector<AppendixEntry>& entries() const { return entries_; }

 private:
  std::vector<AppendixEntry> entries_;
};

// Computed reduction vs. the transcribed table.  The m_red = 2 rows are
// reported as flagged rather than pass/fail.
struct AppendixCheck {
  bool found = false;
  bool flagged = false;  // m_red == 2 corner
};

AppendixCheck check_against_appendix(const AppendixTable& table, int n,
                                     const EmbeddingChoice& choice,
                                     const ReductionType& red);

}  // namespace upacket
