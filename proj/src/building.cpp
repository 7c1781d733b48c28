#include "upacket/building.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace upacket {

std::string ReductionType::label() const {
  std::string s;
  if (l > 0) s += "Sp" + std::to_string(l);
  if (m_red > 0) {
    if (!s.empty()) s += "x";
    s += "O" + std::to_string(m_red);
    if (m_red % 2 == 0 && !orth_split) s += "'";
  }
  if (s.empty()) s = "1";
  return s;
}

namespace {

// Canonical valuation representative of each factor: the parity bit for a
// 2r-factor, 0 for the U_1 factor.
int canonical_valuation(const ElementalDecomposition& dec,
                        const EmbeddingChoice& choice, int factor) {
  const TorusFactor& f = dec.factors[factor];
  if (f.is_u1()) return 0;
  return choice.parity[factor];
}

}  // namespace

VertexLattice fixed_vertex(const ElementalDecomposition& dec,
                           const EmbeddingChoice& choice) {
  check_choice(choice, dec);
  VertexLattice v;
  v.b.reserve(dec.factors.size());
  for (int i = 0; i < dec.j(); ++i) {
    // solve -v - 2b in {0,1}: b = 0 for v = 0, b = -1 for v = 1
    v.b.push_back(canonical_valuation(dec, choice, i) == 0 ? 0 : -1);
  }
  return v;
}

ReductionType reduction_type(const ElementalDecomposition& dec,
                             const EmbeddingChoice& choice, int n) {
  check_choice(choice, dec);
  if (n != dec.n) throw std::invalid_argument("dimension mismatch");
  ReductionType red;
  for (int i = 0; i < dec.num_even_factors(); ++i)
    if (choice.parity[i] == 0) red.l += dec.factors[i].s;
  red.m_red = n - red.l;
  red.orth_split = is_quasi_split_embedding(choice, n);
  red.stab_component_order = red.m_red == 0 ? 1 : 2;
  return red;
}

bool center_in_identity(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return n % 2 == 0;
}

std::vector<VertexLattice> brute_force_fixed_lattices(
    const ElementalDecomposition& dec, const EmbeddingChoice& choice,
    int window) {
  check_choice(choice, dec);
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
  const int j = dec.j();
  std::vector<VertexLattice> found;
  std::vector<int> b(j, -window);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < j && ok; ++i) {
      int val = -canonical_valuation(dec, choice, i) - 2 * b[i];
      ok = val == 0 || val == 1;
    }
    if (ok) found.push_back(VertexLattice{b});
    if (j == 0) break;
    int k = j - 1;
    while (k >= 0 && b[k] == window) b[k--] = -window;
    if (k < 0) break;
    ++b[k];
  }
  return found;
}

AppendixTable AppendixTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  AppendixTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line.substr(0, line.find('#'));
    std::istringstream is(trimmed);
    int n, l, m_red;
    std::string form, orth;
    if (!(is >> n)) continue;  // blank or comment line
    if (!(is >> form >> l >> m_red >> orth) || (form != "qs" && form != "nqs") ||
        (orth != "split" && orth != "nonsplit") || n < 1 || l < 0 || m_red < 0 ||
        l + m_red != n || l % 2 != 0) {
      throw std::runtime_error("corrupt fixture record at " + path + ":" +
                               std::to_string(lineno));
    }
    AppendixEntry e;
    e.n = n;
    e.quasi_split = form == "qs";
    e.reduction.l = l;
    e.reduction.m_red = m_red;
    e.reduction.orth_split = orth == "split";
    e.reduction.stab_component_order = m_red == 0 ? 1 : 2;
    t.entries_.push_back(e);
  }
  if (t.entries_.empty())
    throw std::runtime_error("fixture file has no records: " + path);
  return t;
}

std::vector<ReductionType> AppendixTable::table(int n, bool quasi_split) const {
  std::vector<ReductionType> out;
  for (const AppendixEntry& e : entries_)
    if (e.n == n && e.quasi_split == quasi_split) out.push_back(e.reduction);
  if (out.empty())
    throw std::invalid_argument("no fixture rows for n=" + std::to_string(n));
  return out;
}

bool AppendixTable::contains(int n, bool quasi_split,
                             const ReductionType& r) const {
  for (const AppendixEntry& e : entries_) {
    if (e.n != n || e.quasi_split != quasi_split) continue;
    if (e.reduction.l != r.l || e.reduction.m_red != r.m_red) continue;
    // The split/non-split distinction only separates even orthogonal groups.
    if (r.m_red >= 2 && r.m_red % 2 == 0 &&
        e.reduction.orth_split != r.orth_split)
      continue;
    return true;
  }
  return false;
}

AppendixCheck check_against_appendix(const AppendixTable& table, int n,
                                     const EmbeddingChoice& choice,
                                     const ReductionType& red) {
  AppendixCheck c;
  c.flagged = red.m_red == 2;
  c.found = table.contains(n, is_quasi_split_embedding(choice, n), red);
  return c;
}

}  // namespace upacket
