#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace upacket {

using Int = mpz_class;
using Rat = mpq_class;

// Dense integer matrix with arbitrary-precision entries.  Everything in this
// module (and in the rest of the library) is exact; there is no floating
// point anywhere.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const;
  bool operator!=(const IntMatrix& other) const { return !(*this == other); }

  IntMatrix transpose() const;
  bool is_square() const { return rows_ == cols_; }

  // Exact determinant (Bareiss fraction-free elimination); square input only.
  Int determinant() const;

  std::string to_string() const;

 private:
  int rows_;
  int cols_;
  std::vector<Int> entries_;
};

// u * a * v = d with u, v unimodular, d diagonal with nonnegative entries
// d_1 | d_2 | ... along the diagonal.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Basis (as matrix columns) of the intersection of the kernels of m - 1 over
// all m in mats.  The basis is saturated: the quotient by its span is
// torsion-free.  All matrices must be square of equal size.
IntMatrix fixed_sublattice(const std::vector<IntMatrix>& mats);

// Elementary divisors > 1 of the quotient of Z^n by the sublattice generated
// by (m - 1) v over all m in mats and v in Z^n.
std::vector<Int> coinvariant_torsion(const std::vector<IntMatrix>& mats);

struct Partition {
  std::vector<int> parts;  // weakly decreasing, all positive

  int weight() const;
  bool operator==(const Partition& other) const { return parts == other.parts; }
  bool operator<(const Partition& other) const { return parts < other.parts; }
  std::string to_string() const;
};

// All partitions of m, each exactly once, in lexicographically decreasing
// order: (m) first, (1,...,1) last.
std::vector<Partition> partitions(int m);

enum class ClassicalKind { symplectic, special_orthogonal, orthogonal };

// total = p_prime_part * p_part, with p_part the full power of the defining
// characteristic (a power of q) and p_prime_part coprime to it.
struct GroupOrder {
  Int total;
  Int p_prime_part;
  Int p_part;
};

// Order of the finite classical group of the given kind over F_q (q odd).
// For even-dimensional orthogonal groups, split selects the plus form.
// Orthogonal groups have twice the special orthogonal order in dimension >= 1.
GroupOrder classical_group_order(ClassicalKind kind, int dim, const Int& q,
                                 bool split = true);

// Solves a x = b over the rationals.  Returns false if the system is
// singular or inconsistent.  a is given row-major, square.
bool solve_rational_system(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                           std::vector<Rat>& out);

}  // namespace upacket
