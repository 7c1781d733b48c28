#include "upacket/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace upacket {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  entries_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Int IntMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMatrix w = *this;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w.at(i, j) = t;
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).get_str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += c * row[b]
void add_row(IntMatrix& m, int a, int b, const Int& c) {
  for (int j = 0; j < m.cols(); ++j) m.at(a, j) += c * m.at(b, j);
}

// col[a] += c * col[b]
void add_col(IntMatrix& m, int a, int b, const Int& c) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, a) += c * m.at(i, b);
}

bool abs_less(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const int rows = a.rows();
  const int cols = a.cols();
  SmithForm f{IntMatrix::identity(rows), a, IntMatrix::identity(cols)};
  IntMatrix& d = f.d;
  IntMatrix& u = f.u;
  IntMatrix& v = f.v;

  const int bound = std::min(rows, cols);
  for (int t = 0; t < bound; ++t) {
    for (;;) {
      // Move a nonzero entry of minimal absolute value to the pivot slot.
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (d.at(i, j) != 0 &&
              (pi < 0 || abs_less(d.at(i, j), d.at(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) { t = bound; break; }  // remaining submatrix is zero
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool reduced = true;
      for (int i = t + 1; i < rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);  // truncated quotient
        if (q != 0) {
          add_row(d, i, t, -q);
          add_row(u, i, t, -q);
        }
        if (d.at(i, t) != 0) reduced = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        if (q != 0) {
          add_col(d, j, t, -q);
          add_col(v, j, t, -q);
        }
        if (d.at(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // Pivot must divide every remaining entry; if not, fold the offending
      // row into row t and keep reducing.
      int bi = -1, bj = -1;
      for (int i = t + 1; i < rows && bi < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      add_row(d, t, bi, 1);
      add_row(u, t, bi, 1);
    }
    if (t == bound) break;
  }

  for (int t = 0; t < bound; ++t)
    if (d.at(t, t) < 0) {
      for (int j = 0; j < cols; ++j) d.at(t, j) = -d.at(t, j);
      for (int j = 0; j < rows; ++j) u.at(t, j) = -u.at(t, j);
    }
  return f;
}

namespace {

// Vertical stack of (m - 1) over mats: a (k n) x n matrix.
IntMatrix stacked_differences(const std::vector<IntMatrix>& mats) {
  if (mats.empty()) throw std::invalid_argument("empty matrix list");
  const int n = mats.front().rows();
  for (const IntMatrix& m : mats)
    if (!m.is_square() || m.rows() != n)
      throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix stack(static_cast<int>(mats.size()) * n, n);
  for (size_t k = 0; k < mats.size(); ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        stack.at(static_cast<int>(k) * n + i, j) =
            mats[k].at(i, j) - (i == j ? 1 : 0);
  return stack;
}

}  // namespace

IntMatrix fixed_sublattice(const std::vector<IntMatrix>& mats) {
  IntMatrix stack = stacked_differences(mats);
  const int n = stack.cols();
  SmithForm f = smith_normal_form(stack);
  // Kernel basis: columns of v whose diagonal entry vanishes (or lies past
  // the diagonal).  Unimodularity of v makes the basis saturated.
  std::vector<int> keep;
  const int diag = std::min(stack.rows(), n);
  for (int j = 0; j < n; ++j)
    if (j >= diag || f.d.at(j, j) == 0) keep.push_back(j);
  IntMatrix basis(n, static_cast<int>(keep.size()));
  for (int i = 0; i < n; ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      basis.at(i, static_cast<int>(j)) = f.v.at(i, keep[j]);
  return basis;
}

std::vector<Int> coinvariant_torsion(const std::vector<IntMatrix>& mats) {
  IntMatrix stack = stacked_differences(mats).transpose();  // n x (k n)
  SmithForm f = smith_normal_form(stack);
  std::vector<Int> divisors;
  const int diag = std::min(stack.rows(), stack.cols());
  for (int i = 0; i < diag; ++i)
    if (f.d.at(i, i) > 1) divisors.push_back(f.d.at(i, i));
  return divisors;
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

namespace {

void extend_partition(int remaining, int max_part, std::vector<int>& prefix,
                      std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    extend_partition(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int m) {
  if (m < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend_partition(m, m == 0 ? 1 : m, prefix, out);
  return out;
}

namespace {

Int pow_int(const Int& base, int e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

GroupOrder classical_group_order(ClassicalKind kind, int dim, const Int& q,
                                 bool split) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be an odd prime power");
  if (kind == ClassicalKind::symplectic && dim % 2 != 0)
    throw std::invalid_argument("symplectic groups have even dimension");

  GroupOrder ord{1, 1, 1};
  if (dim == 0) return ord;

  switch (kind) {
    case ClassicalKind::symplectic: {
      int a = dim / 2;
      ord.p_part = pow_int(q, a * a);
      for (int i = 1; i <= a; ++i) ord.p_prime_part *= pow_int(q, 2 * i) - 1;
      break;
    }
    case ClassicalKind::special_orthogonal:
    case ClassicalKind::orthogonal: {
      if (dim % 2 == 1) {
        int a = (dim - 1) / 2;
        ord.p_part = pow_int(q, a * a);
        for (int i = 1; i <= a; ++i) ord.p_prime_part *= pow_int(q, 2 * i) - 1;
      } else {
        int a = dim / 2;
        int eps = split ? 1 : -1;
        ord.p_part = pow_int(q, a * (a - 1));
        ord.p_prime_part = pow_int(q, a) - eps;
        for (int i = 1; i < a; ++i) ord.p_prime_part *= pow_int(q, 2 * i) - 1;
      }
      if (kind == ClassicalKind::orthogonal) ord.p_prime_part *= 2;
      break;
    }
  }
  ord.total = ord.p_prime_part * ord.p_part;
  return ord;
}

bool solve_rational_system(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                           std::vector<Rat>& out) {
  const size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("system not square");
  if (b.size() != n) throw std::invalid_argument("rhs size mismatch");

  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return false;
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat c = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= c * a[k][j];
      b[i] -= c * b[k];
    }
  }
  out.assign(n, Rat(0));
  for (size_t k = 0; k < n; ++k) out[k] = b[k] / a[k][k];
  return true;
}

}  // namespace upacket
