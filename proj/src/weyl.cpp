#include "upacket/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace upacket {

SignedPermutation::SignedPermutation(std::vector<int> image)
    : image_(std::move(image)) {
  const int m = rank();
  std::vector<bool> seen(m, false);
  for (int v : image_) {
    int a = std::abs(v);
    if (a < 1 || a > m || seen[a - 1])
      throw std::invalid_argument("invalid signed permutation image");
    seen[a - 1] = true;
  }
}

SignedPermutation SignedPermutation::identity(int m) {
  if (m < 0) throw std::invalid_argument("negative rank");
  std::vector<int> image(m);
  for (int i = 0; i < m; ++i) image[i] = i + 1;
  return SignedPermutation(std::move(image));
}

int SignedPermutation::apply(int i) const {
  int a = std::abs(i);
  if (a < 1 || a > rank()) throw std::invalid_argument("index out of range");
  int v = image_[a - 1];
  return i > 0 ? v : -v;
}

SignedPermutation SignedPermutation::compose(
    const SignedPermutation& other) const {
  if (rank() != other.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<int> image(rank());
  for (int i = 1; i <= rank(); ++i) image[i - 1] = apply(other.apply(i));
  return SignedPermutation(std::move(image));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> image(rank());
  for (int i = 1; i <= rank(); ++i) {
    int v = image_[i - 1];
    image[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(image));
}

bool SignedPermutation::is_identity() const {
  for (int i = 1; i <= rank(); ++i)
    if (image_[i - 1] != i) return false;
  return true;
}

bool SignedCycleType::operator<(const SignedCycleType& other) const {
  if (mu.parts != other.mu.parts) return mu.parts < other.mu.parts;
  return nu.parts < other.nu.parts;
}

std::string SignedCycleType::to_string() const {
  return "mu=" + mu.to_string() + " nu=" + nu.to_string();
}

SignedCycleType signed_cycle_type(const SignedPermutation& w) {
  const int m = w.rank();
  std::vector<bool> seen(m, false);
  std::vector<int> mu, nu;
  for (int i = 1; i <= m; ++i) {
    if (seen[i - 1]) continue;
    int j = i;
    int len = 0;
    do {
      seen[std::abs(j) - 1] = true;
      j = w.apply(j);
      ++len;
    } while (std::abs(j) != i);
    (j == i ? mu : nu).push_back(len);
  }
  std::sort(mu.rbegin(), mu.rend());
  std::sort(nu.rbegin(), nu.rend());
  return SignedCycleType{Partition{mu}, Partition{nu}};
}

bool is_elliptic(const SignedPermutation& w) {
  return signed_cycle_type(w).mu.parts.empty();
}

Int hyperoctahedral_order(int m) {
  Int r = 1;
  for (int i = 1; i <= m; ++i) r *= 2 * i;
  return r;
}

Int centralizer_order_eta(int m) { return hyperoctahedral_order(m); }

namespace {

// prod over multiplicities a_k of k in the partition: (2k)^{a_k} a_k!
Int cycle_centralizer_factor(const Partition& p) {
  std::map<int, int> mult;
  for (int part : p.parts) ++mult[part];
  Int r = 1;
  for (auto [k, a] : mult) {
    for (int i = 0; i < a; ++i) r *= 2 * k;
    for (int i = 2; i <= a; ++i) r *= i;
  }
  return r;
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(int m) {
  if (m < 1) throw std::invalid_argument("rank must be positive");
  const Int group = hyperoctahedral_order(m);
  std::vector<ConjugacyClass> out;
  for (int k = m; k >= 0; --k) {
    for (const Partition& mu : partitions(k)) {
      for (const Partition& nu : partitions(m - k)) {
        Int z = cycle_centralizer_factor(mu) * cycle_centralizer_factor(nu);
        out.push_back(ConjugacyClass{SignedCycleType{mu, nu}, group / z});
      }
    }
  }
  return out;
}

std::vector<SignedPermutation> all_elements(int m) {
  std::vector<int> base(m);
  for (int i = 0; i < m; ++i) base[i] = i + 1;
  std::vector<SignedPermutation> out;
  std::sort(base.begin(), base.end());
  do {
    for (unsigned signs = 0; signs < (1u << m); ++signs) {
      std::vector<int> image(base);
      for (int i = 0; i < m; ++i)
        if (signs & (1u << i)) image[i] = -image[i];
      out.emplace_back(std::move(image));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

SignedPermutation elliptic_representative(const Partition& nu, int m) {
  if (nu.weight() != m)
    throw std::invalid_argument("partition weight must equal the rank");
  std::vector<int> image(m);
  int start = 1;
  for (int len : nu.parts) {
    // i -> i+1 within the block, last index -> -start
    int last = start + len - 1;
    for (int i = start; i < last; ++i) image[i - 1] = i + 1;
    image[last - 1] = -start;
    start += len;
  }
  return SignedPermutation(std::move(image));
}

std::string to_cycle_string(const SignedPermutation& w) {
  const int m = w.rank();
  std::vector<bool> seen(m, false);
  std::ostringstream os;
  bool any = false;
  for (int i = 1; i <= m; ++i) {
    if (seen[i - 1] || w.apply(i) == i) {
      seen[i - 1] = true;
      continue;
    }
    any = true;
    os << "(";
    // Walk the signed orbit of +i to its end; a positive cycle closes after
    // r steps, a negative cycle passes through -i and closes after 2r.
    int j = i;
    bool first = true;
    do {
      if (!first) os << " ";
      first = false;
      os << j;
      seen[std::abs(j) - 1] = true;
      j = w.apply(j);
    } while (j != i);
    os << ")";
  }
  return any ? os.str() : "()";
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_space();
    return pos >= s.size();
  }
};

int parse_signed_index(Cursor& c, int m) {
  c.skip_space();
  bool neg = false;
  if (c.pos < c.s.size() && (c.s[c.pos] == '-' || c.s[c.pos] == '+')) {
    neg = c.s[c.pos] == '-';
    ++c.pos;
  }
  size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
    ++c.pos;
  if (c.pos == start) throw std::invalid_argument("expected an index");
  int v = std::stoi(c.s.substr(start, c.pos - start));
  if (v < 1 || v > m)
    throw std::invalid_argument("cycle index out of range 1.." + std::to_string(m));
  return neg ? -v : v;
}

}  // namespace

SignedPermutation parse_signed_permutation(const std::string& text, int m) {
  if (m < 0) throw std::invalid_argument("negative rank");
  std::vector<int> image(m);
  std::vector<bool> assigned(m, false);
  for (int i = 0; i < m; ++i) image[i] = i + 1;

  Cursor c{text};
  while (!c.done()) {
    if (c.s[c.pos] != '(') throw std::invalid_argument("expected '('");
    ++c.pos;
    std::vector<int> cycle;
    c.skip_space();
    while (c.pos < c.s.size() && c.s[c.pos] != ')') {
      cycle.push_back(parse_signed_index(c, m));
      c.skip_space();
      if (c.pos < c.s.size() && c.s[c.pos] == ',') ++c.pos;
    }
    if (c.pos >= c.s.size()) throw std::invalid_argument("unterminated cycle");
    ++c.pos;  // ')'
    if (cycle.empty()) continue;  // "()" stands for the identity

    // Entries map cyclically, w(c_k) = c_{k+1}; negative cycles list the full
    // signed orbit, so an absolute index may be determined twice.  Both
    // determinations must agree.
    for (size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      int a = std::abs(from);
      int v = from > 0 ? to : -to;
      if (assigned[a - 1]) {
        if (image[a - 1] != v)
          throw std::invalid_argument("inconsistent cycle notation");
      } else {
        assigned[a - 1] = true;
        image[a - 1] = v;
      }
    }
  }
  return SignedPermutation(std::move(image));
}

}  // namespace upacket
