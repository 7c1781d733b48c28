#pragma once

#include <string>
#include <vector>

#include "upacket/algebra.hpp"

namespace upacket {

// Element of the hyperoctahedral group B_m acting on {-m,...,-1,1,...,m},
// subject to w(-i) = -w(i).  Only the images of the positive indices are
// stored.
class SignedPermutation {
 public:
  // image[i-1] = w(i), a signed index; |image| must be a permutation of 1..m.
  explicit SignedPermutation(std::vector<int> image);
  static SignedPermutation identity(int m);

  int rank() const { return static_cast<int>(image_.size()); }

  // Signed action; i ranges over {-m,...,-1,1,...,m}.
  int apply(int i) const;

  // (this o other)(i) = this(other(i)).
  SignedPermutation compose(const SignedPermutation& other) const;
  SignedPermutation inverse() const;

  bool is_identity() const;
  bool operator==(const SignedPermutation& other) const {
    return image_ == other.image_;
  }
  bool operator!=(const SignedPermutation& other) const {
    return !(*this == other);
  }
  bool operator<(const SignedPermutation& other) const {
    return image_ < other.image_;
  }

  const std::vector<int>& image() const { return image_; }

 private:
  std::vector<int> image_;
};

// Lengths of positive cycles (mu) and negative cycles (nu); a cycle through
// representative i is positive when w^r fixes i and negative when it sends i
// to -i.  |mu| + |nu| = m.
struct SignedCycleType {
  Partition mu;
  Partition nu;

  bool operator==(const SignedCycleType& other) const {
    return mu == other.mu && nu == other.nu;
  }
  bool operator<(const SignedCycleType& other) const;
  std::string to_string() const;
};

SignedCycleType signed_cycle_type(const SignedPermutation& w);

// No positive cycles; equivalently the twisted torus attached to w is
// anisotropic.
bool is_elliptic(const SignedPermutation& w);

struct ConjugacyClass {
  SignedCycleType type;
  Int size;
};

// One class per pair of partitions with |mu| + |nu| = m, sizes from the
// centralizer order prod (2k)^{a_k} a_k! over the multiplicities of both
// partitions.  Ordered by decreasing |mu|, then partition order.
std::vector<ConjugacyClass> conjugacy_classes(int m);

Int hyperoctahedral_order(int m);  // 2^m m!
Int centralizer_order_eta(int m);  // also 2^m m!

// All 2^m m! elements; intended for small m (tests, brute-force checks).
std::vector<SignedPermutation> all_elements(int m);

// A representative with one negative cycle per part of nu, on consecutive
// index blocks.  nu must be a partition of m.
SignedPermutation elliptic_representative(const Partition& nu, int m);

// Cycle notation on signed indices, e.g. "(1 -2)(3 -3)"; fixed points are
// omitted and the identity prints as "()".  Cycles are listed by increasing
// smallest absolute index and start at their positive representative.
std::string to_cycle_string(const SignedPermutation& w);
SignedPermutation parse_signed_permutation(const std::string& text, int m);

}  // namespace upacket
