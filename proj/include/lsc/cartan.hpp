#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "lsc/numeric.hpp"

namespace lsc {

// Rank-2 generalized Cartan matrix
//
//     ( 2   -a1 )
//     ( -a2   2 )
//
// Finite dihedral Weyl group for a1*a2 < 4, infinite dihedral for a1*a2 > 4.
// The affine case a1*a2 = 4 is rejected: det A = 0 there, and the fundamental
// weights stop being a coordinate basis of the weight lattice.
class CartanMatrix {
 public:
  CartanMatrix(std::int64_t a1, std::int64_t a2);

  std::int64_t a1() const { return a1_; }
  std::int64_t a2() const { return a2_; }
  std::int64_t det() const { return 4 - a1_ * a2_; }

  bool finite_type() const { return a1_ * a2_ < 4; }
  bool hyperbolic() const { return a1_ * a2_ > 4; }

  // Order of r1*r2, i.e. the dihedral parameter m(1,2); 0 means infinite.
  std::int64_t dihedral_order() const;

 private:
  std::int64_t a1_;
  std::int64_t a2_;
};

// Integral weight m1*Lambda1 + m2*Lambda2, in fundamental-weight coordinates.
struct Weight {
  Int m1;
  Int m2;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.m1.compare(b.m1); c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    auto c = a.m2.compare(b.m2);
    return c < 0    ? std::strong_ordering::less
           : c == 0 ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }

  Weight operator+(const Weight& o) const { return {m1 + o.m1, m2 + o.m2}; }
  Weight operator-(const Weight& o) const { return {m1 - o.m1, m2 - o.m2}; }
  Weight operator-() const { return {-m1, -m2}; }
  Weight operator*(const Int& k) const { return {k * m1, k * m2}; }
};

std::string to_string(const Weight& w);           // "(m1,m2)"
Weight parse_weight(std::string_view s);          // "m1,m2" or "(m1,m2)"

// Element c1*alpha1 + c2*alpha2 of the root lattice Q.
struct RootVector {
  Int c1;
  Int c2;

  friend bool operator==(const RootVector&, const RootVector&) = default;

  Int height() const { return c1 + c2; }
  Int abs_sum() const { return abs(c1) + abs(c2); }
  bool in_positive_cone() const { return c1 >= 0 && c2 >= 0; }
};

// Element d1*alpha1^vee + d2*alpha2^vee of the coroot lattice.
struct CorootVector {
  Int d1;
  Int d2;

  friend bool operator==(const CorootVector&, const CorootVector&) = default;
};

// <mu, co> = m1*d1 + m2*d2; the pairing is a coordinate projection because
// <Lambda_i, alpha_j^vee> = delta_ij.
inline Int pairing(const Weight& mu, const CorootVector& co) {
  return mu.m1 * co.d1 + mu.m2 * co.d2;
}

inline Weight fundamental_weight(int i) {
  return i == 1 ? Weight{1, 0} : Weight{0, 1};
}

// lambda = Lambda1 - Lambda2, the extremal weight this library revolves around.
inline Weight lambda_weight() { return {1, -1}; }

inline RootVector simple_root_vector(int i) {
  return i == 1 ? RootVector{1, 0} : RootVector{0, 1};
}

inline CorootVector simple_coroot(int i) {
  return i == 1 ? CorootVector{1, 0} : CorootVector{0, 1};
}

// alpha_1 = (2, -a2), alpha_2 = (-a1, 2) in weight coordinates: the unique
// solution of <alpha_i, alpha_j^vee> = a_ji.
Weight simple_root_weight(const CartanMatrix& cm, int i);

// Columnwise application of A; exact and injective since det != 0.
Weight root_to_weight(const CartanMatrix& cm, const RootVector& r);

// Inverse of root_to_weight; nullopt when the weight is not in the root lattice.
std::optional<RootVector> weight_to_root(const CartanMatrix& cm, const Weight& w);

// r_i(mu) = mu - <mu, alpha_i^vee> alpha_i
Weight reflect_simple(const CartanMatrix& cm, int i, const Weight& mu);

// r_j on root coordinates: r_j(alpha_k) = alpha_k - a_jk alpha_j.
RootVector reflect_simple_root(const CartanMatrix& cm, int j, const RootVector& r);

// r_j on coroot coordinates (same formulas with a1 and a2 swapped).
CorootVector reflect_simple_coroot(const CartanMatrix& cm, int j, const CorootVector& c);

inline bool is_dominant(const Weight& mu) { return mu.m1 >= 0 && mu.m2 >= 0; }
inline bool is_antidominant(const Weight& mu) { return mu.m1 <= 0 && mu.m2 <= 0; }

// <-r1(lambda), alpha_2^vee>, computed through reflect_simple/pairing and
// checked against the closed form -a2 + 1. A regression probe for the
// coordinate layer.
Int check_minus_r1_lambda_pairing(const CartanMatrix& cm);

}  // namespace lsc
