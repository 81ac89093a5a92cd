#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lsc/cartan.hpp"

namespace lsc {

// Element of the rank-2 Weyl group in canonical form: the identity, or the
// alternating reduced word r_first r_other r_first ... of the given length.
// In finite dihedral type the longest element has two reduced expressions;
// its canonical form starts with letter 1. Letters act right-to-left: the
// rightmost letter is applied first.
class WeylWord {
 public:
  WeylWord() = default;  // identity

  static WeylWord identity() { return {}; }

  // Raw alternating word; callers are responsible for canonical bounds
  // (enumerate_words and append take care of that).
  static WeylWord alternating(int first, std::int64_t len);

  bool is_identity() const { return len_ == 0; }
  std::int64_t length() const { return len_; }
  int first() const { return first_; }
  int last() const;

  // Letters left to right.
  std::vector<int> letters() const;

  std::string str() const;  // "e", "r1", "r2r1", ...

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  friend std::strong_ordering operator<=>(const WeylWord& a, const WeylWord& b) {
    if (a.len_ != b.len_) return a.len_ <=> b.len_;
    return a.first_ <=> b.first_;
  }

 private:
  WeylWord(int first, std::int64_t len) : first_(first), len_(len) {}

  int first_ = 0;
  std::int64_t len_ = 0;
};

WeylWord parse_word(std::string_view s);  // inverse of str()

// w * r_j, folded to canonical form (cancellation, plus the braid fold in
// finite type).
WeylWord append(const CartanMatrix& cm, const WeylWord& w, int j);

// Canonical form of x*y.
WeylWord compose(const CartanMatrix& cm, const WeylWord& x, const WeylWord& y);

// w(mu): simple reflections composed right-to-left along the word.
Weight act(const CartanMatrix& cm, const WeylWord& w, const Weight& mu);
RootVector act_root(const CartanMatrix& cm, const WeylWord& w, const RootVector& r);
CorootVector act_coroot(const CartanMatrix& cm, const WeylWord& w, const CorootVector& c);

// All canonical words of length <= max_len, sorted by (length, first letter).
std::vector<WeylWord> enumerate_words(const CartanMatrix& cm, std::int64_t max_len);

// A positive real root beta together with its dual root and the reflection
// r_beta it defines.
struct RealRoot {
  RootVector root;
  CorootVector coroot;
  WeylWord reflection_word;  // odd-length canonical word equal to r_beta
};

// mu - <mu, beta^vee> beta
Weight reflect_by(const CartanMatrix& cm, const RealRoot& beta, const Weight& mu);

// All distinct reflections with canonical word length <= max_reflection_length,
// each paired with its positive root and dual root; sorted by word length,
// then first letter.
std::vector<RealRoot> positive_real_roots(const CartanMatrix& cm,
                                          std::int64_t max_reflection_length);

// Orbit points {w mu : l(w) <= bound}, deduplicated by weight value. Distinct
// canonical words landing on the same weight are stabilizer witnesses and are
// reported, never silently merged.
struct Orbit {
  std::vector<std::pair<WeylWord, Weight>> elements;  // first word per weight
  std::vector<std::pair<WeylWord, WeylWord>> collisions;  // (later word, first word)

  bool contains(const Weight& w) const;
};

Orbit orbit(const CartanMatrix& cm, const Weight& mu, std::int64_t max_word_length);

}  // namespace lsc
