#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lsc/cartan.hpp"
#include "lsc/weyl.hpp"

namespace lsc {

// The contract shared by LS paths and their tensors: weights, the counting
// functions, and the partial raising/lowering operators. All in-scope
// crystals are normal, so phi_i - eps_i = <wt, alpha_i^vee> holds throughout.
template <class B>
concept CrystalElement =
    std::equality_comparable<B> && std::copy_constructible<B> &&
    requires(const B& b, const CartanMatrix& cm, int i) {
      { b.weight() } -> std::convertible_to<Weight>;
      { b.epsilon(i) } -> std::convertible_to<Int>;
      { b.phi(i) } -> std::convertible_to<Int>;
      { b.raise(cm, i) } -> std::same_as<std::optional<B>>;
      { b.lower(cm, i) } -> std::same_as<std::optional<B>>;
    };

template <CrystalElement B>
std::optional<B> raise_n(const CartanMatrix& cm, const B& b, int i, const Int& n) {
  std::optional<B> cur = b;
  for (Int k = 0; k < n && cur; ++k) cur = cur->raise(cm, i);
  return cur;
}

template <CrystalElement B>
std::optional<B> lower_n(const CartanMatrix& cm, const B& b, int i, const Int& n) {
  std::optional<B> cur = b;
  for (Int k = 0; k < n && cur; ++k) cur = cur->lower(cm, i);
  return cur;
}

// S_i b: apply f_i <wt,alpha_i^vee> times when the pairing is nonnegative,
// e_i that many times otherwise. Total on normal crystals.
template <CrystalElement B>
B s_act(const CartanMatrix& cm, int i, const B& b) {
  const Int n = pairing(b.weight(), simple_coroot(i));
  const std::optional<B> out = (n >= 0) ? lower_n(cm, b, i, n) : raise_n(cm, b, i, -n);
  if (!out) throw std::logic_error("S_i ran out of operators; element is not normal");
  return *out;
}

// S_w via a reduced word, rightmost letter first.
template <CrystalElement B>
B weyl_act(const CartanMatrix& cm, const B& b, const WeylWord& w) {
  B cur = b;
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) cur = s_act(cm, *it, cur);
  return cur;
}

// Bounded extremality: every Weyl translate S_w b with l(w) <= bound must be
// i-highest when <wt, alpha_i^vee> >= 0 and i-lowest when <= 0. False on the
// first witness. The Weyl group is infinite in hyperbolic type, so this is
// necessarily a bounded check.
template <CrystalElement B>
bool is_extremal_bounded(const CartanMatrix& cm, const B& b, std::int64_t max_word_length) {
  for (const WeylWord& w : enumerate_words(cm, max_word_length)) {
    const B c = weyl_act(cm, b, w);
    const Weight wt = c.weight();
    for (int i : {1, 2}) {
      const Int n = pairing(wt, simple_coroot(i));
      if (n >= 0 && c.raise(cm, i)) return false;
      if (n <= 0 && c.lower(cm, i)) return false;
    }
  }
  return true;
}

// Ordered tensor product b_1 (x) ... (x) b_m with the standard signature
// rule, folded from the left. Homogeneous over path-like normal elements;
// the -infinity conventions of one-element crystals never arise here.
template <CrystalElement B>
class Tensor {
 public:
  explicit Tensor(std::vector<B> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("tensor needs at least one factor");
  }

  static Tensor power(const B& b, std::size_t m) {
    return Tensor(std::vector<B>(m, b));
  }

  const std::vector<B>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  const B& factor(std::size_t k) const { return factors_.at(k); }

  Weight weight() const {
    Weight w = factors_.front().weight();
    for (std::size_t k = 1; k < factors_.size(); ++k) w = w + factors_[k].weight();
    return w;
  }

  // eps(P (x) b) = max{eps(P), eps(b) - <wt(P), alpha_i^vee>}
  Int epsilon(int i) const {
    Int eps = factors_.front().epsilon(i);
    Weight wt = factors_.front().weight();
    for (std::size_t k = 1; k < factors_.size(); ++k) {
      eps = std::max(eps, Int(factors_[k].epsilon(i) - pairing(wt, simple_coroot(i))));
      wt = wt + factors_[k].weight();
    }
    return eps;
  }

  // phi(P (x) b) = max{phi(b), phi(P) + <wt(b), alpha_i^vee>}
  Int phi(int i) const {
    Int ph = factors_.front().phi(i);
    for (std::size_t k = 1; k < factors_.size(); ++k)
      ph = std::max(Int(factors_[k].phi(i)),
                    Int(ph + pairing(factors_[k].weight(), simple_coroot(i))));
    return ph;
  }

  std::optional<Tensor> raise(const CartanMatrix& cm, int i) const {
    return apply(cm, i, /*lowering=*/false);
  }
  std::optional<Tensor> lower(const CartanMatrix& cm, int i) const {
    return apply(cm, i, /*lowering=*/true);
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  // Which factor the operator lands on: descend the left-fold prefix tree.
  // e_i goes left when phi(prefix) >= eps(last factor), f_i when strictly
  // greater.
  std::size_t select(int i, bool lowering) const {
    std::vector<Int> phi_prefix(factors_.size());
    phi_prefix[0] = factors_[0].phi(i);
    for (std::size_t k = 1; k < factors_.size(); ++k)
      phi_prefix[k] = std::max(Int(factors_[k].phi(i)),
                               Int(phi_prefix[k - 1] +
                                   pairing(factors_[k].weight(), simple_coroot(i))));
    std::size_t k = factors_.size() - 1;
    while (k > 0) {
      const Int eps_k = factors_[k].epsilon(i);
      const bool go_left = lowering ? phi_prefix[k - 1] > eps_k : phi_prefix[k - 1] >= eps_k;
      if (!go_left) break;
      --k;
    }
    return k;
  }

  std::optional<Tensor> apply(const CartanMatrix& cm, int i, bool lowering) const {
    const std::size_t k = select(i, lowering);
    auto moved = lowering ? factors_[k].lower(cm, i) : factors_[k].raise(cm, i);
    if (!moved) return std::nullopt;
    std::vector<B> out = factors_;
    out[k] = *std::move(moved);
    return Tensor(std::move(out));
  }

  std::vector<B> factors_;
};

}  // namespace lsc
