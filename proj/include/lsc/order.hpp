#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lsc/cartan.hpp"
#include "lsc/weyl.hpp"

namespace lsc {

// Bounds that make the orbit-order searches effective. The underlying
// definitions quantify over all positive real roots and all chain lengths;
// every answer below is "within this config". Enlarging a config can only
// turn false into true, never the reverse.
struct OrderConfig {
  std::int64_t max_reflection_length = 9;  // root pool: reflections up to this word length
  std::int64_t max_chain_length = 12;      // chain search depth

  void check() const;
};

// All (beta, r_beta xi) with beta in the bounded root pool and
// <xi, beta^vee> < 0. One step of a descending chain.
std::vector<std::pair<RealRoot, Weight>> step_candidates(const CartanMatrix& cm,
                                                         const Weight& xi,
                                                         const OrderConfig& cfg);

// nu >= nu' in the orbit order: a chain nu = xi_0, ..., xi_p = nu' with
// xi_q = r_{beta_q}(xi_{q-1}) and <xi_{q-1}, beta_q^vee> < 0 at every step
// (p = 0 allowed). False means "no chain found within cfg".
bool greater_equal(const CartanMatrix& cm, const Weight& nu, const Weight& nu_prime,
                   const OrderConfig& cfg);

// Maximal length of such a chain; nullopt when nu >= nu' does not hold
// within cfg.
std::optional<std::int64_t> dist(const CartanMatrix& cm, const Weight& nu,
                                 const Weight& nu_prime, const OrderConfig& cfg);

// A sigma-chain for (nu, nu'): every step has dist(xi_{q-1}, xi_q) = 1 and
// sigma * <xi_{q-1}, beta_q^vee> is a negative integer. Requires nu > nu'
// strictly; returns false when that fails within cfg.
bool sigma_chain_exists(const CartanMatrix& cm, const Rat& sigma, const Weight& nu,
                        const Weight& nu_prime, const OrderConfig& cfg);

// The witnessing chain as (beta_q, xi_q) steps, xi_p = nu'; nullopt when no
// chain exists within cfg. Each step can be re-verified independently.
using SigmaChain = std::vector<std::pair<RealRoot, Weight>>;
std::optional<SigmaChain> find_sigma_chain(const CartanMatrix& cm, const Rat& sigma,
                                           const Weight& nu, const Weight& nu_prime,
                                           const OrderConfig& cfg);

}  // namespace lsc
