#include "lsc/order.hpp"

#include <map>
#include <stdexcept>

namespace lsc {

void OrderConfig::check() const {
  if (max_reflection_length < 1 || max_chain_length < 1)
    throw std::invalid_argument("order config bounds must be >= 1");
}

std::vector<std::pair<RealRoot, Weight>> step_candidates(const CartanMatrix& cm,
                                                         const Weight& xi,
                                                         const OrderConfig& cfg) {
  cfg.check();
  std::vector<std::pair<RealRoot, Weight>> out;
  for (const RealRoot& beta : positive_real_roots(cm, cfg.max_reflection_length)) {
    if (pairing(xi, beta.coroot) < 0) out.emplace_back(beta, reflect_by(cm, beta, xi));
  }
  return out;
}

namespace {

// Each chain step adds a positive integer multiple of a positive root, so the
// root-coordinate gap nu' - xi shrinks componentwise toward zero and its
// height bounds the remaining chain length. That makes the step digraph
// between two orbit points finite and acyclic.
struct ChainSearch {
  const CartanMatrix& cm;
  const Weight& target;
  const OrderConfig& cfg;
  std::vector<RealRoot> pool;

  ChainSearch(const CartanMatrix& cm_, const Weight& target_, const OrderConfig& cfg_)
      : cm(cm_), target(target_), cfg(cfg_),
        pool(positive_real_roots(cm_, cfg_.max_reflection_length)) {}

  // Height of target - xi when it lies in the positive root cone; nullopt
  // otherwise (xi can no longer reach the target).
  std::optional<Int> gap_height(const Weight& xi) const {
    const auto r = weight_to_root(cm, target - xi);
    if (!r || !r->in_positive_cone()) return std::nullopt;
    return r->height();
  }

  // Longest chain from xi to target, chains capped at `budget` steps;
  // nullopt when unreachable. Memo is safe because budget only binds when it
  // is below the height gap, and then we disable it.
  std::map<Weight, std::optional<std::int64_t>> memo;
  bool use_memo = true;

  std::optional<std::int64_t> longest(const Weight& xi, std::int64_t budget) {
    if (xi == target) return 0;
    if (budget <= 0) return std::nullopt;
    if (use_memo) {
      if (auto it = memo.find(xi); it != memo.end()) return it->second;
    }
    std::optional<std::int64_t> best;
    for (const RealRoot& beta : pool) {
      if (pairing(xi, beta.coroot) >= 0) continue;
      const Weight next = reflect_by(cm, beta, xi);
      if (!gap_height(next)) continue;
      const auto sub = longest(next, budget - 1);
      if (sub && (!best || *sub + 1 > *best)) best = *sub + 1;
    }
    if (use_memo) memo.emplace(xi, best);
    return best;
  }
};

std::optional<std::int64_t> longest_chain(const CartanMatrix& cm, const Weight& nu,
                                          const Weight& nu_prime, const OrderConfig& cfg) {
  ChainSearch search(cm, nu_prime, cfg);
  const auto gap = search.gap_height(nu);
  if (!gap) return std::nullopt;
  // A chain has at most gap-height steps; when that fits the budget the cap
  // never binds and memoization on the weight alone is sound.
  search.use_memo = (*gap <= cfg.max_chain_length);
  return search.longest(nu, cfg.max_chain_length);
}

}  // namespace

bool greater_equal(const CartanMatrix& cm, const Weight& nu, const Weight& nu_prime,
                   const OrderConfig& cfg) {
  cfg.check();
  return longest_chain(cm, nu, nu_prime, cfg).has_value();
}

std::optional<std::int64_t> dist(const CartanMatrix& cm, const Weight& nu,
                                 const Weight& nu_prime, const OrderConfig& cfg) {
  cfg.check();
  return longest_chain(cm, nu, nu_prime, cfg);
}

namespace {

// DFS over sigma-admissible steps: adjacent in the order (dist = 1) and
// sigma * pairing a negative integer. Appends the found steps to `chain`.
bool sigma_chain_from(const CartanMatrix& cm, const Rat& sigma, const Weight& xi,
                      const Weight& target, const OrderConfig& cfg, std::int64_t budget,
                      SigmaChain& chain) {
  if (xi == target) return true;
  if (budget <= 0) return false;
  for (const auto& [beta, next] : step_candidates(cm, xi, cfg)) {
    const Rat scaled = sigma * Rat(pairing(xi, beta.coroot));
    if (!is_integer(scaled)) continue;  // scaled < 0 already: pairing < 0, sigma > 0
    const auto d = dist(cm, xi, next, cfg);
    if (!d || *d != 1) continue;
    // Prune: `next` must still be able to reach the target.
    const auto r = weight_to_root(cm, target - next);
    if (!r || !r->in_positive_cone()) continue;
    chain.emplace_back(beta, next);
    if (sigma_chain_from(cm, sigma, next, target, cfg, budget - 1, chain)) return true;
    chain.pop_back();
  }
  return false;
}

}  // namespace

std::optional<SigmaChain> find_sigma_chain(const CartanMatrix& cm, const Rat& sigma,
                                           const Weight& nu, const Weight& nu_prime,
                                           const OrderConfig& cfg) {
  cfg.check();
  if (sigma <= 0 || sigma >= 1) throw std::invalid_argument("sigma must lie in (0,1)");
  if (nu == nu_prime) return std::nullopt;  // the definition requires nu > nu' strictly
  if (!greater_equal(cm, nu, nu_prime, cfg)) return std::nullopt;
  SigmaChain chain;
  if (!sigma_chain_from(cm, sigma, nu, nu_prime, cfg, cfg.max_chain_length, chain))
    return std::nullopt;
  return chain;
}

bool sigma_chain_exists(const CartanMatrix& cm, const Rat& sigma, const Weight& nu,
                        const Weight& nu_prime, const OrderConfig& cfg) {
  return find_sigma_chain(cm, sigma, nu, nu_prime, cfg).has_value();
}

}  // namespace lsc
