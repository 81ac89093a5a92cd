#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsc/crystal.hpp"
#include "lsc/path.hpp"

namespace lsc {

// Dilation: directions scaled by m, cuts unchanged; an element of B(m*mu).
LSPath dilate(const LSPath& pi, std::int64_t m);

// pi_1 * ... * pi_m: m LS paths of one shape mu traversed back to back, each
// in a 1/m stretch of time. Contains B(m*mu) and is isomorphic to the m-fold
// tensor power of B(mu); operators are transported through that isomorphism
// (the direct corner-profile route exists as a differential check via
// flatten()).
class Concatenation {
 public:
  explicit Concatenation(std::vector<LSPath> pieces);

  const std::vector<LSPath>& pieces() const { return pieces_; }
  const Weight& piece_shape() const { return pieces_.front().shape(); }
  std::size_t size() const { return pieces_.size(); }

  // Sum_{l<k} pi_l(1) + pi_k(m t - k + 1) on [(k-1)/m, k/m].
  std::pair<Rat, Rat> evaluate(const Rat& t) const;

  // The same map as one piecewise-linear path on [0,1].
  Polyline flatten() const;

  Tensor<LSPath> to_tensor() const { return Tensor<LSPath>(pieces_); }
  static Concatenation from_tensor(const Tensor<LSPath>& t) {
    return Concatenation(t.factors());
  }

  Weight weight() const { return to_tensor().weight(); }
  Int epsilon(int i) const { return to_tensor().epsilon(i); }
  Int phi(int i) const { return to_tensor().phi(i); }
  std::optional<Concatenation> raise(const CartanMatrix& cm, int i) const;
  std::optional<Concatenation> lower(const CartanMatrix& cm, int i) const;

  friend bool operator==(const Concatenation&, const Concatenation&) = default;

 private:
  std::vector<LSPath> pieces_;
};

// Cut a path of shape m*mu into m unit-time pieces of shape mu:
// pi_k(t) = pi(t/m + (k-1)/m) - pi((k-1)/m), each canonicalized.
Concatenation split(const LSPath& pi, std::int64_t m);

// The similarity embedding of B(mu) into B(mu)^(x m): dilate by m, split into
// m pieces, read the pieces as tensor factors.
Tensor<LSPath> sigma_m(const LSPath& pi, std::int64_t m);

struct SimilarityReport {
  struct Entry {
    std::string name;
    bool pass;
  };
  std::vector<Entry> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

// Checks the defining identities of the similarity map on one path: the
// straight path maps to a tensor power, weights and eps/phi scale by m, and
// the embedding intertwines e_i / f_i with their m-th powers.
SimilarityReport check_similarity(const CartanMatrix& cm, const LSPath& pi, std::int64_t m);

// sigma_n applied factorwise to sigma_m(pi) equals sigma_{mn}(pi) as mn-fold
// tensors.
bool check_diagram(const CartanMatrix& cm, const LSPath& pi, std::int64_t m, std::int64_t n);

}  // namespace lsc
