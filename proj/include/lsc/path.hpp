#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lsc/cartan.hpp"
#include "lsc/order.hpp"

namespace lsc {

// Canonical piecewise-linear path data: one direction per segment, strictly
// increasing rational cuts 0 = sigma_0 < ... < sigma_s = 1, no two adjacent
// segments with equal direction. The path starts at the origin; its value is
// the running integral of the directions.
struct Polyline {
  std::vector<Weight> dirs;
  std::vector<Rat> cuts;

  friend bool operator==(const Polyline&, const Polyline&) = default;
};

// Drops zero-length segments, merges equal adjacent directions. Throws on
// malformed input (cuts not weakly increasing, endpoints not 0 and 1, size
// mismatch). Evaluation agrees pointwise with the input.
Polyline canonical_polyline(std::vector<Weight> dirs, std::vector<Rat> cuts);

// Exact value at t in fundamental-weight coordinates over Q; t must lie in [0,1].
std::pair<Rat, Rat> evaluate(const Polyline& p, const Rat& t);

// H_i along the path, sampled at the corners. H_i is affine on each segment,
// so the minimum over corners is the minimum over [0,1].
struct CornerProfile {
  std::vector<std::pair<Rat, Rat>> corners;  // (cut, H_i(cut))
  Rat min_value;                             // m_i: global minimum
  Rat end_value;                             // H_i(1) = <endpoint, alpha_i^vee>

  // Every locally minimal value of H_i is an integer for crystal elements;
  // this checks that, flat runs included.
  bool local_minima_integral() const;
};

CornerProfile corner_profile(const Polyline& p, int i);

// epsilon_i = -m_i and phi_i = H_i(1) - m_i. Throw when those are not
// nonnegative integers (the input was not a crystal element).
Int polyline_epsilon(const Polyline& p, int i);
Int polyline_phi(const Polyline& p, int i);

// Root operators on the bare piecewise-linear data. raise reflects the
// stretch between the last time H = m+1 before the first minimum and that
// minimum; lower mirrors it after the last minimum. Absent exactly when
// epsilon (resp. phi) vanishes.
std::optional<Polyline> raise_polyline(const CartanMatrix& cm, const Polyline& p, int i);
std::optional<Polyline> lower_polyline(const CartanMatrix& cm, const Polyline& p, int i);

// Lakshmibai-Seshadri path of a fixed shape mu: directions from the orbit
// W mu, strictly decreasing in the orbit order with sigma-chain certificates.
// Values are immutable; operators return fresh canonical paths; equality is
// structural on the canonical form.
class LSPath {
 public:
  // pi_mu, the straight line t -> t*mu, as an element of B(mu).
  static LSPath straight(const Weight& mu);
  // pi_nu for nu in W(shape); orbit membership is the caller's contract.
  static LSPath straight(const Weight& shape, const Weight& nu);
  // Canonicalizes raw segment data; throws on malformed input.
  static LSPath make(const Weight& shape, std::vector<Weight> dirs, std::vector<Rat> cuts);

  const Weight& shape() const { return shape_; }
  const Polyline& line() const { return line_; }
  const std::vector<Weight>& dirs() const { return line_.dirs; }
  const std::vector<Rat>& cuts() const { return line_.cuts; }
  std::size_t segments() const { return line_.dirs.size(); }
  bool is_straight() const { return line_.dirs.size() == 1; }

  Weight weight() const;  // endpoint; throws if not integral
  Int epsilon(int i) const { return polyline_epsilon(line_, i); }
  Int phi(int i) const { return polyline_phi(line_, i); }

  std::optional<LSPath> raise(const CartanMatrix& cm, int i) const;
  std::optional<LSPath> lower(const CartanMatrix& cm, int i) const;

  // Canonical text form: dirs=[(m1,m2),...];cuts=[p/q,...]
  std::string str() const;

  friend bool operator==(const LSPath&, const LSPath&) = default;

 private:
  LSPath(Weight shape, Polyline line) : shape_(std::move(shape)), line_(std::move(line)) {}

  Weight shape_;
  Polyline line_;
};

inline std::pair<Rat, Rat> evaluate(const LSPath& pi, const Rat& t) {
  return evaluate(pi.line(), t);
}

// Inverse of LSPath::str(); bit-exact round trip.
LSPath parse_ls_path(const Weight& shape, std::string_view s);

enum class PathStatus {
  valid,
  cuts_not_monotone,
  dirs_not_in_orbit,
  not_certified_within_bounds,
  endpoint_not_integral,
};

struct ValidationResult {
  PathStatus status = PathStatus::valid;
  std::string detail;

  bool ok() const { return status == PathStatus::valid; }
  explicit operator bool() const { return ok(); }
};

// Full validity check: structure, bounded orbit membership of every
// direction, a sigma_u-chain certificate for every adjacency, integral
// endpoint. "Not certified" is a bounded answer, not a disproof.
ValidationResult validate(const CartanMatrix& cm, const LSPath& pi, const OrderConfig& cfg);

}  // namespace lsc
