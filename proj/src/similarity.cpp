#include "lsc/similarity.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsc {

LSPath dilate(const LSPath& pi, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  const Int mi(m);
  std::vector<Weight> dirs;
  dirs.reserve(pi.segments());
  for (const Weight& d : pi.dirs()) dirs.push_back(d * mi);
  return LSPath::make(pi.shape() * mi, std::move(dirs), pi.cuts());
}

Concatenation::Concatenation(std::vector<LSPath> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("concatenation needs at least one piece");
  for (const LSPath& p : pieces_)
    if (p.shape() != pieces_.front().shape())
      throw std::invalid_argument("concatenation pieces must share one shape");
}

std::pair<Rat, Rat> Concatenation::evaluate(const Rat& t) const {
  if (t < 0 || t > 1) throw std::domain_error("evaluation time outside [0,1]");
  const Int m(static_cast<std::int64_t>(pieces_.size()));
  // Piece index k (1-based) with (k-1)/m <= t <= k/m.
  Int k = numerator(t * m) / denominator(t * m) + 1;  // floor(t*m) + 1
  if (k > m) k = m;
  Rat x = 0, y = 0;
  for (Int l = 1; l < k; ++l) {
    const auto [px, py] = lsc::evaluate(pieces_[static_cast<std::size_t>(l - 1)], Rat(1));
    x += px;
    y += py;
  }
  const auto [px, py] =
      lsc::evaluate(pieces_[static_cast<std::size_t>(k - 1)], t * m - (k - 1));
  return {x + px, y + py};
}

Polyline Concatenation::flatten() const {
  const Int m(static_cast<std::int64_t>(pieces_.size()));
  std::vector<Weight> dirs;
  std::vector<Rat> cuts{Rat(0)};
  Int k = 0;
  for (const LSPath& p : pieces_) {
    for (std::size_t u = 0; u < p.segments(); ++u) {
      dirs.push_back(p.dirs()[u]);
      cuts.push_back((p.cuts()[u + 1] + k) / m);
    }
    ++k;
  }
  return canonical_polyline(std::move(dirs), std::move(cuts));
}

std::optional<Concatenation> Concatenation::raise(const CartanMatrix& cm, int i) const {
  auto t = to_tensor().raise(cm, i);
  if (!t) return std::nullopt;
  return from_tensor(*t);
}

std::optional<Concatenation> Concatenation::lower(const CartanMatrix& cm, int i) const {
  auto t = to_tensor().lower(cm, i);
  if (!t) return std::nullopt;
  return from_tensor(*t);
}

Concatenation split(const LSPath& pi, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("split factor must be >= 1");
  const Int mi(m);
  if (pi.shape().m1 % mi != 0 || pi.shape().m2 % mi != 0)
    throw std::invalid_argument("path shape is not divisible by the split factor");
  const Weight mu{pi.shape().m1 / mi, pi.shape().m2 / mi};

  std::vector<LSPath> pieces;
  pieces.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 1; k <= m; ++k) {
    const Rat lo(Int(k - 1), mi);
    const Rat hi(Int(k), mi);
    std::vector<Weight> dirs;
    std::vector<Rat> cuts{Rat(0)};
    for (std::size_t u = 0; u < pi.segments(); ++u) {
      const Rat l = std::max(pi.cuts()[u], lo);
      const Rat r = std::min(pi.cuts()[u + 1], hi);
      if (r <= l) continue;
      const Weight& d = pi.dirs()[u];
      if (d.m1 % mi != 0 || d.m2 % mi != 0)
        throw std::invalid_argument("path direction is not divisible by the split factor");
      dirs.push_back({d.m1 / mi, d.m2 / mi});
      cuts.push_back(r * mi - (k - 1));
    }
    pieces.push_back(LSPath::make(mu, std::move(dirs), std::move(cuts)));
  }
  return Concatenation(std::move(pieces));
}

Tensor<LSPath> sigma_m(const LSPath& pi, std::int64_t m) {
  return split(dilate(pi, m), m).to_tensor();
}

SimilarityReport check_similarity(const CartanMatrix& cm, const LSPath& pi, std::int64_t m) {
  SimilarityReport report;
  const auto add = [&](std::string name, bool pass) {
    report.entries.push_back({std::move(name), pass});
  };
  const Int mi(m);
  const Tensor<LSPath> image = sigma_m(pi, m);

  const LSPath straight = LSPath::straight(pi.shape());
  add("straight_to_power",
      sigma_m(straight, m) == Tensor<LSPath>::power(straight, static_cast<std::size_t>(m)));
  add("wt_scaling", image.weight() == pi.weight() * mi);

  for (int i : {1, 2}) {
    const std::string suffix = "_i" + std::to_string(i);
    add("eps_scaling" + suffix, image.epsilon(i) == mi * pi.epsilon(i));
    add("phi_scaling" + suffix, image.phi(i) == mi * pi.phi(i));

    const auto raised = pi.raise(cm, i);
    const auto image_raised = raise_n(cm, image, i, mi);
    add("raise_commutes" + suffix,
        raised ? (image_raised && sigma_m(*raised, m) == *image_raised) : !image_raised);

    const auto lowered = pi.lower(cm, i);
    const auto image_lowered = lower_n(cm, image, i, mi);
    add("lower_commutes" + suffix,
        lowered ? (image_lowered && sigma_m(*lowered, m) == *image_lowered) : !image_lowered);
  }
  return report;
}

bool check_diagram(const CartanMatrix& cm, const LSPath& pi, std::int64_t m, std::int64_t n) {
  (void)cm;
  const Tensor<LSPath> outer = sigma_m(pi, m);
  std::vector<LSPath> lhs;
  lhs.reserve(static_cast<std::size_t>(m * n));
  for (const LSPath& f : outer.factors()) {
    const Tensor<LSPath> inner = sigma_m(f, n);
    lhs.insert(lhs.end(), inner.factors().begin(), inner.factors().end());
  }
  return lhs == sigma_m(pi, m * n).factors();
}

}  // namespace lsc
