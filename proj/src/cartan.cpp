#include "lsc/cartan.hpp"

#include <stdexcept>

namespace lsc {

CartanMatrix::CartanMatrix(std::int64_t a1, std::int64_t a2) : a1_(a1), a2_(a2) {
  if (a1 < 0 || a2 < 0)
    throw std::invalid_argument("Cartan entries a1, a2 must be nonnegative");
  const bool both_zero = (a1 == 0 && a2 == 0);
  const bool both_pos = (a1 >= 1 && a2 >= 1);
  if (!both_zero && !both_pos)
    throw std::invalid_argument(
        "off-diagonal zero pattern must be symmetric (a1 = a2 = 0 or both >= 1)");
  if (a1 * a2 == 4)
    throw std::invalid_argument(
        "affine matrix (a1*a2 = 4) not supported: det A = 0, fundamental "
        "weights do not span the weight lattice");
}

std::int64_t CartanMatrix::dihedral_order() const {
  switch (a1_ * a2_) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;  // infinite
  }
}

std::string to_string(const Weight& w) {
  return "(" + to_string(w.m1) + "," + to_string(w.m2) + ")";
}

Weight parse_weight(std::string_view s) {
  if (!s.empty() && s.front() == '(' && s.back() == ')')
    s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string_view::npos)
    throw std::invalid_argument("weight must be 'm1,m2': " + std::string(s));
  return {parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
}

Weight simple_root_weight(const CartanMatrix& cm, int i) {
  if (i == 1) return {2, -Int(cm.a2())};
  if (i == 2) return {-Int(cm.a1()), 2};
  throw std::invalid_argument("index must be 1 or 2");
}

Weight root_to_weight(const CartanMatrix& cm, const RootVector& r) {
  return {2 * r.c1 - cm.a1() * r.c2, -cm.a2() * r.c1 + 2 * r.c2};
}

std::optional<RootVector> weight_to_root(const CartanMatrix& cm, const Weight& w) {
  // Invert the 2x2 system: c1 = (2 w1 + a1 w2)/det, c2 = (a2 w1 + 2 w2)/det.
  const Int det = cm.det();
  const Int n1 = 2 * w.m1 + cm.a1() * w.m2;
  const Int n2 = cm.a2() * w.m1 + 2 * w.m2;
  if (n1 % det != 0 || n2 % det != 0) return std::nullopt;
  return RootVector{n1 / det, n2 / det};
}

Weight reflect_simple(const CartanMatrix& cm, int i, const Weight& mu) {
  const Int p = pairing(mu, simple_coroot(i));
  const Weight alpha = simple_root_weight(cm, i);
  return mu - alpha * p;
}

RootVector reflect_simple_root(const CartanMatrix& cm, int j, const RootVector& r) {
  if (j == 1) return {-r.c1 + cm.a1() * r.c2, r.c2};
  if (j == 2) return {r.c1, cm.a2() * r.c1 - r.c2};
  throw std::invalid_argument("index must be 1 or 2");
}

CorootVector reflect_simple_coroot(const CartanMatrix& cm, int j, const CorootVector& c) {
  if (j == 1) return {-c.d1 + cm.a2() * c.d2, c.d2};
  if (j == 2) return {c.d1, cm.a1() * c.d1 - c.d2};
  throw std::invalid_argument("index must be 1 or 2");
}

Int check_minus_r1_lambda_pairing(const CartanMatrix& cm) {
  const Weight r1l = reflect_simple(cm, 1, lambda_weight());
  const Int computed = pairing(-r1l, simple_coroot(2));
  const Int closed_form = Int(1) - cm.a2();
  if (computed != closed_form)
    throw std::logic_error("coordinate layer inconsistency: <-r1 lambda, a2^vee> != 1 - a2");
  return computed;
}

}  // namespace lsc
