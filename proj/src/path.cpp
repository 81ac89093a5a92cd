#include "lsc/path.hpp"

#include <algorithm>
#include <stdexcept>

#include "lsc/weyl.hpp"

namespace lsc {

Polyline canonical_polyline(std::vector<Weight> dirs, std::vector<Rat> cuts) {
  if (dirs.empty() || cuts.size() != dirs.size() + 1)
    throw std::invalid_argument("polyline needs s directions and s+1 cuts");
  if (cuts.front() != 0 || cuts.back() != 1)
    throw std::invalid_argument("cuts must start at 0 and end at 1");
  for (std::size_t u = 1; u < cuts.size(); ++u)
    if (cuts[u] < cuts[u - 1])
      throw std::invalid_argument("cuts must be weakly increasing");

  Polyline out;
  out.cuts.push_back(cuts.front());
  for (std::size_t u = 0; u < dirs.size(); ++u) {
    if (cuts[u + 1] == cuts[u]) continue;  // empty segment
    if (!out.dirs.empty() && out.dirs.back() == dirs[u])
      out.cuts.back() = cuts[u + 1];  // merge with previous
    else {
      out.dirs.push_back(dirs[u]);
      out.cuts.push_back(cuts[u + 1]);
    }
  }
  return out;
}

std::pair<Rat, Rat> evaluate(const Polyline& p, const Rat& t) {
  if (t < 0 || t > 1) throw std::domain_error("evaluation time outside [0,1]");
  Rat x = 0, y = 0;
  for (std::size_t u = 0; u < p.dirs.size(); ++u) {
    const Rat step = std::min(t, p.cuts[u + 1]) - p.cuts[u];
    if (step <= 0) break;
    x += step * Rat(p.dirs[u].m1);
    y += step * Rat(p.dirs[u].m2);
  }
  return {x, y};
}

CornerProfile corner_profile(const Polyline& p, int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("index must be 1 or 2");
  CornerProfile prof;
  Rat h = 0;
  prof.corners.emplace_back(p.cuts.front(), h);
  prof.min_value = h;
  for (std::size_t u = 0; u < p.dirs.size(); ++u) {
    const Int& coord = (i == 1) ? p.dirs[u].m1 : p.dirs[u].m2;
    h += (p.cuts[u + 1] - p.cuts[u]) * Rat(coord);
    prof.corners.emplace_back(p.cuts[u + 1], h);
    if (h < prof.min_value) prof.min_value = h;
  }
  prof.end_value = h;
  return prof;
}

bool CornerProfile::local_minima_integral() const {
  const std::size_t n = corners.size();
  std::size_t a = 0;
  while (a < n) {
    std::size_t b = a;
    while (b + 1 < n && corners[b + 1].second == corners[a].second) ++b;
    const bool left_ok = (a == 0) || corners[a - 1].second > corners[a].second;
    const bool right_ok = (b == n - 1) || corners[b + 1].second > corners[b].second;
    if (left_ok && right_ok && !is_integer(corners[a].second)) return false;
    a = b + 1;
  }
  return true;
}

namespace {

Int require_nonneg_int(const Rat& r, const char* what) {
  if (!is_integer(r)) throw std::logic_error(std::string(what) + " is not an integer");
  Int n = numerator(r);
  if (n < 0) throw std::logic_error(std::string(what) + " is negative");
  return n;
}

// Largest t <= tmax with H(t) == v. tmax is a corner time; a solution is
// guaranteed by the callers' invariants.
Rat last_time_at(const CornerProfile& prof, const Rat& v, const Rat& tmax) {
  for (std::size_t u = prof.corners.size() - 1; u >= 1; --u) {
    const auto& [bt, bh] = prof.corners[u];
    const auto& [at, ah] = prof.corners[u - 1];
    if (bt > tmax) continue;
    if (bh == v) return bt;
    if ((ah < v && v < bh) || (bh < v && v < ah))
      return at + (bt - at) * (v - ah) / (bh - ah);
    if (ah == v) return at;
  }
  throw std::logic_error("level not attained left of the given time");
}

// Smallest t >= tmin with H(t) == v. tmin is a corner time.
Rat first_time_at(const CornerProfile& prof, const Rat& v, const Rat& tmin) {
  for (std::size_t u = 1; u < prof.corners.size(); ++u) {
    const auto& [at, ah] = prof.corners[u - 1];
    const auto& [bt, bh] = prof.corners[u];
    if (at < tmin) continue;
    if (ah == v) return at;
    if ((ah < v && v < bh) || (bh < v && v < ah))
      return at + (bt - at) * (v - ah) / (bh - ah);
    if (bh == v) return bt;
  }
  throw std::logic_error("level not attained right of the given time");
}

// Rebuild with the stretch [t0, t1] reflected by r_i. Directions outside the
// stretch are untouched: the tail is translated by +-alpha_i, which leaves
// derivatives alone.
Polyline rebuild_reflected(const CartanMatrix& cm, const Polyline& p, int i,
                           const Rat& t0, const Rat& t1) {
  std::vector<Rat> bps = p.cuts;
  for (const Rat& t : {t0, t1}) {
    auto it = std::lower_bound(bps.begin(), bps.end(), t);
    if (it == bps.end() || *it != t) bps.insert(it, t);
  }
  std::vector<Weight> dirs;
  std::vector<Rat> cuts{bps.front()};
  std::size_t seg = 0;
  for (std::size_t k = 1; k < bps.size(); ++k) {
    const Rat& l = bps[k - 1];
    const Rat& r = bps[k];
    while (p.cuts[seg + 1] <= l) ++seg;
    Weight d = p.dirs[seg];
    if (l >= t0 && r <= t1) d = reflect_simple(cm, i, d);
    dirs.push_back(d);
    cuts.push_back(r);
  }
  return canonical_polyline(std::move(dirs), std::move(cuts));
}

}  // namespace

Int polyline_epsilon(const Polyline& p, int i) {
  return require_nonneg_int(-corner_profile(p, i).min_value, "epsilon");
}

Int polyline_phi(const Polyline& p, int i) {
  const CornerProfile prof = corner_profile(p, i);
  return require_nonneg_int(prof.end_value - prof.min_value, "phi");
}

std::optional<Polyline> raise_polyline(const CartanMatrix& cm, const Polyline& p, int i) {
  const CornerProfile prof = corner_profile(p, i);
  if (!is_integer(prof.min_value))
    throw std::logic_error("corner profile minimum is not an integer");
  if (prof.min_value == 0) return std::nullopt;

  // t1: first time the minimum is attained (always a corner).
  Rat t1;
  for (const auto& [t, h] : prof.corners)
    if (h == prof.min_value) { t1 = t; break; }
  // t0: last time H = m+1 before t1; genuinely fractional in general.
  const Rat t0 = last_time_at(prof, prof.min_value + 1, t1);
  return rebuild_reflected(cm, p, i, t0, t1);
}

std::optional<Polyline> lower_polyline(const CartanMatrix& cm, const Polyline& p, int i) {
  const CornerProfile prof = corner_profile(p, i);
  if (!is_integer(prof.min_value))
    throw std::logic_error("corner profile minimum is not an integer");
  if (prof.end_value == prof.min_value) return std::nullopt;

  // t0: last time the minimum is attained (always a corner).
  Rat t0;
  for (auto it = prof.corners.rbegin(); it != prof.corners.rend(); ++it)
    if (it->second == prof.min_value) { t0 = it->first; break; }
  // t1: first time H = m+1 after t0.
  const Rat t1 = first_time_at(prof, prof.min_value + 1, t0);
  return rebuild_reflected(cm, p, i, t0, t1);
}

LSPath LSPath::straight(const Weight& mu) { return straight(mu, mu); }

LSPath LSPath::straight(const Weight& shape, const Weight& nu) {
  return LSPath(shape, Polyline{{nu}, {Rat(0), Rat(1)}});
}

LSPath LSPath::make(const Weight& shape, std::vector<Weight> dirs, std::vector<Rat> cuts) {
  return LSPath(shape, canonical_polyline(std::move(dirs), std::move(cuts)));
}

Weight LSPath::weight() const {
  const auto [x, y] = evaluate(line_, Rat(1));
  if (!is_integer(x) || !is_integer(y))
    throw std::logic_error("path endpoint has non-integral coordinates: " + str());
  return {numerator(x), numerator(y)};
}

std::optional<LSPath> LSPath::raise(const CartanMatrix& cm, int i) const {
  auto line = raise_polyline(cm, line_, i);
  if (!line) return std::nullopt;
  return LSPath(shape_, *std::move(line));
}

std::optional<LSPath> LSPath::lower(const CartanMatrix& cm, int i) const {
  auto line = lower_polyline(cm, line_, i);
  if (!line) return std::nullopt;
  return LSPath(shape_, *std::move(line));
}

std::string LSPath::str() const {
  std::string s = "dirs=[";
  for (std::size_t u = 0; u < line_.dirs.size(); ++u) {
    if (u) s += ',';
    s += to_string(line_.dirs[u]);
  }
  s += "];cuts=[";
  for (std::size_t u = 0; u < line_.cuts.size(); ++u) {
    if (u) s += ',';
    s += to_string(line_.cuts[u]);
  }
  s += ']';
  return s;
}

LSPath parse_ls_path(const Weight& shape, std::string_view s) {
  const auto fail = [&]() -> LSPath {
    throw std::invalid_argument("bad path literal: " + std::string(s));
  };
  constexpr std::string_view kDirs = "dirs=[";
  constexpr std::string_view kCuts = "];cuts=[";
  if (s.substr(0, kDirs.size()) != kDirs || s.empty() || s.back() != ']') return fail();
  const auto mid = s.find(kCuts);
  if (mid == std::string_view::npos) return fail();
  std::string_view dirs_part = s.substr(kDirs.size(), mid - kDirs.size());
  std::string_view cuts_part = s.substr(mid + kCuts.size(), s.size() - mid - kCuts.size() - 1);

  std::vector<Weight> dirs;
  while (!dirs_part.empty()) {
    if (dirs_part.front() == ',') dirs_part.remove_prefix(1);
    const auto close = dirs_part.find(')');
    if (dirs_part.empty() || dirs_part.front() != '(' || close == std::string_view::npos)
      return fail();
    dirs.push_back(parse_weight(dirs_part.substr(0, close + 1)));
    dirs_part.remove_prefix(close + 1);
  }
  std::vector<Rat> cuts;
  while (!cuts_part.empty()) {
    auto comma = cuts_part.find(',');
    if (comma == std::string_view::npos) comma = cuts_part.size();
    cuts.push_back(parse_rat(cuts_part.substr(0, comma)));
    cuts_part.remove_prefix(std::min(comma + 1, cuts_part.size()));
  }
  return LSPath::make(shape, std::move(dirs), std::move(cuts));
}

ValidationResult validate(const CartanMatrix& cm, const LSPath& pi, const OrderConfig& cfg) {
  cfg.check();
  const auto& cuts = pi.cuts();
  const auto& dirs = pi.dirs();
  if (cuts.front() != 0 || cuts.back() != 1)
    return {PathStatus::cuts_not_monotone, "cut endpoints are not 0 and 1"};
  for (std::size_t u = 1; u < cuts.size(); ++u)
    if (cuts[u] <= cuts[u - 1])
      return {PathStatus::cuts_not_monotone, "cuts not strictly increasing"};

  // Bounded orbit membership; the bound dominates every path the explorer
  // can produce under the same config.
  const Orbit orb = orbit(cm, pi.shape(), cfg.max_reflection_length + cfg.max_chain_length);
  for (const Weight& d : dirs)
    if (!orb.contains(d))
      return {PathStatus::dirs_not_in_orbit,
              "direction " + to_string(d) + " not found in the bounded orbit of " +
                  to_string(pi.shape())};

  for (std::size_t u = 0; u + 1 < dirs.size(); ++u) {
    if (dirs[u] == dirs[u + 1])
      return {PathStatus::not_certified_within_bounds, "equal adjacent directions"};
    if (!sigma_chain_exists(cm, cuts[u + 1], dirs[u], dirs[u + 1], cfg))
      return {PathStatus::not_certified_within_bounds,
              "no " + to_string(cuts[u + 1]) + "-chain found for (" + to_string(dirs[u]) +
                  ", " + to_string(dirs[u + 1]) + ")"};
  }

  const auto [x, y] = evaluate(pi, Rat(1));
  if (!is_integer(x) || !is_integer(y))
    return {PathStatus::endpoint_not_integral, "endpoint " + to_string(x) + "," + to_string(y)};
  return {};
}

}  // namespace lsc
