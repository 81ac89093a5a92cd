#include "lsc/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lsc {

namespace {
int other(int i) { return 3 - i; }
}  // namespace

WeylWord WeylWord::alternating(int first, std::int64_t len) {
  if (len == 0) return identity();
  if (first != 1 && first != 2) throw std::invalid_argument("letter must be 1 or 2");
  if (len < 0) throw std::invalid_argument("negative word length");
  return WeylWord(first, len);
}

int WeylWord::last() const {
  if (len_ == 0) throw std::logic_error("identity has no last letter");
  return len_ % 2 == 1 ? first_ : other(first_);
}

std::vector<int> WeylWord::letters() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(len_));
  int l = first_;
  for (std::int64_t k = 0; k < len_; ++k) {
    out.push_back(l);
    l = other(l);
  }
  return out;
}

std::string WeylWord::str() const {
  if (len_ == 0) return "e";
  std::string s;
  for (int l : letters()) {
    s += 'r';
    s += static_cast<char>('0' + l);
  }
  return s;
}

WeylWord parse_word(std::string_view s) {
  if (s == "e" || s.empty()) return WeylWord::identity();
  if (s.size() % 2 != 0) throw std::invalid_argument("bad word literal: " + std::string(s));
  std::vector<int> letters;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    if (s[i] != 'r' || (s[i + 1] != '1' && s[i + 1] != '2'))
      throw std::invalid_argument("bad word literal: " + std::string(s));
    letters.push_back(s[i + 1] - '0');
  }
  for (std::size_t k = 1; k < letters.size(); ++k)
    if (letters[k] == letters[k - 1])
      throw std::invalid_argument("word literal not alternating: " + std::string(s));
  return WeylWord::alternating(letters[0], static_cast<std::int64_t>(letters.size()));
}

WeylWord append(const CartanMatrix& cm, const WeylWord& w, int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("letter must be 1 or 2");
  if (w.is_identity()) return WeylWord::alternating(j, 1);

  const std::int64_t m = cm.dihedral_order();
  if (m != 0 && w.length() == m) {
    // Longest element: both alternating spellings are reduced. Use the one
    // ending in j and cancel.
    const int f = (m % 2 == 1) ? j : other(j);
    return WeylWord::alternating(f, m - 1);
  }
  if (j == w.last()) {
    return w.length() == 1 ? WeylWord::identity()
                           : WeylWord::alternating(w.first(), w.length() - 1);
  }
  const std::int64_t len = w.length() + 1;
  if (m != 0 && len == m) return WeylWord::alternating(1, m);  // w0, normalized
  return WeylWord::alternating(w.first(), len);
}

WeylWord compose(const CartanMatrix& cm, const WeylWord& x, const WeylWord& y) {
  WeylWord w = x;
  for (int l : y.letters()) w = append(cm, w, l);
  return w;
}

Weight act(const CartanMatrix& cm, const WeylWord& w, const Weight& mu) {
  Weight v = mu;
  const auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) v = reflect_simple(cm, *it, v);
  return v;
}

RootVector act_root(const CartanMatrix& cm, const WeylWord& w, const RootVector& r) {
  RootVector v = r;
  const auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) v = reflect_simple_root(cm, *it, v);
  return v;
}

CorootVector act_coroot(const CartanMatrix& cm, const WeylWord& w, const CorootVector& c) {
  CorootVector v = c;
  const auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) v = reflect_simple_coroot(cm, *it, v);
  return v;
}

std::vector<WeylWord> enumerate_words(const CartanMatrix& cm, std::int64_t max_len) {
  const std::int64_t m = cm.dihedral_order();
  const std::int64_t cap = (m == 0) ? max_len : std::min(max_len, m);
  std::vector<WeylWord> out;
  out.push_back(WeylWord::identity());
  for (std::int64_t len = 1; len <= cap; ++len) {
    if (m != 0 && len == m) {
      out.push_back(WeylWord::alternating(1, len));  // w0 has one canonical form
    } else {
      out.push_back(WeylWord::alternating(1, len));
      out.push_back(WeylWord::alternating(2, len));
    }
  }
  return out;
}

Weight reflect_by(const CartanMatrix& cm, const RealRoot& beta, const Weight& mu) {
  const Int p = pairing(mu, beta.coroot);
  return mu - root_to_weight(cm, beta.root) * p;
}

std::vector<RealRoot> positive_real_roots(const CartanMatrix& cm,
                                          std::int64_t max_reflection_length) {
  if (max_reflection_length < 1)
    throw std::invalid_argument("reflection length bound must be >= 1");
  std::vector<RealRoot> out;
  std::vector<RootVector> seen;
  for (const WeylWord& t : enumerate_words(cm, max_reflection_length)) {
    if (t.length() % 2 == 0) continue;  // reflections are the odd-length words
    // t = w r_i w^-1 with w the length-k prefix and i the middle letter.
    const std::int64_t k = t.length() / 2;
    const WeylWord prefix =
        k == 0 ? WeylWord::identity() : WeylWord::alternating(t.first(), k);
    const int mid = (k % 2 == 0) ? t.first() : other(t.first());
    RealRoot rr;
    rr.root = act_root(cm, prefix, simple_root_vector(mid));
    rr.coroot = act_coroot(cm, prefix, simple_coroot(mid));
    rr.reflection_word = t;
    if (!rr.root.in_positive_cone() || (rr.root.c1 == 0 && rr.root.c2 == 0))
      throw std::logic_error("reflection word did not produce a positive root");
    if (std::find(seen.begin(), seen.end(), rr.root) != seen.end()) continue;
    seen.push_back(rr.root);
    out.push_back(std::move(rr));
  }
  return out;
}

bool Orbit::contains(const Weight& w) const {
  for (const auto& [word, wt] : elements)
    if (wt == w) return true;
  return false;
}

Orbit orbit(const CartanMatrix& cm, const Weight& mu, std::int64_t max_word_length) {
  Orbit result;
  std::map<Weight, WeylWord> first_word;
  for (const WeylWord& w : enumerate_words(cm, max_word_length)) {
    const Weight v = act(cm, w, mu);
    auto [it, inserted] = first_word.emplace(v, w);
    if (inserted)
      result.elements.emplace_back(w, v);
    else
      result.collisions.emplace_back(w, it->second);
  }
  return result;
}

}  // namespace lsc
