#pragma once

// Brute-force reference used by the tests. Shares no code with the library:
// words are generated by plain recursion, flattenedness is read off the run
// heads, and pattern matching compares every pair of positions.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "flatcat/poly.hpp"

namespace ref {

using Word = std::vector<int>;
using Pat = std::vector<int>;

inline Pat pat(const std::string& digits) {
  Pat p;
  for (char c : digits) p.push_back(c - '0');
  return p;
}

inline std::string show(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

inline void catalan_rec(Word& w, std::size_t n, const std::function<void(const Word&)>& f) {
  if (w.size() == n) {
    f(w);
    return;
  }
  const int top = w.back() + 1;
  for (int v = 1; v <= top; ++v) {
    w.push_back(v);
    catalan_rec(w, n, f);
    w.pop_back();
  }
}

inline void for_each_catalan(int n, const std::function<void(const Word&)>& f) {
  Word w{1};
  catalan_rec(w, static_cast<std::size_t>(n), f);
}

inline Word run_heads(const Word& w) {
  Word h{w[0]};
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] < w[i - 1]) h.push_back(w[i]);
  return h;
}

inline bool flattened(const Word& w) {
  const Word h = run_heads(w);
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h[i] < h[i - 1]) return false;
  return true;
}

inline std::vector<Word> flattened_words(int n) {
  std::vector<Word> out;
  for_each_catalan(n, [&](const Word& w) {
    if (flattened(w)) out.push_back(w);
  });
  return out;
}

inline int sgn(int a) { return (a > 0) - (a < 0); }

inline bool match_at(const Word& w, std::size_t i, const Pat& p) {
  if (i + p.size() > w.size()) return false;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (sgn(w[i + a] - w[i + b]) != sgn(p[a] - p[b])) return false;
  return true;
}

inline int count(const Word& w, const Pat& p) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) c += match_at(w, i, p);
  return c;
}

inline int trun(const Word& w) {
  std::size_t start = w.size() - 1;
  while (start > 0 && w[start - 1] <= w[start]) --start;
  int distinct = 1;
  for (std::size_t i = start + 1; i < w.size(); ++i) distinct += w[i] != w[i - 1];
  return distinct;
}

inline int descents(const Word& w) {
  int d = 0;
  for (std::size_t i = 1; i < w.size(); ++i) d += w[i] < w[i - 1];
  return d;
}

inline bool has_level(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return true;
  return false;
}

/// Start of a valley a b^l (b+1), a > b, at i; returns l or 0.
inline std::size_t valley(const Word& w, std::size_t i) {
  if (i + 2 >= w.size() || w[i + 1] >= w[i]) return 0;
  std::size_t j = i + 1;
  while (j < w.size() && w[j] == w[i + 1]) ++j;
  if (j == w.size() || w[j] != w[i + 1] + 1) return 0;
  return j - i - 1;
}

/// Exponent tuple (y, p, q, r) -> number of words.
using Dist = std::map<std::array<int, 4>, long long>;

/// Joint distribution of (trun-1, #p, #q, #r) over the given words.
inline Dist joint(const std::vector<Word>& words, const Pat& p, const Pat& q, const Pat& r) {
  Dist d;
  for (const auto& w : words) ++d[{trun(w) - 1, count(w, p), count(w, q), count(w, r)}];
  return d;
}

inline Dist single(const std::vector<Word>& words, const Pat& q) {
  Dist d;
  for (const auto& w : words) ++d[{0, 0, count(w, q), 0}];
  return d;
}

inline Dist from_poly(const flatcat::MultiPoly& m) {
  Dist d;
  for (const auto& [key, c] : m.terms()) {
    const auto e = flatcat::ExponentVec::unpack(key);
    d[{e.e[0], e.e[1], e.e[2], e.e[3]}] = static_cast<long long>(c);
  }
  return d;
}

inline std::string show(const Dist& d) {
  std::string s;
  for (const auto& [k, c] : d)
    s += std::to_string(c) + "*y" + std::to_string(k[0]) + "p" + std::to_string(k[1]) + "q" + std::to_string(k[2]) +
         "r" + std::to_string(k[3]) + " ";
  return s;
}

inline long long pow3(int e) {
  long long v = 1;
  while (e-- > 0) v *= 3;
  return v;
}

}  // namespace ref
