#include "flatcat/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "flatcat/enumerate.hpp"
#include "flatcat/errors.hpp"

namespace flatcat {

namespace {

using Counts = std::map<std::uint64_t, std::uint64_t>;

void accumulate(WordStream& stream, const MarkSpec& marks, Counts& counts) {
  while (stream.next()) {
    const WordView w = stream.current();
    ExponentVec e;
    if (marks.mark_trun) e[Var::y] = static_cast<std::uint16_t>(stream.current_trun() - 1);
    for (const auto& [v, pat] : marks.patterns) e[v] = static_cast<std::uint16_t>(e[v] + count_pattern(w, pat));
    ++counts[e.pack()];
  }
}

MultiPoly to_poly(const Counts& counts) {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(counts.size());
  for (const auto& [key, c] : counts) terms.emplace_back(key, BigInt(c));
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace

MultiPoly distribution(int n, const MarkSpec& marks, std::optional<int> trun, unsigned threads) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  StreamSpec spec;
  spec.n = n;
  spec.trun = trun;

  if (threads <= 1 || n < 8) {
    WordStream stream(spec);
    Counts counts;
    accumulate(stream, marks, counts);
    return to_poly(counts);
  }

  // Prefixes of length 5 give 41 roughly balanced sub-streams.
  std::vector<StreamSpec> parts;
  for (auto& part : partitioned(n, 5)) {
    StreamSpec s = part.spec();
    s.trun = trun;
    parts.push_back(std::move(s));
  }
  std::vector<Counts> results(parts.size());
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(parts.size()));
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < parts.size(); i = next++) {
        WordStream stream(parts[i]);
        accumulate(stream, marks, results[i]);
      }
    });
  for (auto& th : pool) th.join();
  Counts merged;
  for (const auto& r : results)
    for (const auto& [k, c] : r) merged[k] += c;
  return to_poly(merged);
}

MultiPoly family_distribution(Family f, int n, std::optional<int> trun, unsigned threads) {
  const auto& rl = roles(f);
  MarkSpec marks{{{Var::p, rl.p}, {Var::q, rl.q}, {Var::r, rl.r}}, true};
  return distribution(n, marks, trun, threads);
}

MultiPoly pattern_distribution(const Pattern& tau, int n, unsigned threads) {
  return distribution(n, MarkSpec{{{Var::q, tau}}, false}, std::nullopt, threads);
}

std::optional<std::string> array_vs_oracle(const StatArray& s, int max_n) {
  const auto& rl = roles(s.family());
  const MarkSpec marks{{{Var::p, rl.p}, {Var::q, rl.q}, {Var::r, rl.r}}, false};
  for (int n = 1; n <= std::min(max_n, s.max_n()); ++n)
    for (int m = 1; m <= n; ++m) {
      const MultiPoly brute = distribution(n, marks, m);
      if (brute != s.at(n, m))
        return "family " + family_id(s.family()) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
               ": recurrence " + s.at(n, m).str() + ", brute force " + brute.str();
    }
  return std::nullopt;
}

}  // namespace flatcat
