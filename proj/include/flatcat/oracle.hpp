#pragma once

// Brute-force distributions over F_n, used as the reference side of every
// verification suite.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatcat/family.hpp"
#include "flatcat/poly.hpp"
#include "flatcat/recurrence.hpp"

namespace flatcat {

struct MarkSpec {
  std::vector<std::pair<Var, Pattern>> patterns;
  bool mark_trun = false;  // y^(trun-1)
};

/// Sum over F_n (optionally F_{n,m}) of the monomial built from the marks.
/// Large n fans out over prefix partitions on `threads` workers.
MultiPoly distribution(int n, const MarkSpec& marks, std::optional<int> trun = std::nullopt, unsigned threads = 1);

/// The joint weight (trun-1, #p-pattern, #q-pattern, #r-pattern) of a family.
MultiPoly family_distribution(Family f, int n, std::optional<int> trun = std::nullopt, unsigned threads = 1);

/// q^(#tau) over F_n.
MultiPoly pattern_distribution(const Pattern& tau, int n, unsigned threads = 1);

/// First (n, m) where the array disagrees with brute force, as a message.
std::optional<std::string> array_vs_oracle(const StatArray& s, int max_n);

}  // namespace flatcat
