#pragma once

// Explicit counts: |F_n|, total pattern occurrences tot_n(tau), the trun - 1
// sum, and the binomial-sum avoider counts f_n(tau).

#include <optional>
#include <string>
#include <vector>

#include "flatcat/poly.hpp"
#include "flatcat/word.hpp"

namespace flatcat {

/// C(a, b), zero when b < 0 or b > a (or a < 0).
BigInt binom(long a, long b);

/// (3^(n-1)+1)/2. Requires n >= 1.
BigInt cardinality(int n);

/// Total occurrences of tau over F_n. Requires n >= 2 and tau in the
/// 13-pattern table; throws NotInCatalog otherwise.
BigInt tot(const Pattern& tau, int n);

/// Sum of trun - 1 over F_n, (3^(n-1)-1)/2. Requires n >= 1.
BigInt trun_sum(int n);

/// Number of tau-avoiding members of F_n from the binomial sums.
/// Patterns: 11, 111, 112, 121, 122, 123, 211, 212, 221, 231, 312.
BigInt avoiders(const Pattern& tau, int n);

/// Smallest n accepted by avoiders(tau, n).
int avoiders_min_n(const Pattern& tau);

/// Patterns with an avoider formula, in table order.
const std::vector<Pattern>& avoider_patterns();

/// OEIS labels for sequences the formulas coincide with, for output only.
/// Keys: "cardinality", or a pattern string for its tot_n column ("11",
/// "21", "123", "312").
std::optional<std::string> oeis_label(const std::string& key);

}  // namespace flatcat
