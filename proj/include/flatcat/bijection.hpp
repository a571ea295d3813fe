#pragma once

// Bijections and involutions on flattened Catalan words, each with its
// inverse, plus generators for the marked domains they act on.

#include <compare>
#include <cstddef>
#include <vector>

#include "flatcat/word.hpp"

namespace flatcat {

/// A word with one designated position. For pattern occurrences and valleys
/// the mark is the 0-based start index; for trun designations it is the
/// leftmost index of the designated letter inside the terminal run.
struct MarkedWord {
  CatalanWord word;
  std::size_t mark = 0;

  friend bool operator==(const MarkedWord&, const MarkedWord&) = default;
  friend auto operator<=>(const MarkedWord&, const MarkedWord&) = default;
};

/// {0,1}-words of length n-1 starting with 0 onto level-free members of F_n.
CatalanWord prime_map(const BinaryWord& b);
/// Throws InvalidInput unless w is flattened and level-free.
BinaryWord prime_inverse(const CatalanWord& w);

/// F_n* (a non-smallest terminal-run letter designated) onto F_n - {1^n}.
/// Throws InvalidInput when the mark is outside the terminal run or
/// designates its smallest letter.
CatalanWord trun_map(const MarkedWord& mw);
/// Throws InvalidInput for 1^n or non-flattened input.
MarkedWord trun_map_inverse(const CatalanWord& w);

/// Reverses the letter multiplicities inside every increasing run.
CatalanWord tilde(const CatalanWord& w);
/// Rewrites every maximal a^x b^y with a > b as a^y b^x.
CatalanWord hat(const CatalanWord& w);
/// Exchanges a(a+1)b and aab (a > b) at all sites at once.
CatalanWord swap_231_221(const CatalanWord& w);

/// Marked 312 occurrence in F_n to a marked valley in F_{n-1}.
MarkedWord valley_map(const MarkedWord& mw);
/// Marked valley in F_{n-1} to a marked 312 occurrence in F_n.
MarkedWord valley_map_inverse(const MarkedWord& mw);

/// Length of the b-run when a valley a b^l (b+1), a > b, starts at i; else 0.
std::size_t valley_at(WordView w, std::size_t i);

/// The finite domains, in lexicographic order of (word, mark).
std::vector<BinaryWord> binary_words(int n);
std::vector<MarkedWord> trun_designations(int n);
std::vector<MarkedWord> marked_occurrences(int n, const Pattern& tau);
std::vector<MarkedWord> marked_valleys(int n);

}  // namespace flatcat
