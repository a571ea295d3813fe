#pragma once

// Catalan words, consecutive patterns and word-level statistics.
//
// Most statistics take a WordView so they apply to arbitrary positive
// integer sequences (the pattern examples in the literature are not Catalan).
// CatalanWord is the validated value type used everywhere else.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flatcat {

using Letter = int;
using WordView = std::span<const Letter>;

/// Parses the canonical text form "1,2,3,3,2" (no spaces required, but
/// surrounding whitespace is tolerated). Throws InvalidInput.
std::vector<Letter> parse_letters(std::string_view csv);

/// Canonical text form: comma-separated decimal letters, no spaces.
std::string format_letters(WordView w);

class CatalanWord {
 public:
  /// Validates letters[0] = 1 and 1 <= letters[i+1] <= letters[i] + 1.
  explicit CatalanWord(std::vector<Letter> letters);

  /// For generators that maintain the invariants themselves.
  static CatalanWord unchecked(std::vector<Letter> letters);
  static CatalanWord parse(std::string_view csv);

  WordView letters() const { return letters_; }
  const std::vector<Letter>& vec() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }
  std::string str() const { return format_letters(letters_); }

  operator WordView() const { return letters_; }

  friend bool operator==(const CatalanWord&, const CatalanWord&) = default;
  friend auto operator<=>(const CatalanWord&, const CatalanWord&) = default;

 private:
  struct Unchecked {};
  CatalanWord(Unchecked, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

/// A consecutive pattern whose distinct letters are exactly {1,...,l}.
class Pattern {
 public:
  explicit Pattern(std::vector<Letter> letters);

  /// Accepts the digit string form used on the command line ("312") as well
  /// as the comma form ("3,1,2") for alphabets larger than 9.
  static Pattern parse(std::string_view text);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  int alphabet_size() const { return alphabet_size_; }
  std::string str() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Letter> letters_;
  int alphabet_size_ = 0;
};

/// {0,1}-word of length n-1 whose first bit is 0.
class BinaryWord {
 public:
  explicit BinaryWord(std::vector<std::uint8_t> bits);
  static BinaryWord parse(std::string_view csv);

  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  std::string str() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Half-open index range [begin, end) into a word.
struct Segment {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Maximal weakly increasing segments; adjacent segments meet at a strict descent.
std::vector<Segment> increasing_runs(WordView w);

/// Maximal constant segments ("runs of a letter").
std::vector<Segment> letter_runs(WordView w);

bool is_catalan(WordView w);
bool is_flattened(WordView w);

/// True when w[i..i+m-1] is order-isomorphic to the pattern (equalities included).
bool occurs_at(WordView w, std::size_t i, const Pattern& pattern);
std::size_t count_pattern(WordView w, const Pattern& pattern);

/// Number of distinct letters in the terminal increasing run.
int trun(WordView w);

/// Keeps the first letter of each maximal constant run.
std::vector<Letter> skeleton(WordView w);

struct WordStats {
  std::size_t asc = 0;
  std::size_t des = 0;
  std::size_t lev = 0;
  int trun = 0;
  friend bool operator==(const WordStats&, const WordStats&) = default;
};

WordStats statistics(WordView w);

}  // namespace flatcat
