#pragma once

// Exhaustive, lexicographic generators for C_n, F_n, F_{n,m} and F_n(tau).
//
// A WordStream is a lazy input range over WordView; the view it yields is
// valid until the stream advances. Streams own all their state, so separate
// streams (e.g. the sub-streams returned by partitioned()) may run on
// different threads.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "flatcat/word.hpp"

namespace flatcat {

enum class WordClass { catalan, flattened };

struct StreamSpec {
  WordClass word_class = WordClass::flattened;
  int n = 1;
  std::vector<Letter> prefix;         // fixed leading letters (empty = just "1")
  std::optional<int> trun;            // keep only words with this trun
  std::optional<Pattern> avoid;       // prune words containing this pattern
};

class WordStream {
 public:
  explicit WordStream(StreamSpec spec);

  /// Advances to the next word. The first call yields the first word.
  bool next();
  WordView current() const { return {letters_.data(), letters_.size()}; }
  /// trun of the current word, maintained incrementally.
  int current_trun() const { return truns_.back(); }

  /// Counts the remaining words without materializing them.
  std::uint64_t count();

  const StreamSpec& spec() const { return spec_; }

  class iterator {
   public:
    using value_type = WordView;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(WordStream* s) : stream_(s) {}
    WordView operator*() const { return stream_->current(); }
    iterator& operator++() {
      if (!stream_->next()) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

   private:
    WordStream* stream_ = nullptr;
  };

  /// Single-pass: begin() advances to the first word.
  iterator begin() {
    iterator it(this);
    if (!next()) return iterator();
    return it;
  }
  iterator end() { return iterator(); }

 private:
  Letter lowest(std::size_t pos) const;
  Letter highest(std::size_t pos) const;
  bool acceptable(std::size_t pos, Letter v);
  void place(std::size_t pos, Letter v);
  bool search(std::size_t pos, Letter start);

  StreamSpec spec_;
  std::vector<Letter> letters_;
  std::vector<int> truns_;
  std::size_t fixed_ = 1;
  bool started_ = false;
  bool done_ = false;
};

WordStream iter_catalan(int n);
WordStream iter_flattened(int n);
WordStream iter_flattened_by_trun(int n, int m);
WordStream iter_avoiders(int n, const Pattern& tau);

/// Splits F_n by length-`depth` prefix into independent sub-streams whose
/// concatenation (in order) is iter_flattened(n). Requires 1 <= depth < n.
std::vector<WordStream> partitioned(int n, int depth);

/// Convenience for tests and small n.
std::vector<CatalanWord> collect(WordStream stream);

}  // namespace flatcat
