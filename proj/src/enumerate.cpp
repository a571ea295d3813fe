#include "flatcat/enumerate.hpp"

#include "flatcat/errors.hpp"

namespace flatcat {

WordStream::WordStream(StreamSpec spec) : spec_(std::move(spec)) {
  const int n = spec_.n;
  if (n < 1) throw InvalidInput("word length must be at least 1");
  if (spec_.trun && (*spec_.trun < 1 || *spec_.trun > n))
    throw InvalidInput("trun filter must lie in [1, n]");
  if (spec_.prefix.empty()) spec_.prefix = {1};
  if (spec_.prefix.size() > static_cast<std::size_t>(n)) throw InvalidInput("prefix longer than n");

  const auto& prefix = spec_.prefix;
  const bool valid = spec_.word_class == WordClass::flattened ? is_flattened(prefix) : is_catalan(prefix);
  if (!valid) throw InvalidInput("prefix is not in the requested class: " + format_letters(prefix));

  letters_.assign(n, 0);
  truns_.assign(n, 0);
  letters_[0] = prefix[0];
  truns_[0] = 1;
  for (std::size_t i = 1; i < prefix.size(); ++i) place(i, prefix[i]);
  fixed_ = prefix.size();

  if (spec_.avoid && count_pattern(prefix, *spec_.avoid) > 0) done_ = true;
}

Letter WordStream::lowest(std::size_t pos) const {
  if (spec_.word_class == WordClass::catalan) return 1;
  // A descent from a may only reach the smallest letter of the terminal run.
  return letters_[pos - 1] - truns_[pos - 1] + 1;
}

Letter WordStream::highest(std::size_t pos) const { return letters_[pos - 1] + 1; }

void WordStream::place(std::size_t pos, Letter v) {
  const Letter prev = letters_[pos - 1];
  letters_[pos] = v;
  truns_[pos] = v > prev ? truns_[pos - 1] + 1 : (v == prev ? truns_[pos - 1] : 1);
}

bool WordStream::acceptable(std::size_t pos, Letter v) {
  if (!spec_.avoid) return true;
  const std::size_t m = spec_.avoid->size();
  if (pos + 1 < m) return true;
  letters_[pos] = v;
  return !occurs_at(WordView(letters_.data(), pos + 1), pos + 1 - m, *spec_.avoid);
}

bool WordStream::search(std::size_t pos, Letter start) {
  const std::size_t n = letters_.size();
  Letter v = start;
  while (true) {
    if (pos == n) return true;
    bool placed = false;
    for (const Letter hi = highest(pos); v <= hi; ++v) {
      if (acceptable(pos, v)) {
        place(pos, v);
        placed = true;
        break;
      }
    }
    if (placed) {
      ++pos;
      if (pos < n) v = lowest(pos);
      continue;
    }
    if (pos == fixed_) return false;
    --pos;
    v = letters_[pos] + 1;
  }
}

bool WordStream::next() {
  if (done_) return false;
  const std::size_t n = letters_.size();
  bool ok;
  if (!started_) {
    started_ = true;
    ok = fixed_ == n ? true : search(fixed_, lowest(fixed_));
  } else {
    ok = fixed_ == n ? false : search(n - 1, letters_[n - 1] + 1);
  }
  while (ok && spec_.trun && truns_.back() != *spec_.trun)
    ok = fixed_ == n ? false : search(n - 1, letters_[n - 1] + 1);
  if (!ok) done_ = true;
  return ok;
}

std::uint64_t WordStream::count() {
  std::uint64_t total = 0;
  while (next()) ++total;
  return total;
}

WordStream iter_catalan(int n) { return WordStream({WordClass::catalan, n, {}, std::nullopt, std::nullopt}); }

WordStream iter_flattened(int n) { return WordStream({WordClass::flattened, n, {}, std::nullopt, std::nullopt}); }

WordStream iter_flattened_by_trun(int n, int m) {
  if (m < 1 || m > n) throw InvalidInput("trun must lie in [1, n]");
  return WordStream({WordClass::flattened, n, {}, m, std::nullopt});
}

WordStream iter_avoiders(int n, const Pattern& tau) {
  return WordStream({WordClass::flattened, n, {}, std::nullopt, tau});
}

std::vector<WordStream> partitioned(int n, int depth) {
  if (depth < 1 || depth >= n) throw InvalidInput("partition depth must satisfy 1 <= depth < n");
  std::vector<WordStream> parts;
  for (WordView prefix : iter_flattened(depth))
    parts.emplace_back(StreamSpec{WordClass::flattened, n, {prefix.begin(), prefix.end()}, std::nullopt, std::nullopt});
  return parts;
}

std::vector<CatalanWord> collect(WordStream stream) {
  std::vector<CatalanWord> out;
  for (WordView w : stream) out.push_back(CatalanWord::unchecked({w.begin(), w.end()}));
  return out;
}

}  // namespace flatcat
