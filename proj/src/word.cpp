#include "flatcat/word.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "flatcat/errors.hpp"

namespace flatcat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

int sign(Letter a, Letter b) { return (a > b) - (a < b); }

}  // namespace

std::vector<Letter> parse_letters(std::string_view csv) {
  csv = trim(csv);
  if (csv.empty()) throw InvalidInput("empty word");
  std::vector<Letter> out;
  while (true) {
    const auto comma = csv.find(',');
    const auto field = trim(csv.substr(0, comma));
    Letter value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw InvalidInput("malformed letter '" + std::string(field) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_letters(WordView w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

CatalanWord::CatalanWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (!is_catalan(letters_)) throw InvalidInput("not a Catalan word: " + format_letters(letters_));
}

CatalanWord CatalanWord::unchecked(std::vector<Letter> letters) {
  return CatalanWord(Unchecked{}, std::move(letters));
}

CatalanWord CatalanWord::parse(std::string_view csv) { return CatalanWord(parse_letters(csv)); }

// ---------------------------------------------------------------------------

Pattern::Pattern(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.size() < 2) throw InvalidInput("pattern must have length >= 2");
  const std::set<Letter> distinct(letters_.begin(), letters_.end());
  alphabet_size_ = static_cast<int>(distinct.size());
  // Distinct letters must be exactly 1..l.
  if (*distinct.begin() != 1 || *distinct.rbegin() != alphabet_size_)
    throw InvalidInput("pattern letters must form the set {1,...,l}: " + format_letters(letters_));
}

Pattern Pattern::parse(std::string_view text) {
  text = trim(text);
  if (text.find(',') != std::string_view::npos) return Pattern(parse_letters(text));
  if (text.empty()) throw InvalidInput("empty pattern");
  std::vector<Letter> letters;
  for (char c : text) {
    if (c < '1' || c > '9') throw InvalidInput("pattern digits must be 1-9: " + std::string(text));
    letters.push_back(c - '0');
  }
  return Pattern(std::move(letters));
}

std::string Pattern::str() const {
  if (alphabet_size_ <= 9) {
    std::string out;
    for (Letter l : letters_) out += static_cast<char>('0' + l);
    return out;
  }
  return format_letters(letters_);
}

// ---------------------------------------------------------------------------

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty() || bits_.front() != 0) throw InvalidInput("binary word must be nonempty and start with 0");
  for (auto b : bits_)
    if (b > 1) throw InvalidInput("binary word letters must be 0 or 1");
}

BinaryWord BinaryWord::parse(std::string_view csv) {
  std::vector<std::uint8_t> bits;
  for (Letter l : parse_letters(csv)) {
    if (l != 0 && l != 1) throw InvalidInput("binary word letters must be 0 or 1");
    bits.push_back(static_cast<std::uint8_t>(l));
  }
  return BinaryWord(std::move(bits));
}

std::string BinaryWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + bits_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Segment> increasing_runs(WordView w) {
  std::vector<Segment> runs;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (i == w.size() || w[i] < w[i - 1]) {
      runs.push_back({start, i});
      start = i;
    }
  }
  return runs;
}

std::vector<Segment> letter_runs(WordView w) {
  std::vector<Segment> runs;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (i == w.size() || w[i] != w[i - 1]) {
      runs.push_back({start, i});
      start = i;
    }
  }
  return runs;
}

bool is_catalan(WordView w) {
  if (w.empty()) throw InvalidInput("empty word");
  if (w[0] != 1) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] < 1 || w[i] > w[i - 1] + 1) return false;
  return true;
}

bool is_flattened(WordView w) {
  if (!is_catalan(w)) return false;
  Letter previous_head = 0;
  for (const auto& run : increasing_runs(w)) {
    if (w[run.begin] < previous_head) return false;
    previous_head = w[run.begin];
  }
  return true;
}

bool occurs_at(WordView w, std::size_t i, const Pattern& pattern) {
  const auto tau = pattern.letters();
  const std::size_t m = tau.size();
  if (i + m > w.size()) return false;
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t)
      if (sign(w[i + s], w[i + t]) != sign(tau[s], tau[t])) return false;
  return true;
}

std::size_t count_pattern(WordView w, const Pattern& pattern) {
  const std::size_t m = pattern.size();
  if (m > w.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + m <= w.size(); ++i)
    if (occurs_at(w, i, pattern)) ++count;
  return count;
}

int trun(WordView w) {
  if (w.empty()) throw InvalidInput("trun of an empty word is undefined");
  int distinct = 1;
  for (std::size_t i = w.size() - 1; i > 0; --i) {
    if (w[i - 1] > w[i]) break;
    if (w[i - 1] < w[i]) ++distinct;
  }
  return distinct;
}

std::vector<Letter> skeleton(WordView w) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i == 0 || w[i] != w[i - 1]) out.push_back(w[i]);
  return out;
}

WordStats statistics(WordView w) {
  WordStats s;
  s.trun = trun(w);
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] < w[i])
      ++s.asc;
    else if (w[i - 1] > w[i])
      ++s.des;
    else
      ++s.lev;
  }
  return s;
}

}  // namespace flatcat
