#include "flatcat/bijection.hpp"

#include "flatcat/enumerate.hpp"
#include "flatcat/errors.hpp"

namespace flatcat {

namespace {

void require_flattened(WordView w, const char* what) {
  if (!is_flattened(w)) throw InvalidInput(std::string(what) + ": " + format_letters(w) + " is not flattened");
}

bool has_level(WordView w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return true;
  return false;
}

void append_range(std::vector<Letter>& out, Letter from, Letter to) {
  for (Letter v = from; v <= to; ++v) out.push_back(v);
}

}  // namespace

// ---------------------------------------------------------------------------

CatalanWord prime_map(const BinaryWord& b) {
  const auto bits = b.bits();
  std::vector<long> k;  // k_1..k_r
  std::vector<long> s;  // s_1..s_r
  std::size_t i = 0;
  long zeros_so_far = 0;
  long t = 0;
  while (i < bits.size()) {
    long z = 0;
    while (i < bits.size() && bits[i] == 0) ++z, ++i;
    long o = 0;
    while (i < bits.size() && bits[i] == 1) ++o, ++i;
    if (o == 0) {
      t = z;
      break;
    }
    zeros_so_far += z;
    k.push_back(z + o);
    s.push_back(zeros_so_far);
  }

  const long r = static_cast<long>(k.size());
  std::vector<Letter> out;
  if (r == 0) {
    append_range(out, 1, static_cast<Letter>(t + 1));
    return CatalanWord::unchecked(std::move(out));
  }
  append_range(out, 1, static_cast<Letter>(k[0]));
  for (long a = 1; a <= r - 1; ++a)
    append_range(out, static_cast<Letter>(s[a - 1] - a + 1), static_cast<Letter>(s[a - 1] - a + k[a]));
  append_range(out, static_cast<Letter>(s[r - 1] - r + 1), static_cast<Letter>(s[r - 1] - r + t + 1));
  return CatalanWord::unchecked(std::move(out));
}

BinaryWord prime_inverse(const CatalanWord& w) {
  require_flattened(w, "prime_inverse");
  if (has_level(w)) throw InvalidInput("prime_inverse: " + w.str() + " contains a level");
  const auto runs = increasing_runs(w);
  const long r = static_cast<long>(runs.size()) - 1;
  std::vector<std::uint8_t> bits;
  long prev_s = 0;
  for (long a = 1; a <= r; ++a) {
    const long k = static_cast<long>(runs[a - 1].size());
    const long s = w[runs[a].begin] + a - 1;
    const long z = s - prev_s;
    const long l = k - z;
    if (z < 1 || l < 1) throw ConsistencyError("prime_inverse: bad run decomposition of " + w.str());
    bits.insert(bits.end(), static_cast<std::size_t>(z), 0);
    bits.insert(bits.end(), static_cast<std::size_t>(l), 1);
    prev_s = s;
  }
  bits.insert(bits.end(), runs.back().size() - 1, 0);
  return BinaryWord(std::move(bits));
}

// ---------------------------------------------------------------------------

CatalanWord trun_map(const MarkedWord& mw) {
  const CatalanWord& alpha = mw.word;
  require_flattened(alpha, "trun_map");
  const auto runs = increasing_runs(alpha);
  const Segment last = runs.back();
  if (mw.mark < last.begin || mw.mark >= last.end)
    throw InvalidInput("trun_map: mark " + std::to_string(mw.mark) + " is outside the terminal run");
  const Letter a1 = alpha[last.begin];
  const Letter at = alpha.back();
  const Letter designated = alpha[mw.mark];
  if (designated == a1) throw InvalidInput("trun_map: the smallest terminal-run letter cannot be designated");

  // Where the terminal string a_p^{k_p}...a_t^{k_t} begins.
  std::size_t cut = last.begin;
  while (alpha[cut] < designated) ++cut;
  std::vector<Letter> out;
  if (designated == at) {
    out.assign(alpha.size() - cut, 1);
    for (std::size_t i = 0; i < cut; ++i) out.push_back(alpha[i] + 1);
  } else {
    for (std::size_t i = cut; i < alpha.size(); ++i) out.push_back(alpha[i] - designated + 1);
    for (std::size_t i = 0; i < cut; ++i) out.push_back(alpha[i]);
  }
  return CatalanWord::unchecked(std::move(out));
}

MarkedWord trun_map_inverse(const CatalanWord& w) {
  require_flattened(w, "trun_map_inverse");
  std::size_t lead = 0;
  while (lead < w.size() && w[lead] == 1) ++lead;
  if (lead == w.size()) throw InvalidInput("trun_map_inverse: 1^n is not in the range");
  std::size_t ones_runs = 0;
  for (const auto& seg : letter_runs(w))
    if (w[seg.begin] == 1) ++ones_runs;

  std::vector<Letter> out;
  if (ones_runs == 1) {
    for (std::size_t i = lead; i < w.size(); ++i) out.push_back(w[i] - 1);
    const Letter top = out.back() + 1;
    const std::size_t mark = out.size();
    out.insert(out.end(), lead, top);
    return {CatalanWord::unchecked(std::move(out)), mark};
  }
  const std::size_t head = increasing_runs(w).front().end;
  for (std::size_t i = head; i < w.size(); ++i) out.push_back(w[i]);
  const Letter shift = out.back();
  const std::size_t mark = out.size();
  for (std::size_t i = 0; i < head; ++i) out.push_back(w[i] + shift);
  return {CatalanWord::unchecked(std::move(out)), mark};
}

// ---------------------------------------------------------------------------

CatalanWord tilde(const CatalanWord& w) {
  require_flattened(w, "tilde");
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& run : increasing_runs(w)) {
    const auto view = WordView(w).subspan(run.begin, run.size());
    const auto blocks = letter_runs(view);
    for (std::size_t i = 0; i < blocks.size(); ++i)
      out.insert(out.end(), blocks[blocks.size() - 1 - i].size(), view[blocks[i].begin]);
  }
  return CatalanWord::unchecked(std::move(out));
}

CatalanWord hat(const CatalanWord& w) {
  require_flattened(w, "hat");
  const auto blocks = letter_runs(w);
  std::vector<Letter> out(w.vec());
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    const Segment A = blocks[i];
    const Segment B = blocks[i + 1];
    const Letter a = w[A.begin];
    const Letter b = w[B.begin];
    if (a <= b) continue;
    std::size_t pos = A.begin;
    for (std::size_t j = 0; j < B.size(); ++j) out[pos++] = a;
    for (std::size_t j = 0; j < A.size(); ++j) out[pos++] = b;
  }
  return CatalanWord::unchecked(std::move(out));
}

CatalanWord swap_231_221(const CatalanWord& w) {
  require_flattened(w, "swap_231_221");
  std::vector<Letter> out(w.vec());
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    const Letter a = w[i];
    if (w[i + 2] >= a) continue;
    if (w[i + 1] == a + 1) out[i + 1] = a;
    else if (w[i + 1] == a) out[i + 1] = a + 1;
  }
  return CatalanWord::unchecked(std::move(out));
}

// ---------------------------------------------------------------------------

std::size_t valley_at(WordView w, std::size_t i) {
  if (i + 2 >= w.size() || w[i + 1] >= w[i]) return 0;
  const Letter b = w[i + 1];
  std::size_t j = i + 1;
  while (j < w.size() && w[j] == b) ++j;
  if (j == w.size() || w[j] != b + 1) return 0;
  return j - i - 1;
}

MarkedWord valley_map(const MarkedWord& mw) {
  const CatalanWord& w = mw.word;
  require_flattened(w, "valley_map");
  static const Pattern k312 = Pattern::parse("312");
  const std::size_t i = mw.mark;
  if (i + 2 >= w.size() || !occurs_at(w, i, k312) || w[i + 2] != w[i + 1] + 1)
    throw InvalidInput("valley_map: no 312 occurrence at index " + std::to_string(i) + " of " + w.str());
  const Letter a = w[i];
  std::size_t start = i;
  while (w[start - 1] == a) --start;  // a > 1, so a run of a is always preceded by a - 1
  const std::size_t l = i - start + 1;
  std::vector<Letter> out(w.vec().begin(), w.vec().begin() + static_cast<long>(start));
  out.insert(out.end(), l, w[i + 1]);
  out.insert(out.end(), w.vec().begin() + static_cast<long>(i) + 2, w.vec().end());
  return {CatalanWord::unchecked(std::move(out)), start - 1};
}

MarkedWord valley_map_inverse(const MarkedWord& mw) {
  const CatalanWord& w = mw.word;
  require_flattened(w, "valley_map_inverse");
  const std::size_t i = mw.mark;
  const std::size_t l = i < w.size() ? valley_at(w, i) : 0;
  if (l == 0) throw InvalidInput("valley_map_inverse: no valley at index " + std::to_string(i) + " of " + w.str());
  const Letter c = w[i];
  const Letter b = w[i + 1];
  std::vector<Letter> out(w.vec().begin(), w.vec().begin() + static_cast<long>(i) + 1);
  out.insert(out.end(), l, c + 1);
  out.push_back(b);
  out.insert(out.end(), w.vec().begin() + static_cast<long>(i + l) + 1, w.vec().end());
  return {CatalanWord::unchecked(std::move(out)), i + l};
}

// ---------------------------------------------------------------------------

std::vector<BinaryWord> binary_words(int n) {
  if (n < 2) throw InvalidInput("binary words need n >= 2");
  const std::size_t len = static_cast<std::size_t>(n) - 1;
  std::vector<BinaryWord> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (len - 1)); ++code) {
    std::vector<std::uint8_t> bits(len, 0);
    for (std::size_t j = 1; j < len; ++j) bits[j] = static_cast<std::uint8_t>((code >> (len - 1 - j)) & 1);
    out.emplace_back(std::move(bits));
  }
  return out;
}

std::vector<MarkedWord> trun_designations(int n) {
  std::vector<MarkedWord> out;
  for (const auto& w : collect(iter_flattened(n))) {
    const Segment last = increasing_runs(w).back();
    for (std::size_t i = last.begin + 1; i < last.end; ++i)
      if (w[i] != w[i - 1]) out.push_back({w, i});
  }
  return out;
}

std::vector<MarkedWord> marked_occurrences(int n, const Pattern& tau) {
  std::vector<MarkedWord> out;
  for (const auto& w : collect(iter_flattened(n)))
    for (std::size_t i = 0; i + tau.size() <= w.size(); ++i)
      if (occurs_at(w, i, tau)) out.push_back({w, i});
  return out;
}

std::vector<MarkedWord> marked_valleys(int n) {
  std::vector<MarkedWord> out;
  for (const auto& w : collect(iter_flattened(n)))
    for (std::size_t i = 0; i < w.size(); ++i)
      if (valley_at(w, i) > 0) out.push_back({w, i});
  return out;
}

}  // namespace flatcat
