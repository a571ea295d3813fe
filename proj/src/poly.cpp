#include "flatcat/poly.hpp"

#include <algorithm>
#include <sstream>

#include "flatcat/errors.hpp"

namespace flatcat {

namespace {

constexpr std::uint64_t kFieldMask = 0xFFFF;

int shift_of(int var_index) { return 16 * (3 - var_index); }

// Sorts by key and sums equal keys, dropping zeros.
std::vector<MultiPoly::Term> normalize(std::vector<MultiPoly::Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MultiPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return out;
}

MultiPoly::Key add_keys(MultiPoly::Key a, MultiPoly::Key b) {
  // Fields never carry at desk-scale degrees; guard anyway.
  for (int i = 0; i < 4; ++i) {
    const auto s = shift_of(i);
    if (((a >> s) & kFieldMask) + ((b >> s) & kFieldMask) > kFieldMask)
      throw std::overflow_error("exponent overflow in MultiPoly product");
  }
  return a + b;
}

BigInt pow_big(const BigInt& base, unsigned e) {
  BigInt result = 1;
  for (unsigned i = 0; i < e; ++i) result *= base;
  return result;
}

}  // namespace

const char* var_name(Var v) {
  static constexpr const char* kNames[] = {"y", "p", "q", "r"};
  return kNames[static_cast<int>(v)];
}

Var parse_var(std::string_view name) {
  for (Var v : kAllVars)
    if (name == var_name(v)) return v;
  throw InvalidInput("unknown variable '" + std::string(name) + "' (expected y, p, q or r)");
}

std::uint64_t ExponentVec::pack() const {
  std::uint64_t key = 0;
  for (int i = 0; i < 4; ++i) key |= static_cast<std::uint64_t>(e[i]) << shift_of(i);
  return key;
}

ExponentVec ExponentVec::unpack(std::uint64_t key) {
  ExponentVec v;
  for (int i = 0; i < 4; ++i) v.e[i] = static_cast<std::uint16_t>((key >> shift_of(i)) & kFieldMask);
  return v;
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(int c) : MultiPoly(BigInt(c)) {}

MultiPoly::MultiPoly(const BigInt& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

MultiPoly MultiPoly::var(Var v, unsigned power) {
  ExponentVec e;
  e[v] = static_cast<std::uint16_t>(power);
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const ExponentVec& exps, BigInt coef) {
  MultiPoly out;
  if (coef != 0) out.terms_.emplace_back(exps.pack(), std::move(coef));
  return out;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  MultiPoly out;
  out.terms_ = normalize(std::move(terms));
  return out;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

BigInt MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].first == 0) return terms_[0].second;
  return 0;
}

BigInt MultiPoly::coefficient(const ExponentVec& exps) const {
  const Key key = exps.pack();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, Key k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) return it->second;
  return 0;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [key, coef] : terms_) d = std::max<unsigned>(d, ExponentVec::unpack(key)[v]);
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt sum = a->second + b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  TermAccumulator acc;
  acc.add_product(a, b);
  return acc.finish();
}

MultiPoly MultiPoly::substitute(const Bindings& bindings) const {
  if (bindings.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, coef] : terms_) {
    ExponentVec e = ExponentVec::unpack(key);
    BigInt c = coef;
    for (const auto& [v, value] : bindings) {
      if (e[v] == 0) continue;
      c *= pow_big(value, e[v]);
      e[v] = 0;
    }
    out.emplace_back(e.pack(), std::move(c));
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& [key, coef] : terms_) {
    ExponentVec e = ExponentVec::unpack(key);
    if (e[v] == 0) continue;
    BigInt c = coef * e[v];
    e[v] -= 1;
    out.emplace_back(e.pack(), std::move(c));
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::divide_exact(const BigInt& c) const {
  if (c == 0) throw NonExpandable("division by zero");
  MultiPoly out = *this;
  for (auto& t : out.terms_) {
    if (t.second % c != 0) throw NonExpandable("inexact coefficient division");
    t.second /= c;
  }
  return out;
}

BigInt MultiPoly::sum_of_coefficients() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

bool MultiPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coef] : terms_) {
    const ExponentVec e = ExponentVec::unpack(key);
    BigInt magnitude = coef < 0 ? BigInt(-coef) : coef;
    if (first)
      os << (coef < 0 ? "-" : "");
    else
      os << (coef < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (magnitude != 1 || key == 0) {
      os << magnitude;
      wrote = true;
    }
    for (Var v : kAllVars) {
      if (e[v] == 0) continue;
      if (wrote) os << '*';
      os << var_name(v);
      if (e[v] > 1) os << '^' << e[v];
      wrote = true;
    }
  }
  return os.str();
}

Json MultiPoly::to_json() const {
  Json arr = Json::array();
  for (const auto& [key, coef] : terms_) {
    const ExponentVec e = ExponentVec::unpack(key);
    Json t;
    for (Var v : kAllVars) t[var_name(v)] = e[v];
    t["coef"] = coef.str();
    arr.push_back(std::move(t));
  }
  return arr;
}

MultiPoly MultiPoly::from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& t : j) {
    ExponentVec e;
    for (Var v : kAllVars) {
      const int value = t.value(var_name(v), 0);
      if (value < 0 || value > 0xFFFF) throw InvalidInput("exponent out of range");
      e[v] = static_cast<std::uint16_t>(value);
    }
    const auto& coef = t.at("coef");
    BigInt c;
    try {
      c = coef.is_string() ? BigInt(coef.get<std::string>()) : BigInt(coef.get<long long>());
    } catch (const std::exception&) {
      throw InvalidInput("malformed coefficient in polynomial JSON");
    }
    terms.emplace_back(e.pack(), std::move(c));
  }
  return from_terms(std::move(terms));
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly substitute(const MultiPoly& a, const Bindings& bindings) { return a.substitute(bindings); }

// ---------------------------------------------------------------------------

void TermAccumulator::add(const MultiPoly& a) {
  pending_.insert(pending_.end(), a.terms().begin(), a.terms().end());
}

void TermAccumulator::add_product(const MultiPoly& a, const MultiPoly& b, int sign) {
  pending_.reserve(pending_.size() + a.size() * b.size());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      BigInt c = ca * cb;
      if (sign < 0) c = -c;
      pending_.emplace_back(add_keys(ka, kb), std::move(c));
    }
}

MultiPoly TermAccumulator::finish() {
  MultiPoly out = MultiPoly::from_terms(std::move(pending_));
  pending_.clear();
  return out;
}

}  // namespace flatcat
