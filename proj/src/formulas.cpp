#include "flatcat/formulas.hpp"

#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "flatcat/errors.hpp"

namespace flatcat {

namespace {

using Rational = boost::multiprecision::cpp_rational;

BigInt pow_int(int base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// 3^e for any integer e; negative exponents appear in the tot columns at n = 2.
Rational pow3(int e) {
  if (e >= 0) return Rational(pow_int(3, e));
  return Rational(BigInt(1), pow_int(3, -e));
}

BigInt exact(const Rational& value, const std::string& what) {
  if (denominator(value) != 1) throw ConsistencyError(what + " is not an integer");
  return numerator(value);
}

void require_n(int n, int min_n, const std::string& what) {
  if (n < min_n) throw InvalidInput(what + " requires n >= " + std::to_string(min_n));
}

}  // namespace

BigInt binom(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt out = 1;
  for (long i = 1; i <= b; ++i) {
    out *= a - b + i;
    out /= i;
  }
  return out;
}

BigInt cardinality(int n) {
  require_n(n, 1, "cardinality");
  return exact((pow3(n - 1) + 1) / 2, "cardinality");
}

BigInt trun_sum(int n) {
  require_n(n, 1, "trun_sum");
  return exact((pow3(n - 1) - 1) / 2, "trun_sum");
}

namespace {

BigInt tot11(int n) { return exact(Rational(n - 1) * (pow3(n - 2) + 1) / 2, "tot(11)"); }
BigInt tot12(int n) { return exact(Rational(n - 1) * (pow3(n - 1) + 1) / 4, "tot(12)"); }
BigInt tot21(int n) { return exact(Rational(n - 1) * (pow3(n - 2) - 1) / 4, "tot(21)"); }

}  // namespace

BigInt tot(const Pattern& tau, int n) {
  const std::string s = tau.str();
  require_n(n, 2, "tot(" + s + ")");
  if (s == "11") return tot11(n);
  if (s == "12") return tot12(n);
  if (s == "21") return tot21(n);
  if (s == "111") return tot11(n - 1);
  if (s == "112" || s == "122") return tot12(n - 1);
  if (s == "121") return exact((Rational(n + 1) * pow3(n - 3) + n - 3) / 4, "tot(121)");
  if (s == "123") return exact(Rational(n - 2) * pow3(n - 3), "tot(123)");
  if (s == "211" || s == "221" || s == "231") return tot21(n - 1);
  if (s == "212") return exact(Rational(n - 2) * (pow3(n - 3) - 1) / 4, "tot(212)");
  if (s == "312") return exact((Rational(n - 5) * pow3(n - 3) + n - 1) / 4, "tot(312)");
  throw NotInCatalog("no tot formula for pattern " + s);
}

namespace {

BigInt f122(int n) {
  BigInt out = 0;
  for (long r = 0; r <= (n - 1) / 2; ++r) out += binom(n + r, 3 * r + 1);
  return out;
}

BigInt f211(int n) {
  BigInt out = 0;
  for (long j = 1; j <= n; ++j)
    for (long r = 0; r <= (j - 1) / 2; ++r) out += binom(j - 1, 2 * r) * binom(n - r - 1, j - r - 1);
  return out;
}

BigInt f111(int n) {
  BigInt out = 0;
  for (long k = 0; k <= n / 2; ++k) out += binom(n - k, k) * pow_int(2, static_cast<int>(n - k - 2));
  return out;
}

BigInt f121(int n) {
  BigInt out = 0;
  for (long j = 1; j <= n; ++j)
    for (long p = 0; p <= (j - 1) / 2; ++p)
      for (long r = 0; r <= p; ++r) out += binom(p, r) * binom(j - p - 1, 2 * p - r) * binom(n - r - 1, j - 1);
  return out;
}

BigInt f123(int n) {
  BigInt out = 1;
  for (long j = 2; j <= n; ++j)
    for (long l = 1; l <= j - 1; ++l) out += binom(j - 2, l - 1) * binom(n - j + l, j - 1);
  return out;
}

// 212 and 312 differ only in the last binomial.
template <class Last>
BigInt valley_sum(int n, Last last) {
  BigInt out = 1;
  for (long j = 2; j <= n; ++j)
    for (long p = 1; p <= j / 2; ++p)
      for (long r = 0; r <= p - 1; ++r) out += binom(p - 1, r) * binom(j - p, p + r) * last(j, p, r);
  return out;
}

BigInt f212(int n) {
  return valley_sum(n, [n](long j, long p, long r) { return binom(n - p + r, j - 1); });
}

BigInt f312(int n) {
  return valley_sum(n, [n](long j, long, long r) { return binom(n - r - 1, j - 1); });
}

BigInt f11(int n) { return n == 1 ? BigInt(1) : pow_int(2, n - 2); }

}  // namespace

int avoiders_min_n(const Pattern& tau) {
  const std::string s = tau.str();
  for (const auto& p : avoider_patterns())
    if (p == tau) return s == "111" ? 3 : 1;
  throw NotInCatalog("no avoider formula for pattern " + s);
}

const std::vector<Pattern>& avoider_patterns() {
  static const std::vector<Pattern> pats = [] {
    std::vector<Pattern> out;
    for (const char* s : {"11", "111", "112", "122", "121", "123", "211", "221", "231", "212", "312"})
      out.push_back(Pattern::parse(s));
    return out;
  }();
  return pats;
}

BigInt avoiders(const Pattern& tau, int n) {
  const std::string s = tau.str();
  require_n(n, avoiders_min_n(tau), "avoiders(" + s + ")");
  if (s == "11") return f11(n);
  if (s == "111") return f111(n);
  if (s == "112" || s == "122") return f122(n);
  if (s == "121") return f121(n);
  if (s == "123") return f123(n);
  if (s == "211" || s == "221" || s == "231") return f211(n);
  if (s == "212") return f212(n);
  return f312(n);
}

std::optional<std::string> oeis_label(const std::string& key) {
  static const std::map<std::string, std::string> labels{
      {"cardinality", "A007051"}, {"11", "A082133"}, {"21", "A261064"}, {"123", "A027471"}, {"312", "A212337"}};
  auto it = labels.find(key);
  if (it == labels.end()) return std::nullopt;
  return it->second;
}

}  // namespace flatcat
