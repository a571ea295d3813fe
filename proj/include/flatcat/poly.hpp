#pragma once

// Sparse polynomials in the indeterminates y, p, q, r with arbitrary-precision
// integer coefficients.
//
// Terms are kept in a vector sorted by packed exponent key; the key packs
// (y, p, q, r) as 16-bit fields from most to least significant, so key order
// is lexicographic order on exponent vectors.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace flatcat {

using BigInt = boost::multiprecision::cpp_int;
using Json = nlohmann::ordered_json;

enum class Var : int { y = 0, p = 1, q = 2, r = 3 };
inline constexpr std::array<Var, 4> kAllVars{Var::y, Var::p, Var::q, Var::r};
const char* var_name(Var v);
Var parse_var(std::string_view name);

struct ExponentVec {
  std::array<std::uint16_t, 4> e{};

  std::uint16_t operator[](Var v) const { return e[static_cast<int>(v)]; }
  std::uint16_t& operator[](Var v) { return e[static_cast<int>(v)]; }

  std::uint64_t pack() const;
  static ExponentVec unpack(std::uint64_t key);
  friend bool operator==(const ExponentVec&, const ExponentVec&) = default;
};

/// Integer values for a subset of the variables.
using Bindings = std::map<Var, BigInt>;

class MultiPoly {
 public:
  using Key = std::uint64_t;
  using Term = std::pair<Key, BigInt>;

  MultiPoly() = default;
  MultiPoly(int c);  // NOLINT: integer constants read naturally in formulas
  MultiPoly(const BigInt& c);

  static MultiPoly var(Var v, unsigned power = 1);
  static MultiPoly monomial(const ExponentVec& exps, BigInt coef);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the all-zero exponent vector.
  BigInt constant_term() const;
  BigInt coefficient(const ExponentVec& exps) const;
  unsigned degree(Var v) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const BigInt& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly substitute(const Bindings& bindings) const;
  MultiPoly derivative(Var v) const;
  /// Exact division of every coefficient; throws NonExpandable when inexact.
  MultiPoly divide_exact(const BigInt& c) const;
  /// Sum of all coefficients (value at y=p=q=r=1).
  BigInt sum_of_coefficients() const;
  bool has_nonnegative_coefficients() const;

  /// Human-readable form, e.g. "p^2 + 2*p*r + r^2".
  std::string str() const;

  /// [{"y":e1,"p":e2,"q":e3,"r":e4,"coef":"<decimal>"}, ...] in key order.
  Json to_json() const;
  static MultiPoly from_json(const Json& j);

 private:
  std::vector<Term> terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly substitute(const MultiPoly& a, const Bindings& bindings);

/// Collects terms from many products and merges them once; used by the
/// series recurrences where each coefficient is a long sum of products.
class TermAccumulator {
 public:
  void add(const MultiPoly& a);
  void add_product(const MultiPoly& a, const MultiPoly& b, int sign = 1);
  MultiPoly finish();

 private:
  std::vector<MultiPoly::Term> pending_;
};

}  // namespace flatcat
