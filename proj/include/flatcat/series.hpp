#pragma once

// Polynomials and truncated power series in x with MultiPoly coefficients,
// and rational functions in x that expand into such series.
//
// x is the only series variable: everything is dense in x and sparse in
// y, p, q, r.

#include <cstddef>
#include <string>
#include <vector>

#include "flatcat/poly.hpp"

namespace flatcat {

class XPoly {
 public:
  XPoly() = default;
  XPoly(int c);                // NOLINT
  XPoly(const MultiPoly& c);   // NOLINT
  explicit XPoly(std::vector<MultiPoly> coeffs);

  static XPoly x(unsigned power = 1);
  static XPoly var(Var v) { return XPoly(MultiPoly::var(v)); }

  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k (zero past the degree).
  const MultiPoly& operator[](std::size_t k) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  XPoly operator-() const;
  friend XPoly operator+(const XPoly& a, const XPoly& b);
  friend XPoly operator-(const XPoly& a, const XPoly& b);
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend bool operator==(const XPoly&, const XPoly&) = default;

  XPoly substitute(const Bindings& b) const;
  XPoly divide_exact(const BigInt& c) const;
  std::string str() const;

 private:
  void trim();
  std::vector<MultiPoly> coeffs_;
};

XPoly pow(const XPoly& a, unsigned e);

class XSeries;

/// numerator / denominator with the denominator's x^0 coefficient equal to 1.
class RationalGF {
 public:
  /// Normalizes the denominator's constant term: an integer unit is divided
  /// out directly, another nonzero integer only when it divides every
  /// coefficient exactly; anything else throws NonExpandable.
  RationalGF(XPoly numerator, XPoly denominator);
  RationalGF(const XPoly& p) : RationalGF(p, XPoly(1)) {}  // NOLINT

  const XPoly& numerator() const { return num_; }
  const XPoly& denominator() const { return den_; }

  friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator/(const RationalGF& a, const XPoly& b);

  RationalGF substitute(const Bindings& b) const;

 private:
  XPoly num_;
  XPoly den_;
};

inline RationalGF operator/(const XPoly& a, const XPoly& b) { return RationalGF(a, b); }

/// Coefficients of x^0..x^order; arithmetic truncates to the smaller order.
class XSeries {
 public:
  XSeries() = default;
  XSeries(std::vector<MultiPoly> coeffs);  // NOLINT
  static XSeries zero(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  const MultiPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
  MultiPoly& operator[](std::size_t n) { return coeffs_.at(n); }
  bool is_zero() const;

  XSeries truncate(std::size_t order) const;

  friend XSeries operator+(const XSeries& a, const XSeries& b);
  friend XSeries operator-(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XPoly& a, const XSeries& b);
  friend bool operator==(const XSeries&, const XSeries&) = default;

  XSeries substitute(const Bindings& b) const;
  /// d/dv, then v := value, coefficientwise.
  XSeries derivative_at(Var v, const BigInt& value) const;

  Json to_json() const;

 private:
  std::vector<MultiPoly> coeffs_;
};

/// Power-series coefficients of f through x^order via the linear recurrence
/// induced by the (normalized) denominator.
XSeries series_expand(const RationalGF& f, std::size_t order);

/// d/dy at y = 1.
XSeries dy_at_1(const XSeries& s);

/// Exact coefficient equality through x^order; both series must reach order.
bool series_eq(const XSeries& a, const XSeries& b, std::size_t order);

}  // namespace flatcat
