#include "flatcat/series.hpp"

#include <algorithm>

#include "flatcat/errors.hpp"

namespace flatcat {

namespace {
const MultiPoly kZeroPoly;
}

XPoly::XPoly(int c) : XPoly(MultiPoly(c)) {}

XPoly::XPoly(const MultiPoly& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

XPoly::XPoly(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly XPoly::x(unsigned power) {
  std::vector<MultiPoly> c(power + 1);
  c[power] = 1;
  return XPoly(std::move(c));
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const MultiPoly& XPoly::operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZeroPoly; }

XPoly XPoly::operator-() const {
  XPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

XPoly operator+(const XPoly& a, const XPoly& b) {
  std::vector<MultiPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return XPoly(std::move(c));
}

XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<MultiPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    TermAccumulator acc;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (k >= i && k - i < b.coeffs_.size()) acc.add_product(a.coeffs_[i], b.coeffs_[k - i]);
    c[k] = acc.finish();
  }
  return XPoly(std::move(c));
}

XPoly XPoly::substitute(const Bindings& b) const {
  std::vector<MultiPoly> c;
  c.reserve(coeffs_.size());
  for (const auto& m : coeffs_) c.push_back(m.substitute(b));
  return XPoly(std::move(c));
}

XPoly XPoly::divide_exact(const BigInt& d) const {
  std::vector<MultiPoly> c;
  c.reserve(coeffs_.size());
  for (const auto& m : coeffs_) c.push_back(m.divide_exact(d));
  return XPoly(std::move(c));
}

std::string XPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].str() + ")";
    if (k == 1) out += "*x";
    if (k > 1) out += "*x^" + std::to_string(k);
  }
  return out;
}

XPoly pow(const XPoly& a, unsigned e) {
  XPoly out(1);
  for (unsigned i = 0; i < e; ++i) out = out * a;
  return out;
}

// ---------------------------------------------------------------------------

RationalGF::RationalGF(XPoly numerator, XPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  const MultiPoly& c0 = den_[0];
  if (c0.is_zero() || !c0.is_constant())
    throw NonExpandable("denominator constant term must be a nonzero integer, got " + c0.str());
  const BigInt unit = c0.constant_term();
  if (unit != 1) {
    num_ = num_.divide_exact(unit);
    den_ = den_.divide_exact(unit);
  }
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
  if (a.den_ == b.den_) return RationalGF(a.num_ + b.num_, a.den_);
  return RationalGF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalGF operator-(const RationalGF& a, const RationalGF& b) { return a + RationalGF(-b.num_, b.den_); }

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
  return RationalGF(a.num_ * b.num_, a.den_ * b.den_);
}

RationalGF operator/(const RationalGF& a, const XPoly& b) { return RationalGF(a.num_, a.den_ * b); }

RationalGF RationalGF::substitute(const Bindings& b) const {
  return RationalGF(num_.substitute(b), den_.substitute(b));
}

// ---------------------------------------------------------------------------

XSeries::XSeries(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

XSeries XSeries::zero(std::size_t order) { return XSeries(std::vector<MultiPoly>(order + 1)); }

bool XSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MultiPoly& m) { return m.is_zero(); });
}

XSeries XSeries::truncate(std::size_t order) const {
  if (order > this->order()) throw InvalidInput("cannot extend a series past its truncation order");
  return XSeries(std::vector<MultiPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

XSeries operator+(const XSeries& a, const XSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<MultiPoly> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return XSeries(std::move(c));
}

XSeries operator-(const XSeries& a, const XSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<MultiPoly> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] - b[k];
  return XSeries(std::move(c));
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<MultiPoly> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    TermAccumulator acc;
    for (std::size_t i = 0; i <= k; ++i) acc.add_product(a[i], b[k - i]);
    c[k] = acc.finish();
  }
  return XSeries(std::move(c));
}

XSeries operator*(const XPoly& a, const XSeries& b) {
  const std::size_t n = b.order();
  std::vector<MultiPoly> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    TermAccumulator acc;
    for (std::size_t i = 0; i <= k && static_cast<int>(i) <= a.degree(); ++i) acc.add_product(a[i], b[k - i]);
    c[k] = acc.finish();
  }
  return XSeries(std::move(c));
}

XSeries XSeries::substitute(const Bindings& b) const {
  std::vector<MultiPoly> c;
  c.reserve(coeffs_.size());
  for (const auto& m : coeffs_) c.push_back(m.substitute(b));
  return XSeries(std::move(c));
}

XSeries XSeries::derivative_at(Var v, const BigInt& value) const {
  std::vector<MultiPoly> c;
  c.reserve(coeffs_.size());
  for (const auto& m : coeffs_) c.push_back(m.derivative(v).substitute({{v, value}}));
  return XSeries(std::move(c));
}

Json XSeries::to_json() const {
  Json arr = Json::array();
  for (const auto& m : coeffs_) arr.push_back(m.to_json());
  return arr;
}

XSeries series_expand(const RationalGF& f, std::size_t order) {
  const XPoly& num = f.numerator();
  const XPoly& den = f.denominator();
  const int den_degree = den.degree();
  std::vector<MultiPoly> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    TermAccumulator acc;
    acc.add(num[n]);
    for (int k = 1; k <= den_degree && static_cast<std::size_t>(k) <= n; ++k)
      if (!den[k].is_zero()) acc.add_product(den[k], c[n - k], -1);
    c[n] = acc.finish();
  }
  return XSeries(std::move(c));
}

XSeries dy_at_1(const XSeries& s) { return s.derivative_at(Var::y, 1); }

bool series_eq(const XSeries& a, const XSeries& b, std::size_t order) {
  if (a.order() < order || b.order() < order)
    throw InvalidInput("series_eq: a series is truncated below the requested order");
  for (std::size_t k = 0; k <= order; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

}  // namespace flatcat
