#include "doctest.h"

#include "flatcat/errors.hpp"
#include "flatcat/poly.hpp"
#include "flatcat/series.hpp"

using namespace flatcat;

namespace {
const MultiPoly y = MultiPoly::var(Var::y);
const MultiPoly p = MultiPoly::var(Var::p);
const MultiPoly q = MultiPoly::var(Var::q);
}  // namespace

TEST_CASE("multivariate arithmetic") {
  const MultiPoly a = (p + q) * (p - q);
  CHECK(a == p * p - q * q);
  CHECK((a - a).is_zero());
  CHECK(a.substitute({{Var::p, 3}, {Var::q, 2}}) == MultiPoly(5));
  CHECK((p * p * q).derivative(Var::p) == MultiPoly(2) * p * q);
  CHECK((y * p + 1).constant_term() == 1);
  CHECK(MultiPoly(-4).has_nonnegative_coefficients() == false);
}

TEST_CASE("big coefficients") {
  MultiPoly big = 1;
  for (int i = 0; i < 80; ++i) big *= MultiPoly(3);
  CHECK(big.constant_term().str() == "147808829414345923316083210206383297601");
}

TEST_CASE("json round trip") {
  const MultiPoly a = MultiPoly(2) * p * q + y - 7;
  CHECK(MultiPoly::from_json(a.to_json()) == a);
  const Json j = p.to_json();
  CHECK(j.dump() == R"([{"y":0,"p":1,"q":0,"r":0,"coef":"1"}])");
}

TEST_CASE("series expansion of rational functions") {
  const XPoly x = XPoly::x();
  // x(1-2x)/((1-x)(1-3x)) = x + 2x^2 + 5x^3 + 14x^4 + ...
  const XSeries s = series_expand(x * (1 - 2 * x) / ((1 - x) * (1 - 3 * x)), 6);
  const long expect[] = {0, 1, 2, 5, 14, 41, 122};
  for (int n = 0; n <= 6; ++n) CHECK(s[n] == MultiPoly(static_cast<int>(expect[n])));

  // 1/(1-qx) has coefficients q^n
  const XSeries g = series_expand(XPoly(1) / (1 - XPoly(q) * x), 5);
  CHECK(g[5] == q * q * q * q * q);
}

TEST_CASE("denominators must be invertible at x=0") {
  const XPoly x = XPoly::x();
  CHECK_THROWS_AS(RationalGF(XPoly(1), x), NonExpandable);
  CHECK_THROWS_AS(RationalGF(XPoly(1), XPoly(q) + x), NonExpandable);
  CHECK_NOTHROW(RationalGF(XPoly(2) - 4 * x, XPoly(2)));
}

TEST_CASE("derivative at a point") {
  const XPoly x = XPoly::x();
  const XSeries s = series_expand(XPoly(1) / (1 - XPoly(y) * x), 4);
  const XSeries d = dy_at_1(s);
  for (int n = 0; n <= 4; ++n) CHECK(d[n] == MultiPoly(n));
}
