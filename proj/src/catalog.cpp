#include "flatcat/catalog.hpp"

#include <array>
#include <map>

#include "flatcat/errors.hpp"

namespace flatcat {

namespace {

const XPoly x = XPoly::x();
const XPoly y = XPoly::var(Var::y);
const XPoly p = XPoly::var(Var::p);
const XPoly q = XPoly::var(Var::q);
const XPoly r = XPoly::var(Var::r);

XPoly sq(const XPoly& a) { return a * a; }
XPoly cube(const XPoly& a) { return a * a * a; }

// --- A: length, trun-1, asc, des, lev --------------------------------------

XPoly a_quadratic() { return 1 - 2 * (p + r) * x + (sq(p + r) - p * q) * sq(x); }

RationalGF make_A() {
  return (x * sq(1 - (p + r) * x)) / ((1 - (r + p * y) * x) * a_quadratic());
}
RationalGF make_U_A() { return (p * sq(x)) / a_quadratic(); }
RationalGF make_V_A() { return (x * (1 - (p + r) * x)) / a_quadratic(); }

// --- B: #122, #211, #111 ---------------------------------------------------

XPoly b_denominator() {
  return sq(1 - (1 + r) * x - (p - r) * sq(x)) - sq(x) * (1 + (p - r) * x) * (1 + (q - r) * x);
}

RationalGF make_B() {
  return (x * (1 + (1 - r) * x) * sq(1 - (1 + r) * x - (p - r) * sq(x))) /
         ((1 - (r + y) * x - (p - r) * sq(x) * y) * b_denominator());
}
RationalGF make_U_B() { return (sq(x) * (1 + (1 - r) * x) * (1 + (p - r) * x)) / b_denominator(); }

// --- C: #112, #121, #221 ---------------------------------------------------

XPoly c_alpha() {
  return 1 - 4 * x - (2 * p + q - 6) * sq(x) + (4 * p + 3 * q - r - p * q - 5) * cube(x) +
         (p - 1) * (p + 3 * q - r - 3) * pow(x, 4) + sq(p - 1) * (q - 1) * pow(x, 5);
}

RationalGF make_C() {
  return (x * sq(1 - 2 * x - (p - 1) * sq(x))) / ((1 - x * (1 + y) - (p - 1) * sq(x) * y) * c_alpha());
}
RationalGF make_U_C() { return (sq(x) * (1 + (p - 1) * x)) / c_alpha(); }
RationalGF make_V_C() { return (x * (1 - 2 * x - (p - 1) * sq(x))) / c_alpha(); }

// --- D: #123, #231, #221 ---------------------------------------------------

XPoly d_cubic() { return 1 - (p + 1) * x + (p - 1) * sq(x); }
XPoly d_kernel() { return 1 - x * (1 + p * y) + (p - 1) * sq(x) * y; }

RationalGF make_V_D() {
  return (x * (1 - (p - 1) * x) * d_cubic()) /
         (1 - 2 * (p + 1) * x + (sq(p) + 4 * p - 2) * sq(x) - (2 * sq(p) + p * q - p + r - 3) * cube(x) +
          (p - 1) * (p + q - 2) * pow(x, 4));
}

RationalGF make_D() {
  const RationalGF first = x / d_kernel();
  const XPoly second_num = sq(x) + (p * q - p + r - 1) * cube(x) - (p - 1) * (q - 1) * pow(x, 4) -
                           x * y * (p - 1) * sq(d_cubic());
  const RationalGF second = second_num / ((1 - (p - 1) * x) * d_cubic() * d_kernel());
  return first + second * make_V_D();
}

RationalGF make_U_D() { return (x / ((1 - (p - 1) * x) * d_cubic())) * make_V_D(); }
RationalGF make_W_D() { return (d_cubic() / ((1 - x) * (1 - (p - 1) * x))) * make_V_D(); }

// --- E: #112, #212, #312 ---------------------------------------------------

XPoly e_kernel() { return 1 - x - x * y - (p - 1) * sq(x) * y; }
XPoly e_quadratic() { return 1 - x - (p - 1) * sq(x); }
XPoly e_shared() { return q - 1 + (r - 2 * q + 1) * x + (p - 1) * (r - q) * sq(x); }

RationalGF make_V_E() {
  const XPoly alpha = 1 - 3 * x - (p + q - 4) * sq(x) + (p + 2 * q - r - 2) * cube(x) + (p - 1) * (q - r) * pow(x, 4);
  const XPoly beta = 1 - 4 * x - (2 * p + q - 6) * sq(x) + (3 * p + 2 * q - r - 4) * cube(x) +
                     (p - 1) * (p + q - r - 1) * pow(x, 4);
  return (x * alpha) / ((1 - x) * beta);
}

RationalGF make_E() {
  const RationalGF first = (x - 3 * sq(x) - (p - 3) * cube(x) + (p - 1) * pow(x, 4) - cube(x) * y * e_shared()) /
                           ((1 - x) * e_quadratic() * e_kernel());
  const RationalGF second = (x - sq(x) + sq(x) * y * e_shared()) / (e_quadratic() * e_kernel());
  return first + second * make_V_E();
}

RationalGF make_U_E() { return (RationalGF(1 - x) * make_V_E() - RationalGF(x)) / e_quadratic(); }
RationalGF make_W_E() { return (RationalGF(x) + RationalGF(x) * make_U_E()) / (1 - x); }

// --- Univariate rows --------------------------------------------------------

RationalGF make_trun() { return (x * sq(1 - 2 * x)) / ((1 - x - x * y) * (1 - 4 * x + 3 * sq(x))); }

RationalGF make_short_valley() {
  return (x * (1 - 2 * x - (q - 1) * sq(x))) / ((1 - x) * (1 - 3 * x - (q - 1) * sq(x)));
}

struct Table1Row {
  int cls;
  std::vector<const char*> patterns;
  RationalGF gf;
};

std::vector<Table1Row> make_table1() {
  std::vector<Table1Row> rows;
  rows.push_back({1, {"11"}, (x * (1 - (1 + q) * x)) / (1 - 2 * (1 + q) * x + q * (2 + q) * sq(x))});
  rows.push_back({2, {"12"}, (x * (1 - (1 + q) * x)) / (1 - 2 * (1 + q) * x + (1 + q + sq(q)) * sq(x))});
  rows.push_back({3, {"21"}, (x * (1 - 2 * x)) / (1 - 4 * x + (4 - q) * sq(x))});
  rows.push_back({4,
                  {"111"},
                  (x * (1 + (1 - q) * x) * (1 - (1 + q) * x - (1 - q) * sq(x))) /
                      (1 - 2 * (1 + q) * x - (2 - 4 * q - sq(q)) * sq(x) + 2 * q * (1 - q) * cube(x))});
  rows.push_back({5,
                  {"112", "122"},
                  (x * (1 - 2 * x + (1 - q) * sq(x))) /
                      (1 - 4 * x + (5 - 2 * q) * sq(x) - 3 * (1 - q) * cube(x) + sq(1 - q) * pow(x, 4))});
  rows.push_back({6, {"121"}, (x * (1 - 2 * x)) / (1 - 4 * x + (4 - q) * sq(x) - 2 * (1 - q) * cube(x))});
  rows.push_back({7,
                  {"123"},
                  (x * (1 + (1 - q) * x) * (1 - (1 + q) * x - (1 - q) * sq(x))) /
                      (1 - 2 * (1 + q) * x - (2 - 4 * q - sq(q)) * sq(x) + 2 * (1 - sq(q)) * cube(x) +
                       sq(1 - q) * pow(x, 4))});
  rows.push_back({8, {"211", "221", "231"}, (x * (1 - 2 * x)) / (1 - 4 * x + 3 * sq(x) + (1 - q) * cube(x))});
  rows.push_back({9,
                  {"212"},
                  (x * (1 - 3 * x + (3 - q) * sq(x) - 2 * (1 - q) * cube(x))) /
                      ((1 - x) * (1 - 4 * x + (4 - q) * sq(x) - 2 * (1 - q) * cube(x)))});
  rows.push_back({10,
                  {"312"},
                  (x * (1 - 3 * x + 2 * sq(x) + (1 - q) * cube(x))) /
                      ((1 - x) * (1 - 4 * x + 3 * sq(x) + (1 - q) * cube(x)))});
  return rows;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = make_table1();
  return rows;
}

std::vector<RoleBinding> family_roles(Family f) {
  const auto& rl = roles(f);
  return {{Var::y, "trun-1"}, {Var::p, rl.p.str()}, {Var::q, rl.q.str()}, {Var::r, rl.r.str()}};
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> out;
  const Family fams[] = {Family::a, Family::b, Family::c, Family::d, Family::e};
  for (Family f : fams) out.push_back({family_id(f), gf_family(f), EntryKind::joint, family_roles(f), true});
  out.push_back({"trun", gf_trun(), EntryKind::trun, {{Var::y, "trun-1"}}, true});
  for (const auto& row : table1_rows())
    for (const char* pat : row.patterns)
      out.push_back({std::string("F") + pat, row.gf, EntryKind::univariate, {{Var::q, pat}}, true});
  out.push_back({"shortValley", gf_short_valley(), EntryKind::univariate, {{Var::q, "short valleys"}}, true});
  for (Family f : fams) {
    const auto& forms = gf_uvw(f);
    const auto id = family_id(f);
    auto rl = family_roles(f);
    rl.erase(rl.begin());  // no y in the auxiliary series
    if (forms.u) out.push_back({"U_" + id, *forms.u, EntryKind::auxiliary, rl, false});
    if (forms.v) out.push_back({"V_" + id, *forms.v, EntryKind::auxiliary, rl, true});
    if (forms.w) out.push_back({"W_" + id, *forms.w, EntryKind::auxiliary, rl, false});
  }
  return out;
}

}  // namespace

const RationalGF& gf_A() {
  static const RationalGF gf = make_A();
  return gf;
}
const RationalGF& gf_B() {
  static const RationalGF gf = make_B();
  return gf;
}
const RationalGF& gf_C() {
  static const RationalGF gf = make_C();
  return gf;
}
const RationalGF& gf_D() {
  static const RationalGF gf = make_D();
  return gf;
}
const RationalGF& gf_E() {
  static const RationalGF gf = make_E();
  return gf;
}

const RationalGF& gf_family(Family f) {
  switch (f) {
    case Family::a: return gf_A();
    case Family::b: return gf_B();
    case Family::c: return gf_C();
    case Family::d: return gf_D();
    case Family::e: return gf_E();
  }
  throw NotInCatalog("unknown family");
}

const RationalGF& gf_trun() {
  static const RationalGF gf = make_trun();
  return gf;
}

const RationalGF& gf_short_valley() {
  static const RationalGF gf = make_short_valley();
  return gf;
}

const RationalGF& gf_cardinality() {
  static const RationalGF gf = (x * (1 - 2 * x)) / ((1 - x) * (1 - 3 * x));
  return gf;
}

const RationalGF& gf_table1(const Pattern& tau) {
  const auto s = tau.str();
  for (const auto& row : table1_rows())
    for (const char* pat : row.patterns)
      if (s == pat) return row.gf;
  throw NotInCatalog("pattern " + s + " has no single-pattern entry");
}

const std::vector<Pattern>& table1_patterns() {
  static const std::vector<Pattern> pats = [] {
    std::vector<Pattern> out;
    for (const auto& row : table1_rows())
      for (const char* pat : row.patterns) out.push_back(Pattern::parse(pat));
    return out;
  }();
  return pats;
}

int table1_class(const Pattern& tau) {
  const auto s = tau.str();
  for (const auto& row : table1_rows())
    for (const char* pat : row.patterns)
      if (s == pat) return row.cls;
  throw NotInCatalog("pattern " + s + " has no single-pattern entry");
}

const UVWForms& gf_uvw(Family f) {
  static const std::array<UVWForms, 5> forms = [] {
    std::array<UVWForms, 5> out;
    out[0] = {make_U_A(), make_V_A(), std::nullopt};
    out[1] = {make_U_B(), std::nullopt, std::nullopt};
    out[2] = {make_U_C(), make_V_C(), std::nullopt};
    out[3] = {make_U_D(), make_V_D(), make_W_D()};
    out[4] = {make_U_E(), make_V_E(), make_W_E()};
    return out;
  }();
  return forms[static_cast<int>(f)];
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw NotInCatalog("no catalog entry '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------

XSeries check_functional_equation(Family f, std::size_t order, const Bindings& bindings) {
  for (const auto& [v, value] : bindings)
    if (v == Var::y) throw InvalidInput("functional equations cannot specialize y");

  const XSeries F = series_expand(gf_family(f).substitute(bindings), order);
  const XSeries U = dy_at_1(F);
  const XSeries V = F.substitute({{Var::y, 1}});
  const XSeries W = F.substitute({{Var::y, 0}});
  auto S = [&](const XPoly& poly) { return poly.substitute(bindings); };
  // Polynomials in x enter as series truncated at the same order.
  auto as_series = [&](const XPoly& poly) {
    std::vector<MultiPoly> c(order + 1);
    const XPoly sp = S(poly);
    for (std::size_t k = 0; k <= order; ++k) c[k] = sp[k];
    return XSeries(std::move(c));
  };

  XSeries lhs;
  XSeries rhs;
  switch (f) {
    case Family::a:
      lhs = S(1 - x * (p * y + r)) * F;
      rhs = as_series(x) + S(q * x) * U;
      break;
    case Family::b:
      lhs = S(1 - (r + y) * x - (p - r) * sq(x) * y) * F;
      rhs = as_series(x + sq(x) * (1 - r)) + S(x * (1 + (q - r) * x)) * U;
      break;
    case Family::c:
      lhs = S(1 - x * (1 + y) - (p - 1) * sq(x) * y) * F;
      rhs = as_series(x) + S(sq(x) * (r + 1 + (p - 1) * x)) * U + S(q * sq(x) * (1 + (p - 1) * x)) * V;
      break;
    case Family::d:
      lhs = S(1 - x * (1 + p * y) - (1 - p) * sq(x) * y) * F;
      rhs = as_series(x) + S(sq(x) * (p * q + r + (1 - p) * q * x)) * U + S(sq(x) * (p + (1 - p) * x)) * V +
            S((1 - p) * x * (1 - x) * (x + y)) * W;
      break;
    case Family::e:
      lhs = S(1 - x - x * y - (p - 1) * sq(x) * y) * F;
      rhs = as_series(x + sq(x) * y) + S(x * (1 + r * x * y)) * U + S((q - r) * sq(x) * y) * V -
            S(x * y * (1 - (r - q + 1) * x)) * W;
      break;
  }
  return lhs - rhs;
}

}  // namespace flatcat
