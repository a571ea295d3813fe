#pragma once

// Closed-form generating functions, stored exactly as printed (no
// simplification), plus the five functional equations as residual checks.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatcat/family.hpp"
#include "flatcat/series.hpp"

namespace flatcat {

enum class EntryKind {
  joint,       // y, p, q, r: one of the five families
  trun,        // y only
  univariate,  // q marks a single pattern (single-pattern rows, short valleys)
  auxiliary,   // U/V/W sequences of a family
};

struct RoleBinding {
  Var var;
  std::string meaning;  // pattern digits, "trun-1", or "short valleys"
};

struct CatalogEntry {
  std::string id;
  RationalGF gf;
  EntryKind kind;
  std::vector<RoleBinding> roles;
  /// Counts words: at y=p=q=r=1 the series is x(1-2x)/((1-x)(1-3x)).
  bool full_distribution = false;
};

/// All entries, in a fixed order.
const std::vector<CatalogEntry>& catalog();
/// Throws NotInCatalog.
const CatalogEntry& catalog_entry(std::string_view id);

const RationalGF& gf_A();
const RationalGF& gf_B();
const RationalGF& gf_C();
const RationalGF& gf_D();
const RationalGF& gf_E();
const RationalGF& gf_family(Family f);
/// Distribution of trun - 1 alone.
const RationalGF& gf_trun();
/// Short valleys (212 plus 312 occurrences) marked by q.
const RationalGF& gf_short_valley();

/// F_tau(x; q) for the 13 patterns of length two or three. Throws NotInCatalog.
const RationalGF& gf_table1(const Pattern& tau);
/// The 13 patterns in table order.
const std::vector<Pattern>& table1_patterns();
/// Equivalence-class number 1..10 of a single-pattern row.
int table1_class(const Pattern& tau);

struct UVWForms {
  std::optional<RationalGF> u;
  std::optional<RationalGF> v;
  std::optional<RationalGF> w;
};

/// The auxiliary closed forms printed alongside each family's solution.
const UVWForms& gf_uvw(Family f);

/// LHS - RHS of the family's functional equation through x^order, with the
/// closed form substituted for the unknown. Bindings (p, q, r only)
/// specialize both the closed form and the equation. Zero when consistent.
XSeries check_functional_equation(Family f, std::size_t order, const Bindings& bindings = {});

/// x(1-2x)/((1-x)(1-3x)).
const RationalGF& gf_cardinality();

}  // namespace flatcat
