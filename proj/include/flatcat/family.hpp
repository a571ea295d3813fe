#pragma once

// The five joint distributions. Each family tracks trun - 1 (marked by y)
// together with three consecutive patterns marked by p, q and r.

#include <array>
#include <string>
#include <string_view>

#include "flatcat/word.hpp"

namespace flatcat {

enum class Family { a, b, c, d, e };
inline constexpr std::array<Family, 5> kAllFamilies{Family::a, Family::b, Family::c, Family::d, Family::e};

/// Which pattern each of p, q, r marks. Data, not code: oracle comparisons
/// are driven from this table.
struct VariableRoles {
  Pattern p;
  Pattern q;
  Pattern r;
};

const VariableRoles& roles(Family f);

/// "A".."E" (catalog id of the family's generating function).
std::string family_id(Family f);
/// Accepts "a".."e" or "A".."E".
Family parse_family(std::string_view s);

}  // namespace flatcat
