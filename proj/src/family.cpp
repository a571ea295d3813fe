#include "flatcat/family.hpp"

#include "flatcat/errors.hpp"

namespace flatcat {

const VariableRoles& roles(Family f) {
  static const std::array<VariableRoles, 5> kRoles{{
      {Pattern({1, 2}), Pattern({2, 1}), Pattern({1, 1})},           // asc, des, lev
      {Pattern({1, 2, 2}), Pattern({2, 1, 1}), Pattern({1, 1, 1})},
      {Pattern({1, 1, 2}), Pattern({1, 2, 1}), Pattern({2, 2, 1})},
      {Pattern({1, 2, 3}), Pattern({2, 3, 1}), Pattern({2, 2, 1})},
      {Pattern({1, 1, 2}), Pattern({2, 1, 2}), Pattern({3, 1, 2})},
  }};
  return kRoles[static_cast<int>(f)];
}

std::string family_id(Family f) { return std::string(1, static_cast<char>('A' + static_cast<int>(f))); }

Family parse_family(std::string_view s) {
  if (s.size() == 1) {
    const char c = static_cast<char>(s[0] >= 'a' ? s[0] - 'a' + 'A' : s[0]);
    if (c >= 'A' && c <= 'E') return static_cast<Family>(c - 'A');
  }
  throw InvalidInput("unknown family '" + std::string(s) + "' (expected a-e)");
}

}  // namespace flatcat
