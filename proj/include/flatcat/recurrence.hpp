#pragma once

// Triangular statistic arrays s_{n,m} (n = length, m = trun) for the five
// families, built from their row recurrences, and the first-moment / total /
// m=1 sequences u_n, v_n, w_n.

#include <vector>

#include "flatcat/family.hpp"
#include "flatcat/series.hpp"

namespace flatcat {

class StatArray {
 public:
  StatArray(Family f, int N);

  Family family() const { return family_; }
  int max_n() const { return n_max_; }

  /// s_{n,m}; zero outside 1 <= m <= n <= N (rows n <= 0 are virtual zeros).
  const MultiPoly& at(int n, int m) const;
  MultiPoly& set(int n, int m);

  /// u_n = sum (m-1) s_{n,m}, v_n = sum s_{n,m}, w_n = s_{n,1}, read off the rows.
  MultiPoly row_moment(int n) const;
  MultiPoly row_total(int n) const;

  /// sum_{n,m} s_{n,m} x^n y^(m-1) through x^N.
  XSeries to_bivariate_series() const;

  /// Rows as JSON: [{"n":..,"m":..,"poly":[...]}, ...].
  Json to_json() const;

 private:
  Family family_;
  int n_max_;
  std::vector<std::vector<MultiPoly>> rows_;  // rows_[n][m], m in 1..n
};

StatArray build_a(int N);
StatArray build_b(int N);
StatArray build_c(int N);
StatArray build_d(int N);
StatArray build_e(int N);
StatArray build(Family f, int N);

struct UVWSeq {
  std::vector<MultiPoly> u;  // index 0..N
  std::vector<MultiPoly> v;
  std::vector<MultiPoly> w;

  XSeries u_series() const { return XSeries(u); }
  XSeries v_series() const { return XSeries(v); }
  XSeries w_series() const { return XSeries(w); }
};

/// u, v, w from the definitional row sums.
UVWSeq uvw_from_array(const StatArray& s);

/// u, v, w from the family's own recurrence system and initial values.
/// Families a, b, c have no w recurrence; w is then taken from the array
/// definition (s_{n,1}) so the returned sequences are always complete.
UVWSeq uvw_from_recurrence(Family f, int N);

/// Whether the family's system includes a recurrence for w.
bool has_w_recurrence(Family f);

/// Builds both routes and throws ConsistencyError if they disagree.
UVWSeq build_uvw(Family f, int N);

}  // namespace flatcat
