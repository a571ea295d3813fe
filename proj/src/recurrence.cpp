#include "flatcat/recurrence.hpp"

#include "flatcat/errors.hpp"

namespace flatcat {

namespace {

const MultiPoly kZero;
const MultiPoly P = MultiPoly::var(Var::p);
const MultiPoly Q = MultiPoly::var(Var::q);
const MultiPoly R = MultiPoly::var(Var::r);

void check_size(int N) {
  if (N < 1) throw InvalidInput("array size N must be at least 1");
}

void seed_three(StatArray& s) {
  s.set(1, 1) = 1;
  if (s.max_n() >= 2) {
    s.set(2, 1) = 1;
    s.set(2, 2) = 1;
  }
}

}  // namespace

StatArray::StatArray(Family f, int N) : family_(f), n_max_(N), rows_(static_cast<std::size_t>(N) + 1) {
  check_size(N);
  for (int n = 1; n <= N; ++n) rows_[n].resize(static_cast<std::size_t>(n) + 1);
}

const MultiPoly& StatArray::at(int n, int m) const {
  if (n < 1 || n > n_max_ || m < 1 || m > n) return kZero;
  return rows_[n][m];
}

MultiPoly& StatArray::set(int n, int m) {
  if (n < 1 || n > n_max_ || m < 1 || m > n) throw InvalidInput("array index out of range");
  return rows_[n][m];
}

MultiPoly StatArray::row_moment(int n) const {
  MultiPoly out;
  for (int m = 2; m <= n; ++m) out += at(n, m) * MultiPoly(m - 1);
  return out;
}

MultiPoly StatArray::row_total(int n) const {
  MultiPoly out;
  for (int m = 1; m <= n; ++m) out += at(n, m);
  return out;
}

XSeries StatArray::to_bivariate_series() const {
  std::vector<MultiPoly> c(static_cast<std::size_t>(n_max_) + 1);
  for (int n = 1; n <= n_max_; ++n)
    for (int m = 1; m <= n; ++m) c[n] += at(n, m) * MultiPoly::var(Var::y, static_cast<unsigned>(m - 1));
  return XSeries(std::move(c));
}

Json StatArray::to_json() const {
  Json out = Json::array();
  for (int n = 1; n <= n_max_; ++n)
    for (int m = 1; m <= n; ++m) out.push_back({{"n", n}, {"m", m}, {"poly", at(n, m).to_json()}});
  return out;
}

// ---------------------------------------------------------------------------

StatArray build_a(int N) {
  StatArray a(Family::a, N);
  a.set(1, 1) = 1;
  for (int n = 2; n <= N; ++n) {
    for (int m = 2; m <= n; ++m) a.set(n, m) = P * a.at(n - 1, m - 1) + R * a.at(n - 1, m);
    MultiPoly sum;
    for (int j = 2; j <= n - 1; ++j) sum += MultiPoly(j - 1) * a.at(n - 1, j);
    a.set(n, 1) = R * a.at(n - 1, 1) + Q * sum;
  }
  return a;
}

StatArray build_b(int N) {
  StatArray b(Family::b, N);
  seed_three(b);
  for (int n = 3; n <= N; ++n) {
    for (int m = 2; m <= n; ++m)
      b.set(n, m) = R * b.at(n - 1, m) + b.at(n - 1, m - 1) + (P - R) * b.at(n - 2, m - 1);
    b.set(n, 1) = R * b.at(n - 1, 1) + b.row_moment(n - 1) + (Q - R) * b.row_moment(n - 2);
  }
  return b;
}

StatArray build_c(int N) {
  StatArray c(Family::c, N);
  seed_three(c);
  for (int n = 3; n <= N; ++n) {
    for (int m = 2; m <= n; ++m)
      c.set(n, m) = c.at(n - 1, m) + c.at(n - 1, m - 1) + (P - 1) * c.at(n - 2, m - 1);
    MultiPoly first;
    for (int j = 2; j <= n - 2; ++j) first += MultiPoly(j - 1) * c.at(n - 2, j);
    MultiPoly second;
    for (int j = 2; j <= n - 1; ++j)
      second += (MultiPoly(j - 2) + Q) * (c.at(n - 2, j - 1) + (P - 1) * c.at(n - 3, j - 1));
    c.set(n, 1) = c.at(n - 1, 1) + R * first + second;
  }
  return c;
}

StatArray build_d(int N) {
  StatArray d(Family::d, N);
  seed_three(d);
  const MultiPoly one_minus_p = 1 - P;
  for (int n = 3; n <= N; ++n) {
    for (int m = 3; m <= n; ++m)
      d.set(n, m) = d.at(n - 1, m) + P * d.at(n - 1, m - 1) + one_minus_p * d.at(n - 2, m - 1);
    d.set(n, 2) = d.at(n - 1, 2) + d.at(n - 1, 1);
    MultiPoly s2;
    for (int j = 2; j <= n - 2; ++j) s2 += MultiPoly(j - 1) * d.at(n - 2, j);
    MultiPoly s3;
    for (int j = 2; j <= n - 3; ++j) s3 += MultiPoly(j - 1) * d.at(n - 3, j);
    MultiPoly tail;
    for (int j = 1; j <= n - 2; ++j) tail += P * d.at(n - 2, j) + one_minus_p * d.at(n - 3, j);
    d.set(n, 1) = d.at(n - 1, 1) + one_minus_p * (d.at(n - 2, 1) - d.at(n - 3, 1)) + (P * Q + R) * s2 +
                  one_minus_p * Q * s3 + tail;
  }
  return d;
}

StatArray build_e(int N) {
  StatArray e(Family::e, N);
  seed_three(e);
  for (int n = 3; n <= N; ++n) {
    for (int m = 3; m <= n; ++m)
      e.set(n, m) = e.at(n - 1, m) + e.at(n - 1, m - 1) + (P - 1) * e.at(n - 2, m - 1);
    MultiPoly s2;
    for (int j = 2; j <= n - 2; ++j) s2 += (R * MultiPoly(j - 2) + Q) * e.at(n - 2, j);
    e.set(n, 2) = e.at(n - 1, 2) + P * e.at(n - 2, 1) + s2;
    MultiPoly s1;
    for (int j = 2; j <= n - 1; ++j) s1 += MultiPoly(j - 1) * e.at(n - 1, j);
    e.set(n, 1) = e.at(n - 1, 1) + s1;
  }
  return e;
}

StatArray build(Family f, int N) {
  switch (f) {
    case Family::a: return build_a(N);
    case Family::b: return build_b(N);
    case Family::c: return build_c(N);
    case Family::d: return build_d(N);
    case Family::e: return build_e(N);
  }
  throw InvalidInput("unknown family");
}

// ---------------------------------------------------------------------------

UVWSeq uvw_from_array(const StatArray& s) {
  const int N = s.max_n();
  UVWSeq out;
  out.u.resize(static_cast<std::size_t>(N) + 1);
  out.v.resize(out.u.size());
  out.w.resize(out.u.size());
  for (int n = 1; n <= N; ++n) {
    out.u[n] = s.row_moment(n);
    out.v[n] = s.row_total(n);
    out.w[n] = s.at(n, 1);
  }
  return out;
}

bool has_w_recurrence(Family f) { return f == Family::d || f == Family::e; }

UVWSeq uvw_from_recurrence(Family f, int N) {
  check_size(N);
  // Indices below zero read as zero.
  std::vector<MultiPoly> u(static_cast<std::size_t>(N) + 1), v(u.size()), w(u.size());
  auto U = [&](int k) -> const MultiPoly& { return k < 0 ? kZero : u[k]; };
  auto V = [&](int k) -> const MultiPoly& { return k < 0 ? kZero : v[k]; };
  auto W = [&](int k) -> const MultiPoly& { return k < 0 ? kZero : w[k]; };
  auto seed = [&](int k, int uk, int vk, int wk) {
    if (k > N) return;
    u[k] = uk;
    v[k] = vk;
    w[k] = wk;
  };

  switch (f) {
    case Family::a:
      seed(1, 0, 1, 0);
      for (int n = 2; n <= N; ++n) {
        u[n] = (P + R) * U(n - 1) + P * V(n - 1);
        v[n] = (P + R) * V(n - 1) + Q * U(n - 1);
      }
      break;
    case Family::b:
      seed(1, 0, 1, 0);
      seed(2, 1, 2, 0);
      for (int n = 3; n <= N; ++n) {
        u[n] = (1 + R) * U(n - 1) + V(n - 1) + (P - R) * (U(n - 2) + V(n - 2));
        v[n] = U(n - 1) + (1 + R) * V(n - 1) + (Q - R) * U(n - 2) + (P - R) * V(n - 2);
      }
      break;
    case Family::c:
      seed(1, 0, 1, 0);
      seed(2, 1, 2, 0);
      for (int n = 3; n <= N; ++n) {
        u[n] = 2 * U(n - 1) + V(n - 1) + (P - 1) * (U(n - 2) + V(n - 2));
        v[n] = 2 * V(n - 1) + (R + 1) * U(n - 2) + (P + Q - 1) * V(n - 2) + (P - 1) * (U(n - 3) + Q * V(n - 3));
      }
      break;
    case Family::d: {
      seed(1, 0, 1, 1);
      seed(2, 1, 2, 1);
      const MultiPoly one_minus_p = 1 - P;
      for (int n = 3; n <= N; ++n) {
        w[n] = (P * Q + R) * U(n - 2) + one_minus_p * Q * U(n - 3) + P * V(n - 2) + W(n - 1) +
               one_minus_p * (V(n - 3) + W(n - 2) - W(n - 3));
        v[n] = (1 + P) * V(n - 1) + w[n] - P * W(n - 1) + one_minus_p * (V(n - 2) - W(n - 2));
        u[n] = (1 + P) * U(n - 1) + P * V(n - 1) + one_minus_p * (U(n - 2) + V(n - 2) + W(n - 1) - W(n - 2));
      }
      break;
    }
    case Family::e:
      seed(1, 0, 1, 1);
      seed(2, 1, 2, 1);
      for (int n = 3; n <= N; ++n) {
        w[n] = U(n - 1) + W(n - 1);
        v[n] = U(n - 1) + R * U(n - 2) + 2 * V(n - 1) + (P + Q - R - 1) * V(n - 2) - W(n - 1) +
               (R - Q + 1) * W(n - 2);
        u[n] = U(n - 1) + (P - 1) * U(n - 2) + v[n] - V(n - 1);
      }
      break;
  }

  UVWSeq out{std::move(u), std::move(v), std::move(w)};
  if (!has_w_recurrence(f)) out.w = uvw_from_array(build(f, N)).w;
  return out;
}

UVWSeq build_uvw(Family f, int N) {
  const UVWSeq by_def = uvw_from_array(build(f, N));
  const UVWSeq by_rec = uvw_from_recurrence(f, N);
  auto compare = [&](const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b, const char* name) {
    for (std::size_t n = 0; n < a.size(); ++n)
      if (a[n] != b[n])
        throw ConsistencyError("family " + family_id(f) + ": " + name + "_" + std::to_string(n) +
                               " recurrence gives " + b[n].str() + ", row sums give " + a[n].str());
  };
  compare(by_def.u, by_rec.u, "u");
  compare(by_def.v, by_rec.v, "v");
  compare(by_def.w, by_rec.w, "w");
  return by_def;
}

}  // namespace flatcat
