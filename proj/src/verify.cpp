#include "flatcat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "flatcat/bijection.hpp"
#include "flatcat/catalog.hpp"
#include "flatcat/enumerate.hpp"
#include "flatcat/errors.hpp"
#include "flatcat/formulas.hpp"
#include "flatcat/oracle.hpp"
#include "flatcat/recurrence.hpp"

namespace flatcat {

bool VerifyReport::passed() const {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

Json VerifyReport::to_json() const {
  Json out;
  out["suite"] = suite;
  Json arr = Json::array();
  for (const auto& c : cases)
    arr.push_back({{"id", c.id}, {"n_range", {c.n_lo, c.n_hi}}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  out["cases"] = std::move(arr);
  out["elapsed"] = elapsed;
  return out;
}

namespace {

constexpr int kMaxBruteForce = 16;

class Cases {
 public:
  explicit Cases(std::vector<VerifyCase>& out) : out_(out) {}

  // Runs body; the case fails with the first reported mismatch or on any exception.
  void run(const std::string& id, int lo, int hi, const std::function<void(std::function<void(std::string)>)>& body) {
    VerifyCase c{id, lo, hi, true, ""};
    auto fail = [&c](std::string detail) {
      if (c.pass) {
        c.pass = false;
        c.detail = std::move(detail);
      }
    };
    try {
      body(fail);
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    out_.push_back(std::move(c));
  }

 private:
  std::vector<VerifyCase>& out_;
};

using Fail = std::function<void(std::string)>;

const Bindings kAllOnes{{Var::y, 1}, {Var::p, 1}, {Var::q, 1}, {Var::r, 1}};

std::string mismatch(const std::string& what, int n, const MultiPoly& expected, const MultiPoly& got) {
  return what + " at n=" + std::to_string(n) + ": expected " + expected.str() + ", got " + got.str();
}

std::string mismatch(const std::string& what, int n, const BigInt& expected, const BigInt& got) {
  return what + " at n=" + std::to_string(n) + ": expected " + expected.str() + ", got " + got.str();
}

void compare_series(const XSeries& a, const XSeries& b, int lo, int hi, const std::string& what, const Fail& fail) {
  for (int n = lo; n <= hi; ++n)
    if (a[n] != b[n]) return fail(mismatch(what, n, a[n], b[n]));
}

BigInt coefficient_dq_at_1(const XSeries& s, int n) {
  return s[n].derivative(Var::q).substitute({{Var::q, 1}}).constant_term();
}

// --- suites -----------------------------------------------------------------

void suite_cardinality(Cases& cases, const VerifyOptions& o) {
  cases.run("brute-force |F_n|", 1, o.max_n, [&](const Fail& fail) {
    for (int n = 1; n <= o.max_n; ++n) {
      const BigInt brute = iter_flattened(n).count();
      if (brute != cardinality(n)) return fail(mismatch("|F_n|", n, cardinality(n), brute));
    }
  });
  cases.run("cardinality series", 1, o.terms, [&](const Fail& fail) {
    const XSeries s = series_expand(gf_cardinality(), o.terms);
    for (int n = 1; n <= o.terms; ++n)
      if (s[n].constant_term() != cardinality(n)) return fail(mismatch("[x^n]", n, cardinality(n), s[n].constant_term()));
  });
  for (const auto& e : catalog()) {
    if (!e.full_distribution) continue;
    cases.run("all-ones specialization " + e.id, 1, o.terms, [&](const Fail& fail) {
      const XSeries s = series_expand(e.gf.substitute(kAllOnes), o.terms);
      for (int n = 1; n <= o.terms; ++n)
        if (s[n] != MultiPoly(cardinality(n))) return fail(mismatch(e.id, n, MultiPoly(cardinality(n)), s[n]));
    });
  }
}

void suite_table1(Cases& cases, const VerifyOptions& o) {
  for (const auto& tau : table1_patterns()) {
    cases.run("F" + tau.str() + " vs brute force", 1, o.max_n, [&](const Fail& fail) {
      const XSeries s = series_expand(gf_table1(tau), o.max_n);
      for (int n = 1; n <= o.max_n; ++n) {
        const MultiPoly brute = pattern_distribution(tau, n, o.threads);
        if (brute != s[n]) return fail(mismatch("F" + tau.str(), n, brute, s[n]));
      }
    });
  }
}

void suite_theorems(Cases& cases, const VerifyOptions& o) {
  for (Family f : kAllFamilies) {
    cases.run(family_id(f) + " vs brute force", 1, o.max_n, [&](const Fail& fail) {
      const XSeries s = series_expand(gf_family(f), o.max_n);
      for (int n = 1; n <= o.max_n; ++n) {
        const MultiPoly brute = family_distribution(f, n, std::nullopt, o.threads);
        if (brute != s[n]) return fail(mismatch(family_id(f), n, brute, s[n]));
      }
    });
  }
  const int N = o.terms;
  auto expand = [N](const RationalGF& g, const Bindings& b) { return series_expand(g.substitute(b), N); };
  cases.run("C(p=q=r=1) = trun", 1, N, [&](const Fail& fail) {
    compare_series(expand(gf_trun(), {}), expand(gf_C(), {{Var::p, 1}, {Var::q, 1}, {Var::r, 1}}), 1, N, "C", fail);
  });
  cases.run("D(y=1,p=1) symmetric in q,r", 1, N, [&](const Fail& fail) {
    const XSeries s = expand(gf_D(), {{Var::y, 1}, {Var::p, 1}});
    for (int n = 1; n <= N; ++n) {
      std::vector<MultiPoly::Term> swapped;
      for (const auto& [key, c] : s[n].terms()) {
        ExponentVec e = ExponentVec::unpack(key);
        std::swap(e[Var::q], e[Var::r]);
        swapped.emplace_back(e.pack(), c);
      }
      const MultiPoly t = MultiPoly::from_terms(std::move(swapped));
      if (t != s[n]) return fail(mismatch("D", n, s[n], t));
    }
  });
  cases.run("E(y=1,p=1,r=q) = shortValley", 1, N, [&](const Fail& fail) {
    const XSeries e = series_expand(gf_E().substitute({{Var::y, 1}, {Var::p, 1}}), N);
    // r := q, coefficientwise
    std::vector<MultiPoly> merged;
    for (int n = 0; n <= N; ++n) {
      std::vector<MultiPoly::Term> terms;
      for (const auto& [key, c] : e[n].terms()) {
        ExponentVec v = ExponentVec::unpack(key);
        v[Var::q] = static_cast<std::uint16_t>(v[Var::q] + v[Var::r]);
        v[Var::r] = 0;
        terms.emplace_back(v.pack(), c);
      }
      merged.push_back(MultiPoly::from_terms(std::move(terms)));
    }
    compare_series(expand(gf_short_valley(), {}), XSeries(std::move(merged)), 1, N, "E", fail);
  });
  cases.run("C(q=r=1) = E(q=r=1)", 1, N, [&](const Fail& fail) {
    const Bindings b{{Var::q, 1}, {Var::r, 1}};
    compare_series(expand(gf_C(), b), expand(gf_E(), b), 1, N, "C vs E", fail);
  });
  cases.run("C(p=q=1) = D(p=q=1)", 1, N, [&](const Fail& fail) {
    const Bindings b{{Var::p, 1}, {Var::q, 1}};
    compare_series(expand(gf_C(), b), expand(gf_D(), b), 1, N, "C vs D", fail);
  });
  cases.run("B(q=r=1) = C(q=r=1)", 1, N, [&](const Fail& fail) {
    const Bindings b{{Var::q, 1}, {Var::r, 1}};
    compare_series(expand(gf_B(), b), expand(gf_C(), b), 1, N, "B vs C", fail);
  });
  cases.run("B(p=r=1) with q = C(p=q=1) with r", 1, N, [&](const Fail& fail) {
    // 211 in B is marked by q, 221 in C by r: compare after renaming.
    const XSeries bq = expand(gf_B(), {{Var::p, 1}, {Var::r, 1}});
    const XSeries cr = expand(gf_C(), {{Var::p, 1}, {Var::q, 1}});
    for (int n = 1; n <= N; ++n) {
      std::vector<MultiPoly::Term> terms;
      for (const auto& [key, c] : cr[n].terms()) {
        ExponentVec v = ExponentVec::unpack(key);
        v[Var::q] = v[Var::r];
        v[Var::r] = 0;
        terms.emplace_back(v.pack(), c);
      }
      const MultiPoly renamed = MultiPoly::from_terms(std::move(terms));
      if (renamed != bq[n]) return fail(mismatch("B vs C", n, bq[n], renamed));
    }
  });
}

// No brute force here, so --max-n only raises the series order.
void suite_functional(Cases& cases, const VerifyOptions& o) {
  const int order = std::max(o.terms, o.max_n);
  for (Family f : kAllFamilies) {
    cases.run("functional equation " + family_id(f), 0, order, [&](const Fail& fail) {
      const XSeries res = check_functional_equation(f, static_cast<std::size_t>(order));
      for (int n = 0; n <= order; ++n)
        if (!res[n].is_zero()) return fail("residual at x^" + std::to_string(n) + ": " + res[n].str());
    });
  }
}

void suite_recurrences(Cases& cases, const VerifyOptions& o) {
  for (Family f : kAllFamilies) {
    const std::string id(1, static_cast<char>('a' + static_cast<int>(f)));
    cases.run(id + "-array vs brute force", 1, o.max_n, [&](const Fail& fail) {
      if (auto m = array_vs_oracle(build(f, o.max_n), o.max_n)) fail(*m);
    });
    cases.run(id + "-array vs " + family_id(f) + "(x,y)", 1, o.terms, [&](const Fail& fail) {
      compare_series(series_expand(gf_family(f), o.terms), build(f, o.terms).to_bivariate_series(), 1, o.terms,
                     family_id(f), fail);
    });
    cases.run(id + "-array nonnegative, row sums", 1, o.terms, [&](const Fail& fail) {
      const StatArray s = build(f, o.terms);
      for (int n = 1; n <= o.terms; ++n) {
        for (int m = 1; m <= n; ++m)
          if (!s.at(n, m).has_nonnegative_coefficients())
            return fail("negative coefficient at n=" + std::to_string(n) + " m=" + std::to_string(m));
        const BigInt total = s.row_total(n).substitute(kAllOnes).constant_term();
        if (total != cardinality(n)) return fail(mismatch("row sum", n, cardinality(n), total));
      }
    });
    cases.run(id + " u/v/w recurrences vs row sums", 1, o.terms, [&](const Fail&) { build_uvw(f, o.terms); });
    cases.run(id + " u/v/w vs closed forms", 1, o.terms, [&](const Fail& fail) {
      const UVWSeq seq = uvw_from_recurrence(f, o.terms);
      const auto& forms = gf_uvw(f);
      if (forms.u) compare_series(series_expand(*forms.u, o.terms), seq.u_series(), 1, o.terms, "U", fail);
      if (forms.v) compare_series(series_expand(*forms.v, o.terms), seq.v_series(), 1, o.terms, "V", fail);
      if (forms.w) compare_series(series_expand(*forms.w, o.terms), seq.w_series(), 1, o.terms, "W", fail);
    });
  }
  cases.run("e-array = c-array at q=r=1", 1, o.terms, [&](const Fail& fail) {
    const Bindings b{{Var::q, 1}, {Var::r, 1}};
    const StatArray c = build_c(o.terms);
    const StatArray e = build_e(o.terms);
    for (int n = 1; n <= o.terms; ++n)
      for (int m = 1; m <= n; ++m)
        if (c.at(n, m).substitute(b) != e.at(n, m).substitute(b))
          return fail(mismatch("m=" + std::to_string(m), n, c.at(n, m).substitute(b), e.at(n, m).substitute(b)));
  });
}

void suite_totals(Cases& cases, const VerifyOptions& o) {
  for (const auto& tau : table1_patterns()) {
    cases.run("tot(" + tau.str() + ") vs brute force", 2, o.max_n, [&](const Fail& fail) {
      for (int n = 2; n <= o.max_n; ++n) {
        const MultiPoly d = pattern_distribution(tau, n, o.threads);
        const BigInt brute = d.derivative(Var::q).substitute({{Var::q, 1}}).constant_term();
        if (brute != tot(tau, n)) return fail(mismatch("tot", n, tot(tau, n), brute));
      }
    });
    cases.run("tot(" + tau.str() + ") vs dF/dq", 2, o.terms, [&](const Fail& fail) {
      const XSeries s = series_expand(gf_table1(tau), o.terms);
      for (int n = 2; n <= o.terms; ++n)
        if (coefficient_dq_at_1(s, n) != tot(tau, n)) return fail(mismatch("tot", n, tot(tau, n), coefficient_dq_at_1(s, n)));
    });
  }
  auto P = [](const char* s) { return Pattern::parse(s); };
  cases.run("shift identities", 3, o.terms, [&](const Fail& fail) {
    for (int n = 3; n <= o.terms; ++n) {
      if (tot(P("111"), n) != tot(P("11"), n - 1)) return fail("tot(111) != tot(11) shifted at n=" + std::to_string(n));
      if (tot(P("122"), n) != tot(P("12"), n - 1)) return fail("tot(122) != tot(12) shifted at n=" + std::to_string(n));
      if (tot(P("211"), n) != tot(P("21"), n - 1)) return fail("tot(211) != tot(21) shifted at n=" + std::to_string(n));
      if (tot(P("212"), n) != tot(P("21"), n - 1)) return fail("tot(212) != tot(21) shifted at n=" + std::to_string(n));
    }
  });
  cases.run("tot(231) = tot(221), tot(211) = tot(212)", 2, o.terms, [&](const Fail& fail) {
    for (int n = 2; n <= o.terms; ++n) {
      if (tot(P("231"), n) != tot(P("221"), n)) return fail("tot(231) != tot(221) at n=" + std::to_string(n));
      if (tot(P("211"), n) != tot(P("212"), n)) return fail("tot(211) != tot(212) at n=" + std::to_string(n));
    }
  });
  cases.run("trun sum vs brute force", 1, o.max_n, [&](const Fail& fail) {
    for (int n = 1; n <= o.max_n; ++n) {
      const MultiPoly d = distribution(n, MarkSpec{{}, true}, std::nullopt, o.threads);
      const BigInt brute = d.derivative(Var::y).substitute({{Var::y, 1}}).constant_term();
      if (brute != trun_sum(n)) return fail(mismatch("trun sum", n, trun_sum(n), brute));
    }
  });
  cases.run("trun sum vs U_A and trun GF", 1, o.terms, [&](const Fail& fail) {
    const XSeries u = series_expand(gf_uvw(Family::a).u->substitute(kAllOnes), o.terms);
    const XSeries t = dy_at_1(series_expand(gf_trun(), o.terms));
    for (int n = 1; n <= o.terms; ++n) {
      if (u[n].constant_term() != trun_sum(n)) return fail(mismatch("U_A", n, trun_sum(n), u[n].constant_term()));
      if (t[n].constant_term() != trun_sum(n)) return fail(mismatch("trun GF", n, trun_sum(n), t[n].constant_term()));
    }
  });
}

void suite_avoiders(Cases& cases, const VerifyOptions& o) {
  for (const auto& tau : avoider_patterns()) {
    const int lo = avoiders_min_n(tau);
    cases.run("f(" + tau.str() + ")", lo, o.max_n, [&](const Fail& fail) {
      const XSeries s = series_expand(gf_table1(tau).substitute({{Var::q, 0}}), o.max_n);
      for (int n = lo; n <= o.max_n; ++n) {
        const BigInt brute = iter_avoiders(n, tau).count();
        if (brute != avoiders(tau, n)) return fail(mismatch("brute force", n, avoiders(tau, n), brute));
        if (s[n].constant_term() != avoiders(tau, n))
          return fail(mismatch("[x^n] at q=0", n, avoiders(tau, n), s[n].constant_term()));
      }
    });
  }
  cases.run("f(11) = 2^(n-2)", 2, o.max_n, [&](const Fail& fail) {
    const Pattern p11 = Pattern::parse("11");
    for (int n = 2; n <= o.max_n; ++n) {
      const BigInt brute = iter_avoiders(n, p11).count();
      if (brute != BigInt(1) << (n - 2)) return fail(mismatch("f(11)", n, BigInt(1) << (n - 2), brute));
    }
  });
}

// (top, bottom) of every descent, left to right.
std::vector<std::pair<Letter, Letter>> descent_pairs(const CatalanWord& w) {
  std::vector<std::pair<Letter, Letter>> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.emplace_back(w[i], w[i + 1]);
  return out;
}

// Increasing-run segments together with their first letters.
std::vector<std::pair<Segment, Letter>> run_heads(const CatalanWord& w) {
  std::vector<std::pair<Segment, Letter>> out;
  for (const auto& seg : increasing_runs(w)) out.emplace_back(seg, w[seg.begin]);
  return out;
}

void suite_bijections(Cases& cases, const VerifyOptions& o) {
  const Pattern p11 = Pattern::parse("11");
  const Pattern p123 = Pattern::parse("123");
  cases.run("prime map", 2, o.max_n, [&](const Fail& fail) {
    for (int n = 2; n <= o.max_n; ++n) {
      std::set<CatalanWord> image;
      for (const auto& b : binary_words(n)) {
        const CatalanWord w = prime_map(b);
        if (!is_flattened(w) || count_pattern(w, p11) != 0) return fail("image of " + b.str() + " is not level-free flattened");
        if (prime_inverse(w) != b) return fail("round trip fails for " + b.str());
        std::size_t one_runs = 0;
        for (std::size_t i = 0; i < b.size(); ++i)
          if (b.bits()[i] == 1 && (i == 0 || b.bits()[i - 1] == 0)) ++one_runs;
        if (one_runs != statistics(w).des) return fail("runs of 1 != descents for " + b.str());
        const std::size_t letter_runs_b = letter_runs(std::vector<Letter>(b.bits().begin(), b.bits().end())).size();
        if (count_pattern(w, p123) != static_cast<std::size_t>(n - 1) - letter_runs_b)
          return fail("#123 != n-1-run for " + b.str());
        image.insert(w);
      }
      const auto avoid = collect(iter_avoiders(n, p11));
      if (image != std::set<CatalanWord>(avoid.begin(), avoid.end())) return fail("image != F_n(11) at n=" + std::to_string(n));
    }
  });
  cases.run("trun map", 2, o.max_n, [&](const Fail& fail) {
    for (int n = 2; n <= o.max_n; ++n) {
      const auto domain = trun_designations(n);
      if (BigInt(domain.size()) != trun_sum(n)) return fail(mismatch("|F_n*|", n, trun_sum(n), BigInt(domain.size())));
      std::set<CatalanWord> image;
      for (const auto& mw : domain) {
        const CatalanWord w = trun_map(mw);
        if (!is_flattened(w)) return fail("image of " + mw.word.str() + " is not flattened");
        if (trun_map_inverse(w) != mw) return fail("round trip fails for " + mw.word.str());
        image.insert(w);
      }
      if (BigInt(image.size()) != cardinality(n) - 1 || image.count(CatalanWord(std::vector<Letter>(n, 1))))
        return fail("image is not F_n - {1^n} at n=" + std::to_string(n));
    }
  });
  struct Invol {
    const char* name;
    CatalanWord (*map)(const CatalanWord&);
    const char* from;
    const char* to;
  };
  const Invol invols[] = {{"tilde", tilde, "112", "122"}, {"hat", hat, "211", "221"}, {"swap_231_221", swap_231_221, "231", "221"}};
  for (const auto& inv : invols) {
    cases.run(std::string(inv.name) + " involution", 1, o.max_n, [&](const Fail& fail) {
      const Pattern from = Pattern::parse(inv.from);
      const Pattern to = Pattern::parse(inv.to);
      for (int n = 1; n <= o.max_n; ++n)
        for (const auto& w : collect(iter_flattened(n))) {
          const CatalanWord img = inv.map(w);
          if (!is_flattened(img)) return fail(w.str() + " maps outside F_n");
          if (inv.map(img) != w) return fail(w.str() + " is not fixed by applying twice");
          if (count_pattern(w, from) != count_pattern(img, to) || count_pattern(w, to) != count_pattern(img, from))
            return fail(std::string("#") + inv.from + "/#" + inv.to + " not swapped at " + w.str());
          if (inv.map == swap_231_221 && trun(w) != trun(img)) return fail("trun changed at " + w.str());
          if (inv.map == hat && descent_pairs(w) != descent_pairs(img))
            return fail("descent tops/bottoms changed at " + w.str());
          if (inv.map == tilde && run_heads(w) != run_heads(img)) return fail("run structure changed at " + w.str());
        }
    });
  }
  cases.run("valley map", 2, o.max_n, [&](const Fail& fail) {
    const Pattern p312 = Pattern::parse("312");
    for (int n = 2; n <= o.max_n; ++n) {
      const auto domain = marked_occurrences(n, p312);
      std::set<MarkedWord> image;
      for (const auto& mw : domain) {
        const MarkedWord v = valley_map(mw);
        if (!is_flattened(v.word) || valley_at(v.word, v.mark) == 0) return fail("bad image of " + mw.word.str());
        if (valley_map_inverse(v) != mw) return fail("round trip fails for " + mw.word.str());
        image.insert(v);
      }
      const auto valleys = marked_valleys(n - 1);
      if (image != std::set<MarkedWord>(valleys.begin(), valleys.end()))
        return fail("image != marked valleys of F_" + std::to_string(n - 1));
      if (BigInt(domain.size()) != tot(p312, n)) return fail(mismatch("tot(312)", n, tot(p312, n), BigInt(domain.size())));
    }
  });
}

void suite_equidistribution(Cases& cases, const VerifyOptions& o) {
  auto P = [](const char* s) { return Pattern::parse(s); };
  cases.run("112 ~ 122", 1, o.max_n, [&](const Fail& fail) {
    for (int n = 1; n <= o.max_n; ++n)
      if (pattern_distribution(P("112"), n, o.threads) != pattern_distribution(P("122"), n, o.threads))
        return fail("distributions differ at n=" + std::to_string(n));
  });
  cases.run("211 ~ 221 ~ 231", 1, o.max_n, [&](const Fail& fail) {
    for (int n = 1; n <= o.max_n; ++n) {
      const MultiPoly a = pattern_distribution(P("211"), n, o.threads);
      if (a != pattern_distribution(P("221"), n, o.threads) || a != pattern_distribution(P("231"), n, o.threads))
        return fail("distributions differ at n=" + std::to_string(n));
    }
  });
  // Symmetric joint distributions: swap the exponents of q and r.
  auto symmetric = [&](const char* a, const char* b, bool with_trun, const Fail& fail) {
    for (int n = 1; n <= o.max_n; ++n) {
      const MultiPoly d = distribution(n, MarkSpec{{{Var::q, P(a)}, {Var::r, P(b)}}, with_trun}, std::nullopt, o.threads);
      const MultiPoly e = distribution(n, MarkSpec{{{Var::q, P(b)}, {Var::r, P(a)}}, with_trun}, std::nullopt, o.threads);
      if (d != e) return fail(std::string("(#") + a + ",#" + b + ") not symmetric at n=" + std::to_string(n));
    }
  };
  cases.run("(#112,#122) symmetric", 1, o.max_n, [&](const Fail& fail) { symmetric("112", "122", false, fail); });
  cases.run("(#211,#221) symmetric", 1, o.max_n, [&](const Fail& fail) { symmetric("211", "221", false, fail); });
  cases.run("(trun,#231,#221) symmetric", 1, o.max_n, [&](const Fail& fail) { symmetric("231", "221", true, fail); });
  cases.run("tot(211) = tot(212), distributions differ", 2, o.terms, [&](const Fail& fail) {
    for (int n = 2; n <= o.terms; ++n)
      if (tot(P("211"), n) != tot(P("212"), n)) return fail("totals differ at n=" + std::to_string(n));
    for (int n = 1; n <= o.max_n; ++n)
      if (pattern_distribution(P("211"), n) != pattern_distribution(P("212"), n)) return;
    fail("no n <= " + std::to_string(o.max_n) + " separates the 211 and 212 distributions");
  });
}

using SuiteFn = void (*)(Cases&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> list{
      {"cardinality", suite_cardinality}, {"table1", suite_table1},       {"theorems", suite_theorems},
      {"functional", suite_functional},   {"recurrences", suite_recurrences}, {"totals", suite_totals},
      {"avoiders", suite_avoiders},       {"bijections", suite_bijections}, {"equidistribution", suite_equidistribution},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts) {
  if (opts.max_n < 1) throw InvalidInput("max-n must be at least 1");
  if (opts.terms < 1) throw InvalidInput("terms must be at least 1");
  if (opts.max_n > kMaxBruteForce && suite != "functional")
    throw InvalidInput("max-n above " + std::to_string(kMaxBruteForce) + " is only accepted by the functional suite");
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.suite = suite;
  Cases cases(report.cases);
  bool found = false;
  for (const auto& [name, fn] : suites())
    if (suite == "all" || suite == name) {
      fn(cases, opts);
      found = true;
    }
  if (!found) throw InvalidInput("unknown suite '" + suite + "'");
  if (opts.timing) report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace flatcat
