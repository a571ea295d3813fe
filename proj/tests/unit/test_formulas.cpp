#include "doctest.h"

#include "flatcat/catalog.hpp"
#include "flatcat/errors.hpp"
#include "flatcat/formulas.hpp"
#include "../reference.hpp"

using namespace flatcat;

TEST_CASE("binomials") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(5, 6) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(60, 30).str() == "118264581564861424");
}

TEST_CASE("cardinality") {
  CHECK(cardinality(1) == 1);
  CHECK(cardinality(6) == 122);
  CHECK(cardinality(14) == 797162);
  CHECK_THROWS_AS(cardinality(0), InvalidInput);
  CHECK(oeis_label("cardinality") == "A007051");
}

TEST_CASE("totals at small n") {
  CHECK(tot(Pattern::parse("123"), 3) == 1);
  CHECK(tot(Pattern::parse("11"), 3) == 4);
  CHECK(tot(Pattern::parse("312"), 5) == 1);
  CHECK(tot(Pattern::parse("312"), 6) == 8);
  for (const auto& tau : table1_patterns()) {
    CAPTURE(tau.str());
    if (tau.size() == 3) CHECK(tot(tau, 2) == 0);
  }
  CHECK_THROWS_AS(tot(Pattern::parse("11"), 1), InvalidInput);
  CHECK_THROWS_AS(tot(Pattern::parse("132"), 5), NotInCatalog);
}

TEST_CASE("totals against direct counting") {
  for (const auto& tau : table1_patterns()) {
    const ref::Pat rp = ref::pat(tau.str());
    for (int n = 2; n <= 9; ++n) {
      long long sum = 0;
      for (const auto& w : ref::flattened_words(n)) sum += ref::count(w, rp);
      CAPTURE(tau.str());
      CAPTURE(n);
      CHECK(tot(tau, n) == sum);
    }
  }
}

TEST_CASE("trun sum") {
  for (int n = 1; n <= 9; ++n) {
    long long sum = 0;
    for (const auto& w : ref::flattened_words(n)) sum += ref::trun(w) - 1;
    CHECK(trun_sum(n) == sum);
  }
}

TEST_CASE("avoider counts") {
  CHECK(avoiders(Pattern::parse("11"), 1) == 1);
  CHECK(avoiders(Pattern::parse("11"), 5) == 8);
  CHECK(avoiders(Pattern::parse("121"), 3) == 4);
  CHECK(avoiders_min_n(Pattern::parse("111")) == 3);
  CHECK_THROWS_AS(avoiders(Pattern::parse("111"), 2), InvalidInput);
  CHECK_THROWS_AS(avoiders(Pattern::parse("12"), 4), NotInCatalog);
  for (const auto& tau : avoider_patterns()) {
    const ref::Pat rp = ref::pat(tau.str());
    for (int n = avoiders_min_n(tau); n <= 9; ++n) {
      long long c = 0;
      for (const auto& w : ref::flattened_words(n)) c += ref::count(w, rp) == 0;
      CAPTURE(tau.str());
      CAPTURE(n);
      CHECK(avoiders(tau, n) == c);
    }
  }
}
