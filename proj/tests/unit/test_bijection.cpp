#include "doctest.h"

#include "flatcat/bijection.hpp"
#include "flatcat/enumerate.hpp"
#include "flatcat/errors.hpp"

using namespace flatcat;

namespace {
CatalanWord W(const char* s) { return CatalanWord::parse(s); }
}  // namespace

TEST_CASE("prime map") {
  CHECK(prime_map(BinaryWord::parse("0,0,0,0")) == W("1,2,3,4,5"));
  CHECK(prime_map(BinaryWord::parse("0,0")) == W("1,2,3"));
  CHECK(prime_map(BinaryWord::parse("0,1")) == W("1,2,1"));
  CHECK(prime_inverse(W("1,2,1")) == BinaryWord::parse("0,1"));
  CHECK_THROWS_AS(prime_inverse(W("1,1,2")), InvalidInput);
  CHECK_THROWS_AS(BinaryWord::parse("1,0"), InvalidInput);
  for (int n = 2; n <= 10; ++n)
    for (const auto& b : binary_words(n)) CHECK(prime_inverse(prime_map(b)) == b);
}

TEST_CASE("trun map") {
  CHECK(trun_map({W("1,2,3"), 2}) == W("1,2,3"));
  CHECK_THROWS_AS(trun_map({W("1,2,3"), 0}), InvalidInput);
  CHECK_THROWS_AS(trun_map({W("1,2,1,1"), 3}), InvalidInput);
  CHECK_THROWS_AS(trun_map_inverse(W("1,1,1")), InvalidInput);
  for (int n = 2; n <= 8; ++n) {
    const auto dom = trun_designations(n);
    CHECK(dom.size() == iter_flattened(n).count() - 1);
    for (const auto& mw : dom) CHECK(trun_map_inverse(trun_map(mw)) == mw);
  }
}

TEST_CASE("involutions") {
  CHECK(tilde(W("1,1,2")) == W("1,2,2"));
  CHECK(tilde(W("1,2,3")) == W("1,2,3"));
  CHECK(hat(W("1,2,2,1")) == W("1,2,1,1"));
  CHECK(hat(W("1,1,2,3")) == W("1,1,2,3"));
  CHECK(swap_231_221(W("1,2,3,1")) == W("1,2,2,1"));
  CHECK(swap_231_221(W("1,2,2,1")) == W("1,2,3,1"));
  CHECK(swap_231_221(W("1,1,2")) == W("1,1,2"));
  CHECK_THROWS_AS(tilde(W("1,2,1,2,3,2,3,4,1,2,2,3")), InvalidInput);
}

TEST_CASE("valley map") {
  const MarkedWord v = valley_map({W("1,2,3,1,2"), 2});
  CHECK(v.word == W("1,2,1,2"));
  CHECK(v.mark == 1);
  CHECK(valley_map_inverse(v) == MarkedWord{W("1,2,3,1,2"), 2});
  CHECK_THROWS_AS(valley_map({W("1,2,3,1,2"), 1}), InvalidInput);
  CHECK_THROWS_AS(valley_map_inverse({W("1,2,1,2"), 0}), InvalidInput);
  CHECK(marked_occurrences(5, Pattern::parse("312")).size() == 1);
  for (int n = 4; n <= 8; ++n)
    CHECK(marked_occurrences(n, Pattern::parse("312")).size() == marked_valleys(n - 1).size());
}
